#include "loopforge/json_io.hpp"

#include <nlohmann/json.hpp>

namespace loopforge {

json monomial_to_json(Monomial m) {
  if (m.is_unit()) throw DomainError("unit monomial has no serialized form");
  if (m.is_leaf()) return json(m.gen());
  return json::array({monomial_to_json(m.left()), monomial_to_json(m.right())});
}

Monomial monomial_from_json(const json& j) {
  if (j.is_number_integer()) return Monomial::generator(j.get<int>());
  if (j.is_array() && j.size() == 2)
    return Monomial::graft(monomial_from_json(j[0]), monomial_from_json(j[1]));
  throw DomainError("malformed monomial: expected generator id or pair");
}

json series_to_json(const Series& s) {
  json terms = json::array();
  for (const auto& [m, c] : s.terms())
    terms.push_back({{"coef", format_rational(c)}, {"mono", monomial_to_json(m)}});
  return json{{"order", s.order()},
              {"const", format_rational(s.constant())},
              {"terms", std::move(terms)}};
}

Series series_from_json(const json& j) {
  Series s(j.at("order").get<int>(), parse_rational(j.at("const").get<std::string>()));
  for (const auto& term : j.at("terms")) {
    s.add_term(monomial_from_json(term.at("mono")),
               parse_rational(term.at("coef").get<std::string>()));
  }
  return s;
}

json bracket_to_json(const BracketExpr& expr) {
  switch (expr.kind) {
    case BracketExpr::Kind::Slot:
      return json{{"slot", expr.slot}};
    case BracketExpr::Kind::Comm:
    case BracketExpr::Kind::Assoc: {
      json args = json::array();
      for (const auto& child : expr.children) args.push_back(bracket_to_json(child));
      return json{{"op", expr.kind == BracketExpr::Kind::Comm ? "comm" : "assoc"},
                  {"args", std::move(args)}};
    }
    case BracketExpr::Kind::Dev: {
      json args = json::array();
      for (const auto& child : expr.children) args.push_back(bracket_to_json(child));
      return json{{"op", "dev"},
                  {"base", to_string(expr.base)},
                  {"indices", expr.indices.alphas},
                  {"args", std::move(args)}};
    }
  }
  throw DomainError("bracket_to_json: corrupt expression");
}

BracketExpr bracket_from_json(const json& j) {
  if (j.contains("slot")) return BracketExpr::make_slot(j.at("slot").get<int>());
  const std::string op = j.at("op").get<std::string>();
  std::vector<BracketExpr> children;
  for (const auto& arg : j.at("args")) children.push_back(bracket_from_json(arg));
  if (op == "comm") {
    if (children.size() != 2) throw DomainError("comm takes 2 arguments");
    return BracketExpr::comm(std::move(children[0]), std::move(children[1]));
  }
  if (op == "assoc") {
    if (children.size() != 3) throw DomainError("assoc takes 3 arguments");
    return BracketExpr::assoc(std::move(children[0]), std::move(children[1]),
                              std::move(children[2]));
  }
  if (op == "dev") {
    BaseOp base = BaseOp::Associator;
    if (j.contains("base")) {
      const std::string name = j.at("base").get<std::string>();
      if (name == "assoc")
        base = BaseOp::Associator;
      else if (name == "antiassoc")
        base = BaseOp::AntiAssociator;
      else if (name == "comm")
        base = BaseOp::Commutator;
      else
        throw DomainError("unknown deviation base '" + name + "'");
    }
    DeviationIndices idx{j.at("indices").get<std::vector<int>>()};
    return BracketExpr::dev(base, std::move(idx), std::move(children));
  }
  throw DomainError("unknown bracket op '" + op + "'");
}

json loop_to_json(const CayleyLoop& loop) {
  json table = json::array();
  for (int i = 0; i < loop.size(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < loop.size(); ++j2) row.push_back(loop.mul(i, j2));
    table.push_back(std::move(row));
  }
  return json{{"n", loop.size()}, {"table", std::move(table)}};
}

CayleyLoop loop_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(table.size()) != n)
    throw DomainError("loop json: table size disagrees with n");
  return CayleyLoop::from_table(std::move(table));
}

CayleyLoop loop_from_text(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return loop_from_json(json::parse(text));
    break;
  }
  return CayleyLoop::parse(text);
}

}  // namespace loopforge
