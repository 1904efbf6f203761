#include "loopforge/term.hpp"

#include <cctype>

namespace loopforge {

const std::shared_ptr<const LoopTerm::Node>& LoopTerm::one_node() {
  static const std::shared_ptr<const Node> node =
      std::make_shared<const Node>(Node{TermKind::One, 0, nullptr, nullptr});
  return node;
}

LoopTerm LoopTerm::gen(int id) {
  if (id < 1) throw DomainError("generator id must be >= 1");
  return LoopTerm(std::make_shared<const Node>(Node{TermKind::Gen, id, nullptr, nullptr}));
}

LoopTerm LoopTerm::mul(LoopTerm left, LoopTerm right) {
  return LoopTerm(std::make_shared<const Node>(
      Node{TermKind::Mul, 0, std::move(left.node_), std::move(right.node_)}));
}

LoopTerm LoopTerm::ldiv(LoopTerm left, LoopTerm right) {
  return LoopTerm(std::make_shared<const Node>(
      Node{TermKind::LDiv, 0, std::move(left.node_), std::move(right.node_)}));
}

LoopTerm LoopTerm::rdiv(LoopTerm left, LoopTerm right) {
  return LoopTerm(std::make_shared<const Node>(
      Node{TermKind::RDiv, 0, std::move(left.node_), std::move(right.node_)}));
}

bool LoopTerm::equal(const LoopTerm& a, const LoopTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::One:
      return true;
    case TermKind::Gen:
      return a.gen_id() == b.gen_id();
    default:
      return equal(a.left(), b.left()) && equal(a.right(), b.right());
  }
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  LoopTerm run() {
    LoopTerm term = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return term;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    return text_[pos_];
  }

  LoopTerm expr() {
    const char c = peek();
    if (c == '1') {
      ++pos_;
      return LoopTerm::one();
    }
    if (c == 'x') return generator();
    if (c == '(') {
      ++pos_;
      LoopTerm lhs = expr();
      const char op = peek();
      if (op != '*' && op != '\\' && op != '/')
        throw ParseError("expected '*', '\\' or '/'", pos_);
      ++pos_;
      LoopTerm rhs = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      if (op == '*') return LoopTerm::mul(std::move(lhs), std::move(rhs));
      if (op == '\\') return LoopTerm::ldiv(std::move(lhs), std::move(rhs));
      return LoopTerm::rdiv(std::move(lhs), std::move(rhs));
    }
    throw ParseError("expected '1', a generator or '('", pos_);
  }

  LoopTerm generator() {
    const std::size_t start = pos_;
    ++pos_;  // consume 'x'
    std::size_t digits = 0;
    long long id = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      id = id * 10 + (text_[pos_] - '0');
      if (id > 1'000'000) throw ParseError("generator index out of range", start);
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw ParseError("expected digits after 'x'", pos_);
    if (id < 1) throw ParseError("unbound generator 'x0' (indices start at 1)", start);
    return LoopTerm::gen(static_cast<int>(id));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

LoopTerm parse_term(const std::string& text) { return Parser(text).run(); }

std::string format_term(const LoopTerm& term) {
  switch (term.kind()) {
    case TermKind::One:
      return "1";
    case TermKind::Gen:
      return "x" + std::to_string(term.gen_id());
    case TermKind::Mul:
      return "(" + format_term(term.left()) + "*" + format_term(term.right()) + ")";
    case TermKind::LDiv:
      return "(" + format_term(term.left()) + "\\" + format_term(term.right()) + ")";
    case TermKind::RDiv:
      return "(" + format_term(term.left()) + "/" + format_term(term.right()) + ")";
  }
  return {};
}

namespace {

void accumulate_degree(const LoopTerm& term, MultiDegree& out, long long sign) {
  switch (term.kind()) {
    case TermKind::One:
      return;
    case TermKind::Gen: {
      auto [it, inserted] = out.emplace(term.gen_id(), sign);
      if (!inserted) {
        it->second += sign;
        if (it->second == 0) out.erase(it);
      }
      return;
    }
    case TermKind::Mul:
      accumulate_degree(term.left(), out, sign);
      accumulate_degree(term.right(), out, sign);
      return;
    case TermKind::LDiv:
      accumulate_degree(term.left(), out, -sign);
      accumulate_degree(term.right(), out, sign);
      return;
    case TermKind::RDiv:
      accumulate_degree(term.left(), out, sign);
      accumulate_degree(term.right(), out, -sign);
      return;
  }
}

}  // namespace

MultiDegree degree(const LoopTerm& term) {
  MultiDegree out;
  accumulate_degree(term, out, 1);
  return out;
}

long long total_degree(const LoopTerm& term) {
  long long sum = 0;
  for (const auto& [gen, d] : degree(term)) sum += d;
  return sum;
}

void collect_generators(const LoopTerm& term, std::map<int, bool>& out) {
  switch (term.kind()) {
    case TermKind::One:
      return;
    case TermKind::Gen:
      out[term.gen_id()] = true;
      return;
    default:
      collect_generators(term.left(), out);
      collect_generators(term.right(), out);
  }
}

}  // namespace loopforge
