#include "loopforge/brackets.hpp"

#include <algorithm>
#include <set>

namespace loopforge {

std::string to_string(BaseOp base) {
  switch (base) {
    case BaseOp::Associator: return "assoc";
    case BaseOp::AntiAssociator: return "antiassoc";
    case BaseOp::Commutator: return "comm";
  }
  return "?";
}

void DeviationIndices::validate(BaseOp base) const {
  for (int i = 0; i < level(); ++i) {
    const int bound = (i + 1) + ::loopforge::arity(base) - 1;
    if (alphas[i] < 1 || alphas[i] > bound)
      throw DomainError("deviation index alpha_" + std::to_string(i + 1) + " = " +
                        std::to_string(alphas[i]) + " out of range [1, " +
                        std::to_string(bound) + "]");
  }
}

BracketExpr BracketExpr::make_slot(int position) {
  BracketExpr e;
  e.kind = Kind::Slot;
  e.slot = position;
  return e;
}

BracketExpr BracketExpr::comm(BracketExpr a, BracketExpr b) {
  BracketExpr e;
  e.kind = Kind::Comm;
  e.children = {std::move(a), std::move(b)};
  return e;
}

BracketExpr BracketExpr::assoc(BracketExpr a, BracketExpr b, BracketExpr c) {
  BracketExpr e;
  e.kind = Kind::Assoc;
  e.children = {std::move(a), std::move(b), std::move(c)};
  return e;
}

BracketExpr BracketExpr::dev(BaseOp base, DeviationIndices idx,
                             std::vector<BracketExpr> children) {
  BracketExpr e;
  e.kind = Kind::Dev;
  e.base = base;
  e.indices = std::move(idx);
  e.children = std::move(children);
  return e;
}

int BracketExpr::weight() const {
  if (kind == Kind::Slot) return 1;
  int w = 0;
  for (const auto& child : children) w += child.weight();
  return w;
}

namespace {

void collect_slots(const BracketExpr& e, std::vector<int>& out) {
  if (e.kind == BracketExpr::Kind::Slot) {
    out.push_back(e.slot);
    return;
  }
  for (const auto& child : e.children) collect_slots(child, out);
}

void validate_nodes(const BracketExpr& e) {
  switch (e.kind) {
    case BracketExpr::Kind::Slot:
      if (e.slot < 1) throw DomainError("slot positions are 1-based");
      return;
    case BracketExpr::Kind::Comm:
      if (e.children.size() != 2) throw DomainError("commutator node needs 2 children");
      break;
    case BracketExpr::Kind::Assoc:
      if (e.children.size() != 3) throw DomainError("associator node needs 3 children");
      break;
    case BracketExpr::Kind::Dev:
      e.indices.validate(e.base);
      if (static_cast<int>(e.children.size()) != e.indices.arity_for(e.base))
        throw DomainError("deviation node has wrong number of children");
      break;
  }
  for (const auto& child : e.children) validate_nodes(child);
}

}  // namespace

void BracketExpr::validate() const {
  validate_nodes(*this);
  std::vector<int> slots;
  collect_slots(*this, slots);
  std::vector<int> sorted = slots;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    if (sorted[i] != i + 1)
      throw DomainError("bracket must use each slot 1..n exactly once");
}

std::string BracketExpr::to_string() const {
  switch (kind) {
    case Kind::Slot:
      return "s" + std::to_string(slot);
    case Kind::Comm:
      return "[" + children[0].to_string() + "," + children[1].to_string() + "]";
    case Kind::Assoc:
      return "(" + children[0].to_string() + "," + children[1].to_string() + "," +
             children[2].to_string() + ")";
    case Kind::Dev: {
      std::string out = base == BaseOp::Associator ? "(" : "(" + ::loopforge::to_string(base) + ";";
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += ",";
        out += children[i].to_string();
      }
      out += ")_{";
      for (std::size_t i = 0; i < indices.alphas.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(indices.alphas[i]);
      }
      return out + "}";
    }
  }
  return "?";
}

bool operator==(const BracketExpr& a, const BracketExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case BracketExpr::Kind::Slot:
      return a.slot == b.slot;
    case BracketExpr::Kind::Dev:
      if (a.base != b.base || !(a.indices == b.indices)) return false;
      [[fallthrough]];
    default:
      return a.children == b.children;
  }
}

namespace {

// Compositions of n into k ordered positive parts, lexicographic.
void compositions(int n, int k, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (k == 1) {
    current.push_back(n);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int first = 1; first + (k - 1) <= n; ++first) {
    current.push_back(first);
    compositions(n - first, k - 1, current, out);
    current.pop_back();
  }
}

// All index words of the given level for the associator base.
void index_words(int level, std::vector<int>& current, std::vector<DeviationIndices>& out) {
  if (static_cast<int>(current.size()) == level) {
    out.push_back(DeviationIndices{current});
    return;
  }
  const int i = static_cast<int>(current.size()) + 1;
  for (int alpha = 1; alpha <= i + 2; ++alpha) {
    current.push_back(alpha);
    index_words(level, current, out);
    current.pop_back();
  }
}

// Shapes of weight n with unlabeled slots (slot = 0 placeholders).
std::vector<BracketExpr> shapes(int n) {
  if (n == 1) return {BracketExpr::make_slot(1)};  // placeholder; relabeled later
  std::vector<BracketExpr> out;

  auto emit_children = [&](auto&& make_node, int child_count,
                           const std::vector<DeviationIndices>& index_choices) {
    std::vector<std::vector<int>> parts;
    std::vector<int> scratch;
    compositions(n, child_count, scratch, parts);
    for (const auto& part : parts) {
      // Cartesian product of per-child shape lists.
      std::vector<std::vector<BracketExpr>> lists;
      lists.reserve(part.size());
      for (int w : part) lists.push_back(shapes(w));
      std::vector<std::size_t> pick(part.size(), 0);
      while (true) {
        std::vector<BracketExpr> children;
        children.reserve(part.size());
        for (std::size_t i = 0; i < part.size(); ++i) children.push_back(lists[i][pick[i]]);
        for (const auto& idx : index_choices) make_node(children, idx);
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
          if (++pick[i] < lists[i].size()) break;
          pick[i] = 0;
        }
        if (i == pick.size()) break;
      }
    }
  };

  static const std::vector<DeviationIndices> no_indices = {DeviationIndices{}};

  emit_children(
      [&](const std::vector<BracketExpr>& ch, const DeviationIndices&) {
        out.push_back(BracketExpr::comm(ch[0], ch[1]));
      },
      2, no_indices);
  if (n >= 3)
    emit_children(
        [&](const std::vector<BracketExpr>& ch, const DeviationIndices&) {
          out.push_back(BracketExpr::assoc(ch[0], ch[1], ch[2]));
        },
        3, no_indices);
  for (int level = 1; level + 3 <= n; ++level) {
    std::vector<DeviationIndices> words;
    std::vector<int> scratch;
    index_words(level, scratch, words);
    emit_children(
        [&](const std::vector<BracketExpr>& ch, const DeviationIndices& idx) {
          out.push_back(BracketExpr::dev(BaseOp::Associator, idx, ch));
        },
        level + 3, words);
  }
  return out;
}

void relabel_slots(BracketExpr& e, int& next) {
  if (e.kind == BracketExpr::Kind::Slot) {
    e.slot = ++next;
    return;
  }
  for (auto& child : e.children) relabel_slots(child, next);
}

}  // namespace

std::vector<BracketExpr> enumerate_brackets(int weight, int cap) {
  if (weight < 2) throw DomainError("enumerate_brackets: weight must be >= 2");
  if (weight > cap)
    throw DomainError("enumerate_brackets: weight " + std::to_string(weight) +
                      " above cap " + std::to_string(cap));
  std::vector<BracketExpr> out = shapes(weight);
  for (auto& e : out) {
    int next = 0;
    relabel_slots(e, next);
    e.validate();
  }
  return out;
}

namespace {

LoopTerm commutator_term(const LoopTerm& a, const LoopTerm& b) {
  return LoopTerm::ldiv(LoopTerm::mul(b, a), LoopTerm::mul(a, b));
}

LoopTerm base_term(BaseOp base, const std::vector<LoopTerm>& args) {
  switch (base) {
    case BaseOp::Associator:
      return LoopTerm::ldiv(LoopTerm::mul(args[0], LoopTerm::mul(args[1], args[2])),
                            LoopTerm::mul(LoopTerm::mul(args[0], args[1]), args[2]));
    case BaseOp::AntiAssociator:
      return LoopTerm::ldiv(LoopTerm::mul(LoopTerm::mul(args[0], args[1]), args[2]),
                            LoopTerm::mul(args[0], LoopTerm::mul(args[1], args[2])));
    case BaseOp::Commutator:
      return commutator_term(args[0], args[1]);
  }
  throw DomainError("base_term: bad base");
}

}  // namespace

LoopTerm deviation_term(BaseOp base, const DeviationIndices& idx,
                        const std::vector<LoopTerm>& args) {
  idx.validate(base);
  if (static_cast<int>(args.size()) != idx.arity_for(base))
    throw DomainError("deviation_term: arity mismatch");
  if (idx.level() == 0) return base_term(base, args);

  DeviationIndices rest{std::vector<int>(idx.alphas.begin(), idx.alphas.end() - 1)};
  const int alpha = idx.alphas.back();
  auto lower = [&](const LoopTerm& x) {
    std::vector<LoopTerm> spliced;
    spliced.reserve(args.size() - 1);
    spliced.insert(spliced.end(), args.begin(), args.begin() + (alpha - 1));
    spliced.push_back(x);
    spliced.insert(spliced.end(), args.begin() + (alpha + 1), args.end());
    return deviation_term(base, rest, spliced);
  };
  const LoopTerm& u = args[alpha - 1];
  const LoopTerm& v = args[alpha];
  return LoopTerm::ldiv(LoopTerm::mul(lower(u), lower(v)), lower(LoopTerm::mul(u, v)));
}

LoopTerm bracket_to_term(const BracketExpr& expr) {
  switch (expr.kind) {
    case BracketExpr::Kind::Slot:
      return LoopTerm::gen(expr.slot);
    case BracketExpr::Kind::Comm:
      return commutator_term(bracket_to_term(expr.children[0]),
                             bracket_to_term(expr.children[1]));
    case BracketExpr::Kind::Assoc:
      return base_term(BaseOp::Associator, {bracket_to_term(expr.children[0]),
                                            bracket_to_term(expr.children[1]),
                                            bracket_to_term(expr.children[2])});
    case BracketExpr::Kind::Dev: {
      std::vector<LoopTerm> sub;
      sub.reserve(expr.children.size());
      for (const auto& child : expr.children) sub.push_back(bracket_to_term(child));
      return deviation_term(expr.base, expr.indices, sub);
    }
  }
  throw DomainError("bracket_to_term: corrupt expression");
}

}  // namespace loopforge
