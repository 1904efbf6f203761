#pragma once

#include "loopforge/brackets.hpp"

#include <map>
#include <string>
#include <vector>

namespace loopforge {

// One of the atoms a formula quantifies over: a, b_1..b_p or c_1..c_q.
struct BlockVar {
  char block = 'a';  // 'a', 'b' or 'c'
  int index = 0;     // 1-based within its block; 0 for singleton blocks

  friend auto operator<=>(const BlockVar&, const BlockVar&) = default;
  std::string to_string() const;
};

// A deviation with atoms as arguments: the leaves of a decomposition.
struct ElementaryBracket {
  BaseOp base = BaseOp::Associator;
  DeviationIndices indices;
  std::vector<BlockVar> args;

  int weight() const { return static_cast<int>(args.size()); }
  BracketExpr to_bracket_expr() const;  // slots numbered by argument position
  std::string to_string() const;
};

// A product of elementary brackets with an explicit parenthesization,
// obtained by repeatedly applying X(uv) = (X(u) X(v)) * dev to the block
// arguments of a base bracket until every argument is an atom. Evaluating
// the tree in any loop reproduces the base bracket exactly.
struct PiDecomposition {
  struct Node {
    int leaf = -1;  // index into `leaves` when >= 0
    int left = -1;  // child node indices otherwise
    int right = -1;
  };

  BaseOp base = BaseOp::Associator;
  int p = 0;
  int q = 0;  // 0 when the base has no c-block
  std::vector<ElementaryBracket> leaves;
  std::vector<Node> nodes;
  int root = -1;

  std::string to_string() const;
};

// The associator (a, b_1...b_p, c_1...c_q) expanded by splitting argument 2
// and then argument 3; blocks are read right-normed. Leaves: one deviation
// per pair of nonempty subsets (I, J), so (2^p - 1)(2^q - 1) in total.
PiDecomposition decompose_associator(int p, int q);

// The anti-associator (a_1...a_p, b, c_1...c_q)' expanded in arguments 1, 3.
PiDecomposition decompose_anti_associator(int p, int q);

// The commutator [a_1...a_p, b] expanded in argument 1; 2^p - 1 leaves.
PiDecomposition decompose_commutator(int p);

template <class Ctx>
using BlockAssignment = std::map<BlockVar, typename Ctx::Element>;

template <class Ctx>
typename Ctx::Element eval_elementary(const ElementaryBracket& leaf,
                                      const BlockAssignment<Ctx>& assignment,
                                      const Ctx& ctx) {
  std::vector<typename Ctx::Element> args;
  args.reserve(leaf.args.size());
  for (const BlockVar& v : leaf.args) {
    auto it = assignment.find(v);
    if (it == assignment.end())
      throw DomainError("eval_elementary: unassigned variable " + v.to_string());
    args.push_back(it->second);
  }
  return deviation(leaf.base, leaf.indices, args, ctx);
}

// Value of the full product tree in the loop.
template <class Ctx>
typename Ctx::Element eval_pi(const PiDecomposition& pi,
                              const BlockAssignment<Ctx>& assignment, const Ctx& ctx) {
  std::vector<typename Ctx::Element> leaf_values;
  leaf_values.reserve(pi.leaves.size());
  for (const auto& leaf : pi.leaves) leaf_values.push_back(eval_elementary(leaf, assignment, ctx));

  std::function<typename Ctx::Element(int)> go = [&](int node) -> typename Ctx::Element {
    const auto& n = pi.nodes[node];
    if (n.leaf >= 0) return leaf_values[n.leaf];
    return ctx.mul(go(n.left), go(n.right));
  };
  return go(pi.root);
}

}  // namespace loopforge
