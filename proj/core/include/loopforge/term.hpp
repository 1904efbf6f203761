#pragma once

#include "loopforge/errors.hpp"

#include <map>
#include <memory>
#include <string>

namespace loopforge {

enum class TermKind { One, Gen, Mul, LDiv, RDiv };

// A word in a free loop: an immutable tree over *, \ and / with 1 and the
// generators x_i at the leaves. Value-semantic handle over shared nodes.
class LoopTerm {
 public:
  LoopTerm() : node_(one_node()) {}

  static LoopTerm one() { return LoopTerm(one_node()); }
  static LoopTerm gen(int id);
  static LoopTerm mul(LoopTerm left, LoopTerm right);
  static LoopTerm ldiv(LoopTerm left, LoopTerm right);  // left \ right
  static LoopTerm rdiv(LoopTerm left, LoopTerm right);  // left / right

  TermKind kind() const { return node_->kind; }
  int gen_id() const { return node_->gen; }
  LoopTerm left() const { return LoopTerm(node_->left); }
  LoopTerm right() const { return LoopTerm(node_->right); }

  bool is_binary() const { return kind() != TermKind::One && kind() != TermKind::Gen; }

  friend bool operator==(const LoopTerm& a, const LoopTerm& b) { return equal(a, b); }
  friend bool operator!=(const LoopTerm& a, const LoopTerm& b) { return !equal(a, b); }

 private:
  struct Node {
    TermKind kind;
    int gen = 0;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit LoopTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static const std::shared_ptr<const Node>& one_node();
  static bool equal(const LoopTerm& a, const LoopTerm& b);

  std::shared_ptr<const Node> node_;
};

// Per-generator word degree; generators absent from the map have degree 0.
using MultiDegree = std::map<int, long long>;

// Grammar (whitespace insignificant, every binary application parenthesized):
//   atom := "1" | "x" digits
//   expr := atom | "(" expr op expr ")"
//   op   := "*" | "\" | "/"
// Throws ParseError with the offending position.
LoopTerm parse_term(const std::string& text);

// Inverse of parse_term: emits the fully parenthesized form.
std::string format_term(const LoopTerm& term);

// The degree homomorphism: additive over *, anti-additive over the divisions
// (delta(u\v) = delta(v) - delta(u), delta(u/v) = delta(u) - delta(v)).
MultiDegree degree(const LoopTerm& term);

// Total degree: the sum of the per-generator degrees.
long long total_degree(const LoopTerm& term);

// Generator ids appearing in the term.
void collect_generators(const LoopTerm& term, std::map<int, bool>& out);

// Structural evaluation in any loop context. Ctx must provide an element
// type `Element` plus one()/mul()/ldiv()/rdiv() and may validate assigned
// elements via check_assignable().
template <class Ctx>
typename Ctx::Element eval_term(const LoopTerm& term, const Ctx& ctx,
                                const std::map<int, typename Ctx::Element>& assignment) {
  switch (term.kind()) {
    case TermKind::One:
      return ctx.one();
    case TermKind::Gen: {
      auto it = assignment.find(term.gen_id());
      if (it == assignment.end())
        throw DomainError("eval_term: no assignment for generator x" +
                          std::to_string(term.gen_id()));
      ctx.check_assignable(it->second);
      return it->second;
    }
    case TermKind::Mul:
      return ctx.mul(eval_term(term.left(), ctx, assignment),
                     eval_term(term.right(), ctx, assignment));
    case TermKind::LDiv:
      return ctx.ldiv(eval_term(term.left(), ctx, assignment),
                      eval_term(term.right(), ctx, assignment));
    case TermKind::RDiv:
      return ctx.rdiv(eval_term(term.left(), ctx, assignment),
                      eval_term(term.right(), ctx, assignment));
  }
  throw DomainError("eval_term: corrupt term");
}

}  // namespace loopforge
