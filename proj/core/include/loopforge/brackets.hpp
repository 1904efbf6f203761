#pragma once

#include "loopforge/errors.hpp"
#include "loopforge/term.hpp"

#include <functional>
#include <string>
#include <vector>

namespace loopforge {

// Base operation a deviation hierarchy is derived from.
enum class BaseOp { Associator, AntiAssociator, Commutator };

inline int arity(BaseOp base) { return base == BaseOp::Commutator ? 2 : 3; }
std::string to_string(BaseOp base);

// Index word of a deviation: level l >= 0 with alpha_i in [1, i + arity - 1]
// for each 1 <= i <= l. For the associator base this is the classical bound
// 0 < alpha_i <= i + 2.
struct DeviationIndices {
  std::vector<int> alphas;

  int level() const { return static_cast<int>(alphas.size()); }
  // Arity of the resulting deviation for the given base.
  int arity_for(BaseOp base) const { return level() + ::loopforge::arity(base); }

  void validate(BaseOp base) const;

  friend bool operator==(const DeviationIndices&, const DeviationIndices&) = default;
};

// Direct evaluators in any loop context.
template <class Ctx>
typename Ctx::Element commutator(const typename Ctx::Element& a,
                                 const typename Ctx::Element& b, const Ctx& ctx) {
  return ctx.ldiv(ctx.mul(b, a), ctx.mul(a, b));  // (ba) \ (ab)
}

template <class Ctx>
typename Ctx::Element associator(const typename Ctx::Element& a,
                                 const typename Ctx::Element& b,
                                 const typename Ctx::Element& c, const Ctx& ctx) {
  return ctx.ldiv(ctx.mul(a, ctx.mul(b, c)), ctx.mul(ctx.mul(a, b), c));
}

template <class Ctx>
typename Ctx::Element anti_associator(const typename Ctx::Element& a,
                                      const typename Ctx::Element& b,
                                      const typename Ctx::Element& c, const Ctx& ctx) {
  return ctx.ldiv(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
}

template <class Ctx>
typename Ctx::Element base_op(BaseOp base, const std::vector<typename Ctx::Element>& args,
                              const Ctx& ctx) {
  switch (base) {
    case BaseOp::Associator:
      return associator(args[0], args[1], args[2], ctx);
    case BaseOp::AntiAssociator:
      return anti_associator(args[0], args[1], args[2], ctx);
    case BaseOp::Commutator:
      return commutator(args[0], args[1], ctx);
  }
  throw DomainError("base_op: bad base");
}

// The deviation of level l derived from `base`, evaluated recursively:
// level l splits arguments alpha_l, alpha_l+1 of the level-(l-1) deviation.
template <class Ctx>
typename Ctx::Element deviation(BaseOp base, const DeviationIndices& idx,
                                const std::vector<typename Ctx::Element>& args,
                                const Ctx& ctx) {
  idx.validate(base);
  if (static_cast<int>(args.size()) != idx.arity_for(base))
    throw DomainError("deviation: expected " + std::to_string(idx.arity_for(base)) +
                      " arguments, got " + std::to_string(args.size()));
  if (idx.level() == 0) return base_op(base, args, ctx);

  DeviationIndices rest{std::vector<int>(idx.alphas.begin(), idx.alphas.end() - 1)};
  const int alpha = idx.alphas.back();  // 1-based split position
  auto lower = [&](const typename Ctx::Element& x) {
    std::vector<typename Ctx::Element> spliced;
    spliced.reserve(args.size() - 1);
    spliced.insert(spliced.end(), args.begin(), args.begin() + (alpha - 1));
    spliced.push_back(x);
    spliced.insert(spliced.end(), args.begin() + (alpha + 1), args.end());
    return deviation(base, rest, spliced, ctx);
  };
  const auto& u = args[alpha - 1];
  const auto& v = args[alpha];
  return ctx.ldiv(ctx.mul(lower(u), lower(v)), lower(ctx.mul(u, v)));
}

// k-ary function over a loop context.
template <class Ctx>
using LoopFunction = std::function<typename Ctx::Element(const std::vector<typename Ctx::Element>&)>;

// The deviation derived from phi with respect to argument `var` (1-based):
// the (k+1)-ary function (.., x, y, ..) -> (phi(..x..) phi(..y..)) \ phi(..xy..).
template <class Ctx>
LoopFunction<Ctx> derived_deviation(LoopFunction<Ctx> phi, int phi_arity, int var,
                                    const Ctx& ctx) {
  if (var < 1 || var > phi_arity) throw DomainError("derived_deviation: variable out of range");
  return [phi = std::move(phi), phi_arity, var, &ctx](
             const std::vector<typename Ctx::Element>& args) {
    if (static_cast<int>(args.size()) != phi_arity + 1)
      throw DomainError("derived deviation: arity mismatch");
    auto at = [&](const typename Ctx::Element& x) {
      std::vector<typename Ctx::Element> spliced;
      spliced.reserve(args.size() - 1);
      spliced.insert(spliced.end(), args.begin(), args.begin() + (var - 1));
      spliced.push_back(x);
      spliced.insert(spliced.end(), args.begin() + (var + 1), args.end());
      return phi(spliced);
    };
    const auto& u = args[var - 1];
    const auto& v = args[var];
    return ctx.ldiv(ctx.mul(at(u), at(v)), at(ctx.mul(u, v)));
  };
}

// A bracket of weight n: a tree of commutators, associators and deviations
// in which each of the n slots appears exactly once.
struct BracketExpr {
  enum class Kind { Slot, Comm, Assoc, Dev };

  Kind kind = Kind::Slot;
  int slot = 0;                              // for Kind::Slot, 1-based
  BaseOp base = BaseOp::Associator;          // for Kind::Dev
  DeviationIndices indices;                  // for Kind::Dev
  std::vector<BracketExpr> children;

  static BracketExpr make_slot(int position);
  static BracketExpr comm(BracketExpr a, BracketExpr b);
  static BracketExpr assoc(BracketExpr a, BracketExpr b, BracketExpr c);
  static BracketExpr dev(BaseOp base, DeviationIndices idx, std::vector<BracketExpr> children);

  int weight() const;

  // Checks every slot 1..weight appears exactly once and all deviation
  // indices are in range. Throws DomainError otherwise.
  void validate() const;

  std::string to_string() const;

  friend bool operator==(const BracketExpr&, const BracketExpr&);
};

// Evaluates the bracket on args[slot-1].
template <class Ctx>
typename Ctx::Element eval_bracket(const BracketExpr& expr,
                                   const std::vector<typename Ctx::Element>& args,
                                   const Ctx& ctx) {
  switch (expr.kind) {
    case BracketExpr::Kind::Slot:
      if (expr.slot < 1 || expr.slot > static_cast<int>(args.size()))
        throw DomainError("eval_bracket: slot out of range");
      return args[expr.slot - 1];
    case BracketExpr::Kind::Comm:
      return commutator(eval_bracket(expr.children[0], args, ctx),
                        eval_bracket(expr.children[1], args, ctx), ctx);
    case BracketExpr::Kind::Assoc:
      return associator(eval_bracket(expr.children[0], args, ctx),
                        eval_bracket(expr.children[1], args, ctx),
                        eval_bracket(expr.children[2], args, ctx), ctx);
    case BracketExpr::Kind::Dev: {
      std::vector<typename Ctx::Element> sub;
      sub.reserve(expr.children.size());
      for (const auto& child : expr.children) sub.push_back(eval_bracket(child, args, ctx));
      return deviation(expr.base, expr.indices, sub, ctx);
    }
  }
  throw DomainError("eval_bracket: corrupt expression");
}

// All brackets of weight n built from commutators, associators and
// associator deviations, slots numbered left to right. Deterministic order.
// Throws DomainError when n < 2 or n exceeds the cap.
std::vector<BracketExpr> enumerate_brackets(int weight, int cap = 6);

// Expands the bracket into a free-loop word, slot k becoming generator x_k.
LoopTerm bracket_to_term(const BracketExpr& expr);

// Expansion of a deviation applied to given argument words.
LoopTerm deviation_term(BaseOp base, const DeviationIndices& idx,
                        const std::vector<LoopTerm>& args);

}  // namespace loopforge
