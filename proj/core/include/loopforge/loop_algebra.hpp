#pragma once

#include "loopforge/cayley_loop.hpp"
#include "loopforge/rational.hpp"

#include <vector>

namespace loopforge {

// Elements of the rational loop algebra QL as dense coefficient vectors
// indexed by the loop elements.
using AlgVec = std::vector<Rational>;

// Algebra + loop operations bundled for the generic formula engine.
struct CayleyAlgebraContext {
  const CayleyLoop& loop;

  using LoopElem = int;
  using LoopCtx = CayleyLoop;
  using AlgElem = AlgVec;

  const CayleyLoop& loop_ctx() const { return loop; }

  AlgElem zero() const { return AlgVec(loop.size(), Rational(0)); }
  AlgElem one() const { return embed(0); }
  AlgElem embed(int x) const {
    AlgVec v(loop.size(), Rational(0));
    v[x] = 1;
    return v;
  }

  AlgElem add(const AlgElem& a, const AlgElem& b) const {
    AlgVec out = a;
    for (int i = 0; i < loop.size(); ++i) out[i] += b[i];
    return out;
  }
  AlgElem sub(const AlgElem& a, const AlgElem& b) const {
    AlgVec out = a;
    for (int i = 0; i < loop.size(); ++i) out[i] -= b[i];
    return out;
  }
  AlgElem negate(const AlgElem& a) const {
    AlgVec out = a;
    for (auto& c : out) c = -c;
    return out;
  }
  AlgElem mul(const AlgElem& a, const AlgElem& b) const {
    AlgVec out(loop.size(), Rational(0));
    for (int i = 0; i < loop.size(); ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < loop.size(); ++j) {
        if (b[j] == 0) continue;
        out[loop.mul(i, j)] += a[i] * b[j];
      }
    }
    return out;
  }

  bool is_zero(const AlgElem& a) const {
    for (const auto& c : a)
      if (c != 0) return false;
    return true;
  }
  bool equal(const AlgElem& a, const AlgElem& b) const { return a == b; }
};

// x - 1 for a loop element, as an algebra vector.
AlgVec augmentation_of(const CayleyLoop& loop, int x);

}  // namespace loopforge
