#include "loopforge/loop_algebra.hpp"

namespace loopforge {

AlgVec augmentation_of(const CayleyLoop& loop, int x) {
  AlgVec v(loop.size(), Rational(0));
  v[x] += 1;
  v[0] -= 1;
  return v;
}

}  // namespace loopforge
