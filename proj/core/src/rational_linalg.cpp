#include "loopforge/rational_linalg.hpp"

#include "loopforge/errors.hpp"

#include <algorithm>

namespace loopforge {

std::vector<Rational> RationalSubspace::reduce(std::vector<Rational> vec) const {
  if (static_cast<int>(vec.size()) != columns_)
    throw DomainError("subspace: wrong vector length");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int pivot = pivots_[r];
    if (vec[pivot] == 0) continue;
    const Rational factor = vec[pivot];  // pivot entries are 1
    for (int c = 0; c < columns_; ++c)
      if (rows_[r][c] != 0) vec[c] -= factor * rows_[r][c];
  }
  return vec;
}

bool RationalSubspace::contains(std::vector<Rational> vec) const {
  vec = reduce(std::move(vec));
  return std::all_of(vec.begin(), vec.end(), [](const Rational& x) { return x == 0; });
}

bool RationalSubspace::insert(std::vector<Rational> vec) {
  vec = reduce(std::move(vec));
  int pivot = -1;
  for (int c = 0; c < columns_; ++c)
    if (vec[c] != 0) {
      pivot = c;
      break;
    }
  if (pivot < 0) return false;

  const Rational lead = vec[pivot];
  for (int c = pivot; c < columns_; ++c) vec[c] /= lead;

  // Back-substitute into existing rows to keep the reduced form.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r][pivot] == 0) continue;
    const Rational factor = rows_[r][pivot];
    for (int c = 0; c < columns_; ++c)
      if (vec[c] != 0) rows_[r][c] -= factor * vec[c];
  }

  // Keep rows ordered by pivot column.
  const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto index = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + index, std::move(vec));
  return true;
}

}  // namespace loopforge
