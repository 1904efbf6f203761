#pragma once

#include "loopforge/rational.hpp"

#include <vector>

namespace loopforge {

// A subspace of Q^n kept in reduced row echelon form with exact arithmetic.
// Rows are normalized to a unit pivot; insertion reduces incrementally, so
// membership tests and dimension are always available.
class RationalSubspace {
 public:
  explicit RationalSubspace(int columns) : columns_(columns) {}

  int columns() const { return columns_; }
  int dimension() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<Rational>>& basis() const { return rows_; }

  // Reduces `vec` against the basis; inserts the remainder if nonzero.
  // Returns true when the dimension grew.
  bool insert(std::vector<Rational> vec);

  bool contains(std::vector<Rational> vec) const;

  // Remainder of vec after reduction against the basis.
  std::vector<Rational> reduce(std::vector<Rational> vec) const;

  friend bool operator==(const RationalSubspace& a, const RationalSubspace& b) {
    return a.columns_ == b.columns_ && a.rows_ == b.rows_;
  }

 private:
  int columns_;
  std::vector<std::vector<Rational>> rows_;  // sorted by pivot column
  std::vector<int> pivots_;
};

}  // namespace loopforge
