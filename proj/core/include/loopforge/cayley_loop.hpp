#pragma once

#include "loopforge/errors.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace loopforge {

// A finite loop given by its multiplication table. Element 0 is the
// identity; rows and columns are permutations of 0..n-1. Division tables are
// precomputed at construction.
class CayleyLoop {
 public:
  // Validates and builds. Throws DomainError for a non-Latin table or when
  // element 0 is not a two-sided identity.
  static CayleyLoop from_table(std::vector<std::vector<int>> table);

  // Text format: first line n, then n rows of n entries.
  static CayleyLoop load(std::istream& in);
  static CayleyLoop parse(const std::string& text);

  int size() const { return n_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int ldiv(int a, int b) const { return ldiv_[a * n_ + b]; }  // z with a z = b
  int rdiv(int a, int b) const { return rdiv_[a * n_ + b]; }  // z with z b = a

  bool is_associative() const;
  bool is_commutative() const;

  // Left/right translations and the standard inner mappings.
  int inner_l(int x, int y, int k) const { return ldiv(mul(x, y), mul(x, mul(y, k))); }
  int inner_r(int x, int y, int k) const { return rdiv(mul(mul(k, x), y), mul(x, y)); }
  int inner_t(int x, int k) const { return ldiv(x, mul(k, x)); }

  std::string format() const;  // text table format

  // Loop-context interface for eval_term / eval_bracket.
  using Element = int;
  int one() const { return 0; }
  void check_assignable(int x) const {
    if (x < 0 || x >= n_) throw DomainError("loop element out of range");
  }

  friend bool operator==(const CayleyLoop& a, const CayleyLoop& b) {
    return a.table_ == b.table_;
  }

 private:
  CayleyLoop() = default;
  int n_ = 0;
  std::vector<int> table_, ldiv_, rdiv_;
};

// A subloop as a sorted element list always containing 0.
using Subloop = std::vector<int>;

Subloop full_subloop(const CayleyLoop& loop);
Subloop trivial_subloop();

bool subloop_contains(const Subloop& s, int x);
bool is_subloop(const CayleyLoop& loop, const Subloop& candidate);
bool is_normal_subloop(const CayleyLoop& loop, const Subloop& candidate);

// Smallest normal subloop containing `generators`: closure under the loop
// operations and under all inner mappings L(x,y), R(x,y), T(x).
Subloop normal_closure(const CayleyLoop& loop, const std::vector<int>& generators);

// Coset loop modulo a normal subloop; cosets are labeled 0..k-1 in the order
// of their minimal representatives. Throws DomainError when the coset
// product is ill-defined (i.e. the subloop is not normal).
struct QuotientLoop {
  CayleyLoop loop;
  std::vector<int> coset_of;          // element -> coset label
  std::vector<int> representative;    // coset label -> minimal element
};
QuotientLoop quotient(const CayleyLoop& loop, const Subloop& normal);

std::string format_subloop(const Subloop& s);

}  // namespace loopforge
