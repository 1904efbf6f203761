#pragma once

#include "loopforge/monomial.hpp"
#include "loopforge/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace loopforge {

struct MonomialLess {
  bool operator()(Monomial a, Monomial b) const { return Monomial::compare(a, b) < 0; }
};

// Truncated nonassociative power series over Q in the generators u_i: the
// working model of the free loop algebra modulo I^(order+1). Coefficient maps
// never store zeros and never store monomials above the truncation order, so
// equality of values is equality of representations.
class Series {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  explicit Series(int order, Rational constant = Rational(0));

  static Series unit(int order) { return Series(order, Rational(1)); }
  // The series u_id.
  static Series generator(int order, int id);
  // The loop generator x_id = 1 - u_id.
  static Series loop_generator(int order, int id);

  int order() const { return order_; }
  const Rational& constant() const { return constant_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return constant_ == 0 && terms_.empty(); }

  // I-adic valuation: minimal total degree carrying a nonzero coefficient.
  // nullopt means the series is zero at this order, i.e. the valuation
  // exceeds the truncation order.
  std::optional<int> nu() const;

  const Rational& coefficient(Monomial m) const;

  Series homogeneous_part(int degree) const;
  Series truncated(int new_order) const;

  void add_term(Monomial m, const Rational& coefficient);

  Series operator-() const;
  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
  friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
  friend Series operator*(const Series& lhs, const Series& rhs) { return mul(lhs, rhs); }
  friend Series operator*(Series lhs, const Rational& scalar);
  friend Series operator*(const Rational& scalar, Series rhs) { return std::move(rhs) * scalar; }

  friend bool operator==(const Series& a, const Series& b);
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  // Bilinear product; monomials multiply by grafting (new root, lhs tree on
  // the left). Terms above the truncation order are dropped.
  static Series mul(const Series& a, const Series& b);

  std::string to_string() const;

 private:
  int order_;
  Rational constant_;
  TermMap terms_;
};

// Loop divisions in the algebra, solved degree by degree. left_div(a, b)
// returns the unique z with a * z = b (requires a nonzero constant term in
// a); right_div(a, b) returns the unique z with z * b = a (requires a nonzero
// constant term in b). Throws DomainError otherwise.
Series left_div(const Series& a, const Series& b);
Series right_div(const Series& a, const Series& b);

// A truncated element of kF (x) kF; keys are pairs of monomials where the
// unit monomial stands for the tensor factor 1.
class TensorSeries {
 public:
  using Key = std::pair<Monomial, Monomial>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (int c = Monomial::compare(a.first, b.first)) return c < 0;
      return Monomial::compare(a.second, b.second) < 0;
    }
  };
  using TermMap = std::map<Key, Rational, KeyLess>;

  explicit TensorSeries(int order) : order_(order) {}

  static TensorSeries unit(int order);  // 1 (x) 1

  int order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Monomial left, Monomial right, const Rational& coefficient);

  TensorSeries truncated(int new_order) const;
  // Keeps only keys with total degree exactly `degree`.
  TensorSeries degree_part(int degree) const;

  TensorSeries& operator+=(const TensorSeries& rhs);
  TensorSeries& operator-=(const TensorSeries& rhs);
  friend TensorSeries operator+(TensorSeries lhs, const TensorSeries& rhs) { return lhs += rhs; }
  friend TensorSeries operator-(TensorSeries lhs, const TensorSeries& rhs) { return lhs -= rhs; }
  friend TensorSeries operator*(const TensorSeries& a, const TensorSeries& b);

  friend bool operator==(const TensorSeries& a, const TensorSeries& b);
  friend bool operator!=(const TensorSeries& a, const TensorSeries& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int order_;
  TermMap terms_;
};

// The loop inside the truncated algebra: series with constant term 1 under
// mul / left_div / right_div. Usable as a context for eval_term and the
// bracket evaluators.
struct SeriesLoopContext {
  using Element = Series;
  int order;

  Series one() const { return Series::unit(order); }
  Series mul(const Series& a, const Series& b) const { return Series::mul(a, b); }
  Series ldiv(const Series& a, const Series& b) const { return left_div(a, b); }
  Series rdiv(const Series& a, const Series& b) const { return right_div(a, b); }
  void check_assignable(const Series& s) const;
};

// The algebra map with Delta(x_i) = x_i (x) x_i, so
// Delta(u_i) = u_i (x) 1 + 1 (x) u_i - u_i (x) u_i, extended over monomial
// trees multiplicatively and truncated at the order of s.
TensorSeries coproduct(const Series& s);

// For a homogeneous s of degree d: whether the degree-d part of Delta(s)
// equals s (x) 1 + 1 (x) s. Throws DomainError if s is not homogeneous.
bool is_primitive(const Series& s);

}  // namespace loopforge
