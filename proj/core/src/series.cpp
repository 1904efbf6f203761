#include "loopforge/series.hpp"

#include "loopforge/errors.hpp"

#include <vector>

namespace loopforge {

namespace {

void require_same_order(int a, int b, const char* what) {
  if (a != b)
    throw DomainError(std::string(what) + ": mismatched truncation orders " +
                      std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

Series::Series(int order, Rational constant)
    : order_(order), constant_(std::move(constant)) {
  if (order < 0) throw DomainError("truncation order must be >= 0");
}

Series Series::generator(int order, int id) {
  Series s(order);
  if (order >= 1) s.add_term(Monomial::generator(id), Rational(1));
  return s;
}

Series Series::loop_generator(int order, int id) {
  Series s(order, Rational(1));
  if (order >= 1) s.add_term(Monomial::generator(id), Rational(-1));
  return s;
}

std::optional<int> Series::nu() const {
  if (constant_ != 0) return 0;
  if (terms_.empty()) return std::nullopt;
  // Canonical order sorts by degree first.
  return terms_.begin()->first.degree();
}

const Rational& Series::coefficient(Monomial m) const {
  static const Rational zero(0);
  if (m.is_unit()) return constant_;
  auto it = terms_.find(m);
  return it == terms_.end() ? zero : it->second;
}

Series Series::homogeneous_part(int degree) const {
  Series out(order_);
  if (degree == 0) {
    out.constant_ = constant_;
    return out;
  }
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) out.terms_.emplace(m, c);
  return out;
}

Series Series::truncated(int new_order) const {
  Series out(new_order, constant_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() > new_order) break;  // keys ascend by degree
    out.terms_.emplace(m, c);
  }
  return out;
}

void Series::add_term(Monomial m, const Rational& coefficient) {
  if (coefficient == 0) return;
  if (m.is_unit()) {
    constant_ += coefficient;
    return;
  }
  if (m.degree() > order_) return;
  auto [it, inserted] = terms_.emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Series Series::operator-() const {
  Series out(order_, -constant_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Series& Series::operator+=(const Series& rhs) {
  require_same_order(order_, rhs.order_, "add");
  constant_ += rhs.constant_;
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  require_same_order(order_, rhs.order_, "subtract");
  constant_ -= rhs.constant_;
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Series operator*(Series lhs, const Rational& scalar) {
  if (scalar == 0) return Series(lhs.order_);
  lhs.constant_ *= scalar;
  for (auto& [m, c] : lhs.terms_) c *= scalar;
  return lhs;
}

bool operator==(const Series& a, const Series& b) {
  return a.order_ == b.order_ && a.constant_ == b.constant_ && a.terms_ == b.terms_;
}

Series Series::mul(const Series& a, const Series& b) {
  require_same_order(a.order_, b.order_, "mul");
  const int order = a.order_;
  Series out(order, a.constant_ * b.constant_);
  if (a.constant_ != 0)
    for (const auto& [m, c] : b.terms_) out.add_term(m, a.constant_ * c);
  if (b.constant_ != 0)
    for (const auto& [m, c] : a.terms_) out.add_term(m, b.constant_ * c);
  for (const auto& [ma, ca] : a.terms_) {
    if (ma.degree() >= order) break;
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.degree() + mb.degree() > order) break;
      out.add_term(Monomial::graft(ma, mb), ca * cb);
    }
  }
  return out;
}

std::string Series::to_string() const {
  std::string out;
  auto append = [&out](const Rational& c, const std::string& mono) {
    const bool negative = c < 0;
    Rational abs = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.empty()) {
      out += format_rational(abs);
    } else {
      if (abs != 1) out += format_rational(abs) + "*";
      out += mono;
    }
  };
  if (constant_ != 0) append(constant_, "");
  for (const auto& [m, c] : terms_) append(c, m.to_string());
  if (out.empty()) out = "0";
  return out + " + O(" + std::to_string(order_ + 1) + ")";
}

namespace {

// Shared solver: per-degree back substitution against the invertible
// constant term of the divisor. `left` selects a*z=b (true) or z*b=a.
Series solve_division(const Series& divisor, const Series& dividend, bool left,
                      const char* what) {
  require_same_order(divisor.order(), dividend.order(), what);
  if (divisor.constant() == 0)
    throw DomainError(std::string(what) + ": divisor has zero constant term");
  const int order = divisor.order();
  const Rational& lead = divisor.constant();

  Series z(order, dividend.constant() / lead);
  // Divisor terms bucketed by degree for the convolution.
  std::vector<std::vector<std::pair<Monomial, Rational>>> by_degree(order + 1);
  for (const auto& [m, c] : divisor.terms()) by_degree[m.degree()].emplace_back(m, c);

  for (int d = 1; d <= order; ++d) {
    Series delta = dividend.homogeneous_part(d);
    for (int e = 1; e <= d; ++e) {
      for (const auto& [md, cd] : by_degree[e]) {
        // z-part of degree d-e, including the constant when e == d.
        if (e == d) {
          if (z.constant() != 0)
            delta.add_term(md, -(left ? cd * z.constant() : z.constant() * cd));
          continue;
        }
        for (const auto& [mz, cz] : z.terms()) {
          if (mz.degree() != d - e) continue;
          Monomial prod = left ? Monomial::graft(md, mz) : Monomial::graft(mz, md);
          delta.add_term(prod, -(cd * cz));
        }
      }
    }
    for (const auto& [m, c] : delta.terms()) z.add_term(m, c / lead);
  }
  return z;
}

}  // namespace

Series left_div(const Series& a, const Series& b) {
  return solve_division(a, b, /*left=*/true, "left_div");
}

Series right_div(const Series& a, const Series& b) {
  return solve_division(b, a, /*left=*/false, "right_div");
}

void SeriesLoopContext::check_assignable(const Series& s) const {
  if (s.order() != order)
    throw DomainError("series context: order mismatch");
  if (s.constant() != 1)
    throw DomainError("series context: loop elements must have constant term 1");
}

TensorSeries TensorSeries::unit(int order) {
  TensorSeries t(order);
  t.add_term(Monomial(), Monomial(), Rational(1));
  return t;
}

void TensorSeries::add_term(Monomial left, Monomial right, const Rational& coefficient) {
  if (coefficient == 0) return;
  if (left.degree() + right.degree() > order_) return;
  Key key{left, right};
  auto [it, inserted] = terms_.emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorSeries TensorSeries::truncated(int new_order) const {
  TensorSeries out(new_order);
  for (const auto& [k, c] : terms_)
    out.add_term(k.first, k.second, c);
  return out;
}

TensorSeries TensorSeries::degree_part(int degree) const {
  TensorSeries out(order_);
  for (const auto& [k, c] : terms_)
    if (k.first.degree() + k.second.degree() == degree) out.add_term(k.first, k.second, c);
  return out;
}

TensorSeries& TensorSeries::operator+=(const TensorSeries& rhs) {
  require_same_order(order_, rhs.order_, "tensor add");
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorSeries& TensorSeries::operator-=(const TensorSeries& rhs) {
  require_same_order(order_, rhs.order_, "tensor subtract");
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorSeries operator*(const TensorSeries& a, const TensorSeries& b) {
  require_same_order(a.order_, b.order_, "tensor mul");
  TensorSeries out(a.order_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term(Monomial::graft(ka.first, kb.first),
                   Monomial::graft(ka.second, kb.second), ca * cb);
  return out;
}

bool operator==(const TensorSeries& a, const TensorSeries& b) {
  return a.order_ == b.order_ && a.terms_ == b.terms_;
}

std::string TensorSeries::to_string() const {
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += format_rational(c) + "*" + k.first.to_string() + "(x)" + k.second.to_string();
  }
  return out.empty() ? "0" : out;
}

namespace {

TensorSeries coproduct_of_monomial(Monomial m, int order) {
  if (m.is_unit()) return TensorSeries::unit(order);
  if (m.is_leaf()) {
    TensorSeries t(order);
    t.add_term(m, Monomial(), Rational(1));
    t.add_term(Monomial(), m, Rational(1));
    t.add_term(m, m, Rational(-1));
    return t;
  }
  return coproduct_of_monomial(m.left(), order) * coproduct_of_monomial(m.right(), order);
}

}  // namespace

TensorSeries coproduct(const Series& s) {
  TensorSeries out(s.order());
  if (s.constant() != 0) out.add_term(Monomial(), Monomial(), s.constant());
  for (const auto& [m, c] : s.terms()) {
    TensorSeries dm = coproduct_of_monomial(m, s.order());
    for (const auto& [k, v] : dm.terms()) out.add_term(k.first, k.second, c * v);
  }
  return out;
}

bool is_primitive(const Series& s) {
  if (s.constant() != 0) throw DomainError("is_primitive: not homogeneous (nonzero constant)");
  if (s.terms().empty()) return true;
  const int degree = s.terms().begin()->first.degree();
  if (s.terms().rbegin()->first.degree() != degree)
    throw DomainError("is_primitive: not homogeneous");

  TensorSeries expected(s.order());
  for (const auto& [m, c] : s.terms()) {
    expected.add_term(m, Monomial(), c);
    expected.add_term(Monomial(), m, c);
  }
  return coproduct(s).degree_part(degree) == expected;
}

}  // namespace loopforge
