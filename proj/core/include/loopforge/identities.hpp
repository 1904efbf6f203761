#pragma once

#include "loopforge/cayley_loop.hpp"
#include "loopforge/decomposition.hpp"
#include "loopforge/series.hpp"
#include "loopforge/term.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loopforge {

// Series-model side of the generic formula engine: the loop is the set of
// constant-term-1 series, the ambient algebra is the series algebra itself.
struct SeriesFormulaContext {
  SeriesLoopContext lc;

  using LoopCtx = SeriesLoopContext;
  using LoopElem = Series;
  using AlgElem = Series;

  const SeriesLoopContext& loop_ctx() const { return lc; }
  Series zero() const { return Series(lc.order); }
  Series one() const { return Series::unit(lc.order); }
  const Series& embed(const Series& x) const { return x; }
  Series add(const Series& a, const Series& b) const { return a + b; }
  Series sub(const Series& a, const Series& b) const { return a - b; }
  Series mul(const Series& a, const Series& b) const { return Series::mul(a, b); }
  bool is_zero(const Series& x) const { return x.is_zero(); }
};

struct VerificationReport {
  int formula = 0;
  int p = 0;
  int q = 0;
  int order = 0;
  bool pass = false;
  Series difference{0};             // lhs - rhs, zero exactly when passing
  std::optional<Series> witness;    // minimal-degree nonzero part on failure
  long long terms = 0;              // accumulated (S, I, J) products
  double elapsed_seconds = 0;
};

// Exact verification of the product formulas in the free series model at
// truncation order N, on generic generators. Formula ids:
//   1: associator form      A(B_1..B_p . C_1..C_q) - (A B_1..B_p) C_1..C_q
//   2: anti-associator form (A_1..A_p B) C_1..C_q - A_1..A_p (B C_1..C_q)
//   3: the p = 1 case of 2 written with anti-associator corrections
//   4: the p = 1 case of 1 written with associator corrections
//   5: commutator form      A_1..A_p B - B A_1..A_p
VerificationReport verify_formula_ass(int p, int q, int N);
VerificationReport verify_formula_anti_ass(int p, int q, int N);
VerificationReport verify_formula_spec_anti(int q, int N);  // formula 3
VerificationReport verify_formula_spec_ass(int q, int N);   // formula 4
VerificationReport verify_formula_comm(int p, int N);

// Dispatch by formula id; for ids 3 and 4, p must be 1.
VerificationReport verify_formula(int formula, int p, int q, int N);

// The same identities instantiated in the rational loop algebra of a finite
// loop. `elements` lists, in order, the loop elements for
//   formulas 1, 4: a, b_1..b_p, c_1..c_q   (p = 1 for formula 4)
//   formulas 2, 3: a_1..a_p, b, c_1..c_q   (p = 1 for formula 3)
//   formula 5:     a_1..a_p, b
bool check_formula_on_loop(const CayleyLoop& loop, int formula, int p, int q,
                           const std::vector<int>& elements, long long* terms = nullptr);

// The key expansion behind formula 1, tested directly for every pair of
// subsets I, J: a b_I . c_J = (a . b_I c_J)(1 + sum over S inside S_{I,J}).
bool verify_key_lemma(int p, int q, int N);

struct ResidueCheck {
  std::string what;
  std::optional<int> nu_value;  // nullopt: exceeds the truncation order
  int bound = 0;
  bool pass = false;
};

struct ResidueReport {
  bool pass = false;
  bool precondition_ok = true;
  int order = 0;
  std::vector<ResidueCheck> checks;
};

// nu-level multilinearity residues on elements a, b, c of I-adic degrees
// p, q, r: the two commutator residues, plus the residues of the associator
// and of the level-one deviations in each argument. Every residue must have
// nu >= p + q + r.
ResidueReport verify_multilinearity(int p, int q, int r, int N);

// nu-level regularity of the word function phi_w: the deviation derived with
// respect to `var` keeps nu-additivity on the given degree profile (one
// degree per deviation argument, so arity(w) + 1 entries). The precondition
// that w itself respects nu is checked on the two collapsed profiles and a
// violation is reported, not passed.
ResidueReport verify_regularity(const LoopTerm& word, int var,
                                const std::vector<int>& degrees, int N);

// A loop element of exact I-adic degree `degree` built from fresh
// generators: a generator for degree 1, a left-normed iterated commutator
// otherwise. Advances next_generator past the generators it consumes.
Series filtration_element(int degree, int& next_generator, int order);

}  // namespace loopforge
