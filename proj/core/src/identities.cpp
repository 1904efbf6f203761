#include "loopforge/identities.hpp"

#include "loopforge/brackets.hpp"
#include "loopforge/loop_algebra.hpp"

#include <chrono>
#include <functional>
#include <optional>

namespace loopforge {

namespace {

// ---------------------------------------------------------------------------
// Generic engine over a formula context FC (series model or QL of a finite
// loop). Lowercase letters are loop elements, capitals their 1-x images in
// the algebra; unparenthesized blocks are read right-normed.

template <class FC>
struct Engine {
  const FC& fc;
  using Alg = typename FC::AlgElem;
  using LoopElem = typename FC::LoopCtx::Element;

  Alg rnorm(const std::vector<Alg>& factors) const {
    if (factors.empty()) return fc.one();
    Alg out = factors.back();
    for (int i = static_cast<int>(factors.size()) - 2; i >= 0; --i)
      out = fc.mul(factors[i], out);
    return out;
  }

  // Right-normed product over the subset `which` (ascending) of factors.
  Alg subset_rnorm(const std::vector<Alg>& factors, unsigned mask) const {
    std::vector<Alg> chosen;
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (mask & (1u << i)) chosen.push_back(factors[i]);
    return rnorm(chosen);
  }

  LoopElem loop_rnorm(const std::vector<LoopElem>& factors) const {
    const auto& ctx = fc.loop_ctx();
    if (factors.empty()) return ctx.one();
    LoopElem out = factors.back();
    for (int i = static_cast<int>(factors.size()) - 2; i >= 0; --i)
      out = ctx.mul(factors[i], out);
    return out;
  }

  std::vector<Alg> capitals(const std::vector<LoopElem>& xs) const {
    std::vector<Alg> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(fc.sub(fc.one(), fc.embed(x)));
    return out;
  }

  // Per-leaf correction factors w - 1 (bracket values evaluated in the loop).
  std::vector<Alg> correction_factors(const PiDecomposition& pi,
                                      const BlockAssignment<typename FC::LoopCtx>& vars) const {
    std::vector<Alg> out;
    out.reserve(pi.leaves.size());
    for (const auto& leaf : pi.leaves)
      out.push_back(fc.sub(fc.embed(eval_elementary(leaf, vars, fc.loop_ctx())), fc.one()));
    return out;
  }

  // P_S: the product over the decomposition tree pruned to the selection,
  // with each kept leaf replaced by its correction factor.
  Alg correction_term(const PiDecomposition& pi, const std::vector<char>& selected,
                      const std::vector<Alg>& factors) const {
    std::function<std::optional<Alg>(int)> go = [&](int node) -> std::optional<Alg> {
      const auto& n = pi.nodes[node];
      if (n.leaf >= 0) {
        if (!selected[n.leaf]) return std::nullopt;
        return factors[n.leaf];
      }
      auto left = go(n.left);
      auto right = go(n.right);
      if (!left) return right;
      if (!right) return left;
      return fc.mul(*left, *right);
    };
    auto result = go(pi.root);
    return result ? *result : fc.zero();
  }

  // Enumerates nonempty leaf selections; when budget >= 0 only selections
  // with total bracket weight <= budget are visited (heavier corrections
  // vanish in the truncated model).
  void for_each_selection(const PiDecomposition& pi, int budget,
                          const std::function<void(const std::vector<char>&)>& visit) const {
    const int count = static_cast<int>(pi.leaves.size());
    std::vector<char> selected(count, 0);
    std::function<void(int, int)> go = [&](int index, int used) {
      if (index == count) {
        for (char c : selected)
          if (c) {
            visit(selected);
            return;
          }
        return;
      }
      go(index + 1, used);
      const int w = pi.leaves[index].weight();
      if (budget < 0 || used + w <= budget) {
        selected[index] = 1;
        go(index + 1, used + w);
        selected[index] = 0;
      }
    };
    go(0, 0);
  }

  // Indices (1-based) of a block not covered by any selected leaf.
  static unsigned mandatory_mask(const PiDecomposition& pi, const std::vector<char>& selected,
                                 char block, int block_size) {
    unsigned covered = 0;
    for (std::size_t k = 0; k < pi.leaves.size(); ++k) {
      if (!selected[k]) continue;
      for (const BlockVar& v : pi.leaves[k].args)
        if (v.block == block) covered |= 1u << (v.index - 1);
    }
    return ~covered & ((1u << block_size) - 1);
  }
};

int popcount(unsigned x) { return __builtin_popcount(x); }

// Subsets of {0..n-1} containing `mandatory`, visited as masks.
template <class Fn>
void for_each_superset(unsigned mandatory, int n, Fn&& fn) {
  const unsigned free_bits = ~mandatory & ((1u << n) - 1);
  unsigned sub = 0;
  while (true) {
    fn(mandatory | sub);
    if (sub == free_bits) break;
    sub = (sub - free_bits) & free_bits;  // next subset of free_bits
  }
}

// ---------------------------------------------------------------------------
// The five formulas, generic in the context.

template <class FC>
struct FormulaRun {
  typename FC::AlgElem difference;
  long long terms = 0;
};

// Formula 1: A (B_1..B_p . C_1..C_q) - (A B_1..B_p) C_1..C_q
//   = (-1)^(p+q) sum_S ( sum_{I,J} (-1)^(|I|+|J|) a . B_I C_J ) P_S.
template <class FC>
FormulaRun<FC> run_formula_ass(const FC& fc, int p, int q,
                               const typename FC::LoopCtx::Element& a,
                               const std::vector<typename FC::LoopCtx::Element>& b,
                               const std::vector<typename FC::LoopCtx::Element>& c,
                               int budget) {
  Engine<FC> eng{fc};
  auto B = eng.capitals(b);
  auto C = eng.capitals(c);
  auto A = fc.sub(fc.one(), fc.embed(a));
  auto Bblock = eng.rnorm(B);
  auto Cblock = eng.rnorm(C);

  auto lhs = fc.sub(fc.mul(A, fc.mul(Bblock, Cblock)), fc.mul(fc.mul(A, Bblock), Cblock));

  PiDecomposition pi = decompose_associator(p, q);
  BlockAssignment<typename FC::LoopCtx> vars;
  vars[BlockVar{'a', 0}] = a;
  for (int i = 0; i < p; ++i) vars[BlockVar{'b', i + 1}] = b[i];
  for (int j = 0; j < q; ++j) vars[BlockVar{'c', j + 1}] = c[j];
  auto factors = eng.correction_factors(pi, vars);

  FormulaRun<FC> run{fc.zero(), 0};
  auto rhs = fc.zero();
  const auto a_alg = fc.embed(a);
  eng.for_each_selection(pi, budget, [&](const std::vector<char>& sel) {
    auto correction = eng.correction_term(pi, sel, factors);
    if (fc.is_zero(correction)) return;
    auto inner = fc.zero();
    const unsigned mand_b = Engine<FC>::mandatory_mask(pi, sel, 'b', p);
    const unsigned mand_c = Engine<FC>::mandatory_mask(pi, sel, 'c', q);
    for_each_superset(mand_b, p, [&](unsigned I) {
      for_each_superset(mand_c, q, [&](unsigned J) {
        auto term = fc.mul(a_alg, fc.mul(eng.subset_rnorm(B, I), eng.subset_rnorm(C, J)));
        if ((popcount(I) + popcount(J)) % 2)
          inner = fc.sub(inner, term);
        else
          inner = fc.add(inner, term);
        ++run.terms;
      });
    });
    rhs = fc.add(rhs, fc.mul(inner, correction));
  });
  if ((p + q) % 2) rhs = fc.sub(fc.zero(), rhs);
  run.difference = fc.sub(lhs, rhs);
  return run;
}

// Formula 2: (A_1..A_p B) C_1..C_q - A_1..A_p (B C_1..C_q)
//   = (-1)^(p+q) sum_S ( sum_{I,J} (-1)^(|I|+|J|) (A_I b) C_J ) Q_S.
template <class FC>
FormulaRun<FC> run_formula_anti(const FC& fc, int p, int q,
                                const std::vector<typename FC::LoopCtx::Element>& a,
                                const typename FC::LoopCtx::Element& b,
                                const std::vector<typename FC::LoopCtx::Element>& c,
                                int budget) {
  Engine<FC> eng{fc};
  auto A = eng.capitals(a);
  auto C = eng.capitals(c);
  auto B = fc.sub(fc.one(), fc.embed(b));
  auto Ablock = eng.rnorm(A);
  auto Cblock = eng.rnorm(C);

  auto lhs = fc.sub(fc.mul(fc.mul(Ablock, B), Cblock), fc.mul(Ablock, fc.mul(B, Cblock)));

  PiDecomposition pi = decompose_anti_associator(p, q);
  BlockAssignment<typename FC::LoopCtx> vars;
  for (int i = 0; i < p; ++i) vars[BlockVar{'a', i + 1}] = a[i];
  vars[BlockVar{'b', 0}] = b;
  for (int j = 0; j < q; ++j) vars[BlockVar{'c', j + 1}] = c[j];
  auto factors = eng.correction_factors(pi, vars);

  FormulaRun<FC> run{fc.zero(), 0};
  auto rhs = fc.zero();
  const auto b_alg = fc.embed(b);
  eng.for_each_selection(pi, budget, [&](const std::vector<char>& sel) {
    auto correction = eng.correction_term(pi, sel, factors);
    if (fc.is_zero(correction)) return;
    auto inner = fc.zero();
    const unsigned mand_a = Engine<FC>::mandatory_mask(pi, sel, 'a', p);
    const unsigned mand_c = Engine<FC>::mandatory_mask(pi, sel, 'c', q);
    for_each_superset(mand_a, p, [&](unsigned I) {
      for_each_superset(mand_c, q, [&](unsigned J) {
        auto term = fc.mul(fc.mul(eng.subset_rnorm(A, I), b_alg), eng.subset_rnorm(C, J));
        if ((popcount(I) + popcount(J)) % 2)
          inner = fc.sub(inner, term);
        else
          inner = fc.add(inner, term);
        ++run.terms;
      });
    });
    rhs = fc.add(rhs, fc.mul(inner, correction));
  });
  if ((p + q) % 2) rhs = fc.sub(fc.zero(), rhs);
  run.difference = fc.sub(lhs, rhs);
  return run;
}

// Formula 5: A_1..A_p B - B A_1..A_p
//   = (-1)^(p+1) sum_S ( sum_I (-1)^|I| b A_I ) R_S.
template <class FC>
FormulaRun<FC> run_formula_comm(const FC& fc, int p,
                                const std::vector<typename FC::LoopCtx::Element>& a,
                                const typename FC::LoopCtx::Element& b, int budget) {
  Engine<FC> eng{fc};
  auto A = eng.capitals(a);
  auto B = fc.sub(fc.one(), fc.embed(b));
  auto Ablock = eng.rnorm(A);

  auto lhs = fc.sub(fc.mul(Ablock, B), fc.mul(B, Ablock));

  PiDecomposition pi = decompose_commutator(p);
  BlockAssignment<typename FC::LoopCtx> vars;
  for (int i = 0; i < p; ++i) vars[BlockVar{'a', i + 1}] = a[i];
  vars[BlockVar{'b', 0}] = b;
  auto factors = eng.correction_factors(pi, vars);

  FormulaRun<FC> run{fc.zero(), 0};
  auto rhs = fc.zero();
  const auto b_alg = fc.embed(b);
  eng.for_each_selection(pi, budget, [&](const std::vector<char>& sel) {
    auto correction = eng.correction_term(pi, sel, factors);
    if (fc.is_zero(correction)) return;
    auto inner = fc.zero();
    const unsigned mand_a = Engine<FC>::mandatory_mask(pi, sel, 'a', p);
    for_each_superset(mand_a, p, [&](unsigned I) {
      auto term = fc.mul(b_alg, eng.subset_rnorm(A, I));
      if (popcount(I) % 2)
        inner = fc.sub(inner, term);
      else
        inner = fc.add(inner, term);
      ++run.terms;
    });
    rhs = fc.add(rhs, fc.mul(inner, correction));
  });
  if ((p + 1) % 2) rhs = fc.sub(fc.zero(), rhs);
  run.difference = fc.sub(lhs, rhs);
  return run;
}

// Formula 3 (p = 1 anti-associator specialization):
//   A B . C_1..C_q - A . B C_1..C_q = (-1)^(q+1) sum_S (sum_J (-1)^|J| a b . C_J) Q_S.
template <class FC>
FormulaRun<FC> run_formula_spec_anti(const FC& fc, int q,
                                     const typename FC::LoopCtx::Element& a,
                                     const typename FC::LoopCtx::Element& b,
                                     const std::vector<typename FC::LoopCtx::Element>& c,
                                     int budget) {
  Engine<FC> eng{fc};
  auto C = eng.capitals(c);
  auto A = fc.sub(fc.one(), fc.embed(a));
  auto B = fc.sub(fc.one(), fc.embed(b));
  auto Cblock = eng.rnorm(C);

  auto lhs = fc.sub(fc.mul(fc.mul(A, B), Cblock), fc.mul(A, fc.mul(B, Cblock)));

  PiDecomposition pi = decompose_anti_associator(1, q);
  BlockAssignment<typename FC::LoopCtx> vars;
  vars[BlockVar{'a', 1}] = a;
  vars[BlockVar{'b', 0}] = b;
  for (int j = 0; j < q; ++j) vars[BlockVar{'c', j + 1}] = c[j];
  auto factors = eng.correction_factors(pi, vars);

  FormulaRun<FC> run{fc.zero(), 0};
  auto rhs = fc.zero();
  const auto ab = fc.embed(fc.loop_ctx().mul(a, b));
  eng.for_each_selection(pi, budget, [&](const std::vector<char>& sel) {
    auto correction = eng.correction_term(pi, sel, factors);
    if (fc.is_zero(correction)) return;
    auto inner = fc.zero();
    const unsigned mand_c = Engine<FC>::mandatory_mask(pi, sel, 'c', q);
    for_each_superset(mand_c, q, [&](unsigned J) {
      auto term = fc.mul(ab, eng.subset_rnorm(C, J));
      if (popcount(J) % 2)
        inner = fc.sub(inner, term);
      else
        inner = fc.add(inner, term);
      ++run.terms;
    });
    rhs = fc.add(rhs, fc.mul(inner, correction));
  });
  if ((q + 1) % 2) rhs = fc.sub(fc.zero(), rhs);
  run.difference = fc.sub(lhs, rhs);
  return run;
}

// Formula 4 (p = 1 associator specialization):
//   A B . C_1..C_q - A . B C_1..C_q = (-1)^q sum_S (sum_J (-1)^|J| a . b C_J) P_S.
template <class FC>
FormulaRun<FC> run_formula_spec_ass(const FC& fc, int q,
                                    const typename FC::LoopCtx::Element& a,
                                    const typename FC::LoopCtx::Element& b,
                                    const std::vector<typename FC::LoopCtx::Element>& c,
                                    int budget) {
  Engine<FC> eng{fc};
  auto C = eng.capitals(c);
  auto A = fc.sub(fc.one(), fc.embed(a));
  auto B = fc.sub(fc.one(), fc.embed(b));
  auto Cblock = eng.rnorm(C);

  auto lhs = fc.sub(fc.mul(fc.mul(A, B), Cblock), fc.mul(A, fc.mul(B, Cblock)));

  PiDecomposition pi = decompose_associator(1, q);
  BlockAssignment<typename FC::LoopCtx> vars;
  vars[BlockVar{'a', 0}] = a;
  vars[BlockVar{'b', 1}] = b;
  for (int j = 0; j < q; ++j) vars[BlockVar{'c', j + 1}] = c[j];
  auto factors = eng.correction_factors(pi, vars);

  FormulaRun<FC> run{fc.zero(), 0};
  auto rhs = fc.zero();
  const auto a_alg = fc.embed(a);
  const auto b_alg = fc.embed(b);
  eng.for_each_selection(pi, budget, [&](const std::vector<char>& sel) {
    auto correction = eng.correction_term(pi, sel, factors);
    if (fc.is_zero(correction)) return;
    auto inner = fc.zero();
    const unsigned mand_c = Engine<FC>::mandatory_mask(pi, sel, 'c', q);
    for_each_superset(mand_c, q, [&](unsigned J) {
      auto term = fc.mul(a_alg, fc.mul(b_alg, eng.subset_rnorm(C, J)));
      if (popcount(J) % 2)
        inner = fc.sub(inner, term);
      else
        inner = fc.add(inner, term);
      ++run.terms;
    });
    rhs = fc.add(rhs, fc.mul(inner, correction));
  });
  if (q % 2) rhs = fc.sub(fc.zero(), rhs);
  run.difference = fc.sub(lhs, rhs);
  return run;
}

// ---------------------------------------------------------------------------
// Series-model drivers on generic generators.

std::vector<Series> loop_generators(int order, int first, int count) {
  std::vector<Series> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(Series::loop_generator(order, first + i));
  return out;
}

VerificationReport finish_report(int formula, int p, int q, int N, FormulaRun<SeriesFormulaContext> run,
                                 std::chrono::steady_clock::time_point start) {
  VerificationReport report;
  report.formula = formula;
  report.p = p;
  report.q = q;
  report.order = N;
  report.terms = run.terms;
  report.difference = std::move(run.difference);
  report.pass = report.difference.is_zero();
  if (!report.pass) {
    const auto lead = report.difference.nu();
    report.witness = report.difference.homogeneous_part(lead ? *lead : 0);
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

VerificationReport verify_formula_ass(int p, int q, int N) {
  if (p < 1 || q < 1) throw DomainError("formula 1: p, q must be >= 1");
  if (N < p + q + 1) throw DomainError("formula 1: order must be >= p + q + 1");
  const auto start = std::chrono::steady_clock::now();
  SeriesFormulaContext fc{SeriesLoopContext{N}};
  Series a = Series::loop_generator(N, 1);
  auto b = loop_generators(N, 2, p);
  auto c = loop_generators(N, 2 + p, q);
  return finish_report(1, p, q, N, run_formula_ass(fc, p, q, a, b, c, N), start);
}

VerificationReport verify_formula_anti_ass(int p, int q, int N) {
  if (p < 1 || q < 1) throw DomainError("formula 2: p, q must be >= 1");
  if (N < p + q + 1) throw DomainError("formula 2: order must be >= p + q + 1");
  const auto start = std::chrono::steady_clock::now();
  SeriesFormulaContext fc{SeriesLoopContext{N}};
  auto a = loop_generators(N, 1, p);
  Series b = Series::loop_generator(N, p + 1);
  auto c = loop_generators(N, p + 2, q);
  return finish_report(2, p, q, N, run_formula_anti(fc, p, q, a, b, c, N), start);
}

VerificationReport verify_formula_spec_anti(int q, int N) {
  if (q < 1) throw DomainError("formula 3: q must be >= 1");
  if (N < q + 2) throw DomainError("formula 3: order must be >= q + 2");
  const auto start = std::chrono::steady_clock::now();
  SeriesFormulaContext fc{SeriesLoopContext{N}};
  Series a = Series::loop_generator(N, 1);
  Series b = Series::loop_generator(N, 2);
  auto c = loop_generators(N, 3, q);
  return finish_report(3, 1, q, N, run_formula_spec_anti(fc, q, a, b, c, N), start);
}

VerificationReport verify_formula_spec_ass(int q, int N) {
  if (q < 1) throw DomainError("formula 4: q must be >= 1");
  if (N < q + 2) throw DomainError("formula 4: order must be >= q + 2");
  const auto start = std::chrono::steady_clock::now();
  SeriesFormulaContext fc{SeriesLoopContext{N}};
  Series a = Series::loop_generator(N, 1);
  Series b = Series::loop_generator(N, 2);
  auto c = loop_generators(N, 3, q);
  return finish_report(4, 1, q, N, run_formula_spec_ass(fc, q, a, b, c, N), start);
}

VerificationReport verify_formula_comm(int p, int N) {
  if (p < 1) throw DomainError("formula 5: p must be >= 1");
  if (N < p + 1) throw DomainError("formula 5: order must be >= p + 1");
  const auto start = std::chrono::steady_clock::now();
  SeriesFormulaContext fc{SeriesLoopContext{N}};
  auto a = loop_generators(N, 1, p);
  Series b = Series::loop_generator(N, p + 1);
  return finish_report(5, p, 0, N, run_formula_comm(fc, p, a, b, N), start);
}

VerificationReport verify_formula(int formula, int p, int q, int N) {
  switch (formula) {
    case 1:
      return verify_formula_ass(p, q, N);
    case 2:
      return verify_formula_anti_ass(p, q, N);
    case 3:
      if (p != 1) throw DomainError("formula 3 is the p = 1 specialization");
      return verify_formula_spec_anti(q, N);
    case 4:
      if (p != 1) throw DomainError("formula 4 is the p = 1 specialization");
      return verify_formula_spec_ass(q, N);
    case 5:
      return verify_formula_comm(p, N);
    default:
      throw DomainError("formula id must be 1..5");
  }
}

bool check_formula_on_loop(const CayleyLoop& loop, int formula, int p, int q,
                           const std::vector<int>& elements, long long* terms) {
  CayleyAlgebraContext fc{loop};
  for (int x : elements) loop.check_assignable(x);
  auto expect = [&](int count) {
    if (static_cast<int>(elements.size()) != count)
      throw DomainError("check_formula_on_loop: expected " + std::to_string(count) +
                        " elements");
  };

  FormulaRun<CayleyAlgebraContext> run{fc.zero(), 0};
  switch (formula) {
    case 1: {
      expect(1 + p + q);
      std::vector<int> b(elements.begin() + 1, elements.begin() + 1 + p);
      std::vector<int> c(elements.begin() + 1 + p, elements.end());
      run = run_formula_ass(fc, p, q, elements[0], b, c, -1);
      break;
    }
    case 2: {
      expect(p + 1 + q);
      std::vector<int> a(elements.begin(), elements.begin() + p);
      std::vector<int> c(elements.begin() + p + 1, elements.end());
      run = run_formula_anti(fc, p, q, a, elements[p], c, -1);
      break;
    }
    case 3: {
      expect(2 + q);
      std::vector<int> c(elements.begin() + 2, elements.end());
      run = run_formula_spec_anti(fc, q, elements[0], elements[1], c, -1);
      break;
    }
    case 4: {
      expect(2 + q);
      std::vector<int> c(elements.begin() + 2, elements.end());
      run = run_formula_spec_ass(fc, q, elements[0], elements[1], c, -1);
      break;
    }
    case 5: {
      expect(p + 1);
      std::vector<int> a(elements.begin(), elements.begin() + p);
      run = run_formula_comm(fc, p, a, elements[p], -1);
      break;
    }
    default:
      throw DomainError("formula id must be 1..5");
  }
  if (terms) *terms = run.terms;
  return fc.is_zero(run.difference);
}

bool verify_key_lemma(int p, int q, int N) {
  if (p < 1 || q < 1) throw DomainError("key lemma: p, q must be >= 1");
  SeriesFormulaContext fc{SeriesLoopContext{N}};
  Engine<SeriesFormulaContext> eng{fc};

  Series a = Series::loop_generator(N, 1);
  auto b = loop_generators(N, 2, p);
  auto c = loop_generators(N, 2 + p, q);

  PiDecomposition pi = decompose_associator(p, q);
  BlockAssignment<SeriesLoopContext> vars;
  vars[BlockVar{'a', 0}] = a;
  for (int i = 0; i < p; ++i) vars[BlockVar{'b', i + 1}] = b[i];
  for (int j = 0; j < q; ++j) vars[BlockVar{'c', j + 1}] = c[j];
  auto factors = eng.correction_factors(pi, vars);

  for (unsigned I = 0; I < (1u << p); ++I) {
    for (unsigned J = 0; J < (1u << q); ++J) {
      std::vector<Series> bI, cJ;
      for (int i = 0; i < p; ++i)
        if (I & (1u << i)) bI.push_back(b[i]);
      for (int j = 0; j < q; ++j)
        if (J & (1u << j)) cJ.push_back(c[j]);
      Series b_prod = eng.loop_rnorm(bI);
      Series c_prod = eng.loop_rnorm(cJ);

      Series lhs = Series::mul(Series::mul(a, b_prod), c_prod);

      // 1 + sum of P_S over selections using only variables from I and J.
      Series corrections = fc.one();
      eng.for_each_selection(pi, N, [&](const std::vector<char>& sel) {
        for (std::size_t k = 0; k < pi.leaves.size(); ++k) {
          if (!sel[k]) continue;
          for (const BlockVar& v : pi.leaves[k].args) {
            if (v.block == 'b' && !(I & (1u << (v.index - 1)))) return;
            if (v.block == 'c' && !(J & (1u << (v.index - 1)))) return;
          }
        }
        corrections += eng.correction_term(pi, sel, factors);
      });
      Series rhs = Series::mul(Series::mul(a, Series::mul(b_prod, c_prod)), corrections);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// nu-level residues.

Series filtration_element(int degree, int& next_generator, int order) {
  if (degree < 1) throw DomainError("filtration_element: degree must be >= 1");
  SeriesLoopContext ctx{order};
  Series out = Series::loop_generator(order, next_generator++);
  for (int d = 2; d <= degree; ++d)
    out = commutator(out, Series::loop_generator(order, next_generator++), ctx);
  return out;
}

namespace {

std::optional<int> residue_nu(const Series& value) {
  return (value - Series::unit(value.order())).nu();
}

bool nu_at_least(const std::optional<int>& nu, int bound) { return !nu || *nu >= bound; }

void push_check(ResidueReport& report, std::string what, const Series& value, int bound) {
  ResidueCheck check;
  check.what = std::move(what);
  check.nu_value = residue_nu(value);
  check.bound = bound;
  check.pass = nu_at_least(check.nu_value, bound);
  if (!check.pass) report.pass = false;
  report.checks.push_back(std::move(check));
}

}  // namespace

ResidueReport verify_multilinearity(int p, int q, int r, int N) {
  if (p < 1 || q < 1 || r < 1) throw DomainError("multilinearity: degrees must be >= 1");
  if (N < p + q + r) throw DomainError("multilinearity: order must be >= p + q + r");
  SeriesLoopContext ctx{N};
  ResidueReport report;
  report.pass = true;
  report.order = N;
  const int bound = p + q + r;

  int next_gen = 1;
  Series a = filtration_element(p, next_gen, N);
  Series b = filtration_element(q, next_gen, N);
  Series c = filtration_element(r, next_gen, N);

  // Commutator residues in both arguments.
  {
    Series lhs = Series::mul(commutator(a, c, ctx), commutator(b, c, ctx));
    Series res = left_div(lhs, commutator(Series::mul(a, b), c, ctx));
    push_check(report, "comm arg1: ([a,c][b,c]) \\ [ab,c]", res, bound);
  }
  {
    Series lhs = Series::mul(commutator(a, b, ctx), commutator(a, c, ctx));
    Series res = left_div(lhs, commutator(a, Series::mul(b, c), ctx));
    push_check(report, "comm arg2: ([a,b][a,c]) \\ [a,bc]", res, bound);
  }

  // Associator residues: the level-one deviations with the split pair (a, b),
  // passenger c and a fresh unit-degree generator in the remaining slot.
  for (int var = 1; var <= 3; ++var) {
    Series d = Series::loop_generator(N, next_gen++);
    DeviationIndices idx{{var}};
    std::vector<Series> args;
    // Slots: positions var, var+1 hold the split pair; the other two slots
    // get c then d in order.
    std::vector<Series> rest{c, d};
    std::size_t rest_at = 0;
    for (int pos = 1; pos <= 4; ++pos) {
      if (pos == var) {
        args.push_back(a);
        args.push_back(b);
        ++pos;
      } else {
        args.push_back(rest[rest_at++]);
      }
    }
    Series value = deviation(BaseOp::Associator, idx, args, ctx);
    push_check(report, "assoc arg" + std::to_string(var) + " deviation", value, bound);
  }

  // Residues of the level-one deviations in each argument: level-two
  // deviations with split pair (a, b), passenger c, fresh generators beyond.
  for (int first = 1; first <= 3; ++first) {
    for (int var = 1; var <= 4; ++var) {
      DeviationIndices idx{{first, var}};
      std::vector<Series> args;
      std::vector<Series> rest{c, Series::loop_generator(N, next_gen++),
                               Series::loop_generator(N, next_gen++)};
      std::size_t rest_at = 0;
      for (int pos = 1; pos <= 5; ++pos) {
        if (pos == var) {
          args.push_back(a);
          args.push_back(b);
          ++pos;
        } else {
          args.push_back(rest[rest_at++]);
        }
      }
      Series value = deviation(BaseOp::Associator, idx, args, ctx);
      push_check(report,
                 "level-one dev " + std::to_string(first) + " arg" + std::to_string(var),
                 value, bound);
    }
  }
  return report;
}

ResidueReport verify_regularity(const LoopTerm& word, int var, const std::vector<int>& degrees,
                                int N) {
  std::map<int, bool> gens;
  collect_generators(word, gens);
  int word_arity = 0;
  for (const auto& [id, present] : gens) word_arity = std::max(word_arity, id);
  if (word_arity == 0) word_arity = 1;  // constant word: treat as unary
  if (var < 1 || var > word_arity) throw DomainError("verify_regularity: variable out of range");
  if (static_cast<int>(degrees.size()) != word_arity + 1)
    throw DomainError("verify_regularity: need one degree per deviation argument (" +
                      std::to_string(word_arity + 1) + ")");

  int total = 0;
  for (int d : degrees) total += d;
  if (N < total) throw DomainError("verify_regularity: order must be >= sum of degrees");

  SeriesLoopContext ctx{N};
  ResidueReport report;
  report.pass = true;
  report.order = N;

  int next_gen = 1;
  std::vector<Series> args;
  args.reserve(degrees.size());
  for (int d : degrees) args.push_back(filtration_element(d, next_gen, N));

  auto phi = [&](const std::vector<Series>& xs) {
    std::map<int, Series> assignment;
    for (int i = 0; i < word_arity; ++i) assignment.emplace(i + 1, xs[i]);
    return eval_term(word, ctx, assignment);
  };

  // Precondition: the word itself respects nu on the two collapsed profiles
  // (the split slot taking each half of the pair alone).
  for (int drop = 0; drop < 2; ++drop) {
    std::vector<Series> collapsed;
    int collapsed_total = 0;
    for (int i = 0; i < static_cast<int>(degrees.size()); ++i) {
      if (i == var - 1 + (1 - drop)) continue;  // drop one of the pair
      collapsed.push_back(args[i]);
      collapsed_total += degrees[i];
    }
    Series value = phi(collapsed);
    ResidueCheck check;
    check.what = std::string("precondition: word on profile without ") +
                 (drop ? "first" : "second") + " split element";
    check.nu_value = residue_nu(value);
    check.bound = collapsed_total;
    check.pass = nu_at_least(check.nu_value, check.bound);
    if (!check.pass) {
      report.precondition_ok = false;
      report.pass = false;
    }
    report.checks.push_back(std::move(check));
  }
  if (!report.precondition_ok) return report;

  LoopFunction<SeriesLoopContext> fn = phi;
  auto dev = derived_deviation(fn, word_arity, var, ctx);
  Series value = dev(args);
  push_check(report, "derived deviation at var " + std::to_string(var), value, total);
  return report;
}

}  // namespace loopforge
