#include "loopforge/filtration.hpp"

#include "loopforge/brackets.hpp"
#include "loopforge/loop_algebra.hpp"

#include <algorithm>
#include <set>

namespace loopforge {

bool subloop_subset(const Subloop& inner, const Subloop& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

namespace {

// All ordered compositions of n into k positive parts.
void compositions_into(int n, int k, std::vector<int>& current,
                       std::vector<std::vector<int>>& out) {
  if (k == 1) {
    current.push_back(n);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int first = 1; first + (k - 1) <= n; ++first) {
    current.push_back(first);
    compositions_into(n - first, k - 1, current, out);
    current.pop_back();
  }
}

void index_words_for(int level, std::vector<int>& current,
                     std::vector<DeviationIndices>& out) {
  if (static_cast<int>(current.size()) == level) {
    out.push_back(DeviationIndices{current});
    return;
  }
  const int i = static_cast<int>(current.size()) + 1;
  for (int alpha = 1; alpha <= i + 2; ++alpha) {
    current.push_back(alpha);
    index_words_for(level, current, out);
    current.pop_back();
  }
}

// Visits every deviation value of the given level whose argument tuple is
// drawn from the given sets. Tuples containing the identity are skipped:
// such values are always the identity.
template <class Visit>
void for_each_deviation_value(const CayleyLoop& loop, int level,
                              const std::vector<const Subloop*>& argument_sets,
                              Visit&& visit) {
  std::vector<DeviationIndices> words;
  std::vector<int> scratch;
  index_words_for(level, scratch, words);

  const int arity = level + 3;
  std::vector<std::size_t> pick(arity, 0);
  std::vector<int> args(arity);
  for (const auto& word : words) {
    std::fill(pick.begin(), pick.end(), 0);
    while (true) {
      bool skip = false;
      for (int i = 0; i < arity; ++i) {
        args[i] = (*argument_sets[i])[pick[i]];
        if (args[i] == 0) skip = true;
      }
      if (!skip) visit(deviation(BaseOp::Associator, word, args, loop));
      int i = 0;
      for (; i < arity; ++i) {
        if (++pick[i] < argument_sets[i]->size()) break;
        pick[i] = 0;
      }
      if (i == arity) break;
    }
  }
}

int default_unit_level_cap(int order) { return order <= 8 ? 3 : 2; }

}  // namespace

GammaResult gamma_series(const CayleyLoop& loop, const GammaOptions& options) {
  if (options.n_max < 1) throw DomainError("gamma_series: n_max must be >= 1");
  const int unit_cap = options.unit_level_cap >= 0 ? options.unit_level_cap
                                                   : default_unit_level_cap(loop.size());
  const bool associative = loop.is_associative();
  const Subloop everything = full_subloop(loop);

  GammaResult result;
  result.series.push_back(everything);

  // Memoized whole-loop deviation value sets per weight (independent of n).
  std::map<int, std::vector<int>> unit_values;
  auto unit_values_for = [&](int weight) -> const std::vector<int>& {
    auto it = unit_values.find(weight);
    if (it != unit_values.end()) return it->second;
    std::set<int> values;
    std::vector<const Subloop*> sets(weight, &everything);
    for_each_deviation_value(loop, weight - 3, sets,
                             [&](int v) { values.insert(v); });
    return unit_values.emplace(weight, std::vector<int>(values.begin(), values.end()))
        .first->second;
  };

  for (int n = 2; n <= options.n_max; ++n) {
    const Subloop& prev = result.series.back();
    if (prev.size() == 1) {
      result.series.push_back(prev);
      continue;
    }
    auto gamma_at = [&](int p) -> const Subloop& {
      return p <= static_cast<int>(result.series.size()) ? result.series[p - 1]
                                                         : result.series.back();
    };

    std::set<int> generators;
    // Commutators [gamma_p, gamma_q] with p + q = n.
    for (int p = 1; p < n; ++p) {
      const Subloop& first = gamma_at(p);
      const Subloop& second = gamma_at(n - p);
      for (int a : first) {
        if (a == 0) continue;
        for (int b : second) {
          if (b == 0) continue;
          generators.insert(commutator(a, b, loop));
        }
      }
    }
    Subloop closure = normal_closure(loop, {generators.begin(), generators.end()});
    if (closure == prev || associative) {
      result.series.push_back(closure);
      continue;
    }

    bool done = false;
    // Associators and deviations, ascending by weight. Exact-sum profiles
    // for weight <= n; whole-loop profiles beyond, until contained.
    for (int weight = 3; !done; ++weight) {
      bool all_contained = true;
      auto take = [&](int v) {
        if (!subloop_contains(closure, v)) {
          all_contained = false;
          generators.insert(v);
        }
      };

      if (weight < n) {
        std::vector<std::vector<int>> profiles;
        std::vector<int> scratch;
        compositions_into(n, weight, scratch, profiles);
        for (const auto& profile : profiles) {
          std::vector<const Subloop*> sets;
          sets.reserve(profile.size());
          for (int p : profile) sets.push_back(&gamma_at(p));
          for_each_deviation_value(loop, weight - 3, sets, take);
        }
      } else {
        // weight == n has the single all-ones profile; weights beyond n only
        // contribute whole-loop tuples. Both come from the memoized cache.
        for (int v : unit_values_for(weight)) take(v);
      }

      if (!all_contained) {
        closure = normal_closure(loop, {generators.begin(), generators.end()});
        if (closure == prev) {
          done = true;
          break;
        }
      }
      if (weight >= n && all_contained) {
        // Whole-loop level contained in the closure: every higher level is a
        // quotient of products of this level's values, hence contained too.
        break;
      }
      if (weight > n && weight - 3 >= unit_cap && !all_contained) {
        result.truncated = true;
        break;
      }
    }
    result.series.push_back(closure);
  }
  return result;
}

std::vector<Subloop> bruck_series(const CayleyLoop& loop, int n_max) {
  if (n_max < 1) throw DomainError("bruck_series: n_max must be >= 1");
  std::vector<Subloop> series{full_subloop(loop)};
  const int n = loop.size();
  for (int step = 2; step <= static_cast<int>(n_max); ++step) {
    const Subloop& prev = series.back();
    if (prev.size() == 1) {
      series.push_back(prev);
      continue;
    }
    std::set<int> generators;
    for (int k : prev) {
      if (k == 0) continue;
      for (int x = 0; x < n; ++x) {
        generators.insert(commutator(k, x, loop));
        for (int y = 0; y < n; ++y) {
          generators.insert(associator(k, x, y, loop));
          generators.insert(associator(x, k, y, loop));
          generators.insert(associator(x, y, k, loop));
        }
      }
    }
    Subloop next = normal_closure(loop, {generators.begin(), generators.end()});
    if (next == prev) {
      // Fixed point: every later term repeats.
      while (static_cast<int>(series.size()) < n_max) series.push_back(next);
      break;
    }
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<RationalSubspace> ideal_powers(const CayleyLoop& loop, int n_max) {
  if (n_max < 1) throw DomainError("ideal_powers: n_max must be >= 1");
  CayleyAlgebraContext algebra{loop};
  std::vector<RationalSubspace> powers;

  RationalSubspace first(loop.size());
  for (int x = 1; x < loop.size(); ++x) first.insert(augmentation_of(loop, x));
  powers.push_back(std::move(first));

  for (int m = 2; m <= n_max; ++m) {
    RationalSubspace space(loop.size());
    for (int p = 1; p < m; ++p) {
      const auto& left = powers[p - 1].basis();
      const auto& right = powers[m - p - 1].basis();
      for (const auto& u : left)
        for (const auto& v : right) space.insert(algebra.mul(u, v));
    }
    powers.push_back(std::move(space));
  }
  return powers;
}

std::vector<Subloop> dimension_subloops(const CayleyLoop& loop,
                                        const std::vector<RationalSubspace>& powers) {
  std::vector<Subloop> out;
  out.push_back(full_subloop(loop));  // D_1 = L
  for (std::size_t m = 1; m < powers.size(); ++m) {
    Subloop d{0};
    for (int x = 1; x < loop.size(); ++x)
      if (powers[m].contains(augmentation_of(loop, x))) d.push_back(x);
    std::sort(d.begin(), d.end());
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Subloop> dimension_subloops(const CayleyLoop& loop, int n_max) {
  return dimension_subloops(loop, ideal_powers(loop, n_max));
}

namespace {

LoopTerm lambda_power_term(int exponent) {
  // y (y (... y)) with `exponent` factors; 1 for exponent 0.
  if (exponent == 0) return LoopTerm::one();
  LoopTerm out = LoopTerm::gen(1);
  for (int i = 1; i < exponent; ++i) out = LoopTerm::mul(LoopTerm::gen(1), out);
  return out;
}

}  // namespace

LoopTerm periodicity_witness(const CayleyLoop& loop, int x) {
  loop.check_assignable(x);
  if (x == 0) return LoopTerm::gen(1);

  // Powers lambda_x^k(1); a repeat appears within order+1 steps.
  std::vector<int> seen_at(loop.size(), -1);
  int value = 0;
  seen_at[0] = 0;
  for (int k = 1;; ++k) {
    value = loop.mul(x, value);
    if (seen_at[value] >= 0) {
      const int m = seen_at[value];
      if (m == 0) return lambda_power_term(k);
      return LoopTerm::ldiv(lambda_power_term(m), lambda_power_term(k));
    }
    seen_at[value] = k;
  }
}

IsolatorResult isolator(const CayleyLoop& loop, const Subloop& normal_subloop) {
  if (!is_normal_subloop(loop, normal_subloop))
    throw DomainError("isolator: subloop is not normal");
  IsolatorResult result;
  for (int x = 0; x < loop.size(); ++x) result.witnesses.emplace(x, periodicity_witness(loop, x));
  result.subloop = full_subloop(loop);
  return result;
}

ChainClass classify_chain(const std::vector<Subloop>& chain) {
  ChainClass out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].size() == 1) {
      out.value = static_cast<int>(i);  // chain[i] = term i+1 trivial, class = i
      return out;
    }
  }
  if (chain.size() >= 2 && chain[chain.size() - 1] == chain[chain.size() - 2])
    out.stabilized_nontrivial = true;
  return out;
}

NilpotencyReport nilpotency_class(const CayleyLoop& loop, int n_max) {
  NilpotencyReport report;
  GammaOptions options;
  options.n_max = n_max;
  report.gamma = classify_chain(gamma_series(loop, options).series);
  report.bruck = classify_chain(bruck_series(loop, n_max));
  return report;
}

}  // namespace loopforge
