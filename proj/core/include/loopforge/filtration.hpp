#pragma once

#include "loopforge/cayley_loop.hpp"
#include "loopforge/rational_linalg.hpp"
#include "loopforge/term.hpp"

#include <map>
#include <optional>
#include <vector>

namespace loopforge {

struct GammaOptions {
  int n_max = 6;
  // Deviation families with all arguments ranging over the whole loop are
  // enumerated by ascending level until every value of a level already lies
  // in the closure built so far (then all higher levels are contained too,
  // since a level-(l+1) value is a quotient of products of level-l values).
  // This cap bounds the ascent when that test never settles; hitting it sets
  // `truncated` on the result. Negative = choose by loop order.
  int unit_level_cap = -1;
};

struct GammaResult {
  std::vector<Subloop> series;  // series[k] = gamma_{k+1}; series[0] = L
  bool truncated = false;
};

// The commutator-associator filtration: gamma_1 = L and gamma_n the minimal
// normal subloop containing all bracket values whose argument weights sum to
// at least n. Exact-sum profiles are enumerated for bracket weights <= n and
// whole-loop profiles for weights > n.
GammaResult gamma_series(const CayleyLoop& loop, const GammaOptions& options = {});

// Bruck's lower central series: L_1 = L, L_n = minimal normal N with
// L_{n-1}/N central in L/N, generated by commutators and associators that
// involve an element of L_{n-1}. Stops early once stable (sound: each term
// is a function of the previous one).
std::vector<Subloop> bruck_series(const CayleyLoop& loop, int n_max);

// Powers of the augmentation ideal: I^1 = span{x - 1} and
// I^n = sum over p+q=n of span(I^p I^q), in reduced echelon form.
std::vector<RationalSubspace> ideal_powers(const CayleyLoop& loop, int n_max);

// D_n = { x : x - 1 in I^n }.
std::vector<Subloop> dimension_subloops(const CayleyLoop& loop, int n_max);
std::vector<Subloop> dimension_subloops(const CayleyLoop& loop,
                                        const std::vector<RationalSubspace>& powers);

// A one-generator word w with nonzero degree and w(x) = identity, found by
// pigeonhole on the left-multiplication powers of x; degree <= loop order.
LoopTerm periodicity_witness(const CayleyLoop& loop, int x);

// Isolator of a normal subloop. Finite loops are all-periodic, so the result
// is the whole loop; the per-element witness words are the evidence.
struct IsolatorResult {
  Subloop subloop;
  std::map<int, LoopTerm> witnesses;  // element -> word carrying it into K
};
IsolatorResult isolator(const CayleyLoop& loop, const Subloop& normal_subloop);

struct ChainClass {
  std::optional<int> value;         // minimal n with term_{n+1} trivial
  bool stabilized_nontrivial = false;  // chain went constant above trivial
};

struct NilpotencyReport {
  ChainClass gamma;
  ChainClass bruck;
};
NilpotencyReport nilpotency_class(const CayleyLoop& loop, int n_max = 8);

ChainClass classify_chain(const std::vector<Subloop>& chain);

bool subloop_subset(const Subloop& inner, const Subloop& outer);

}  // namespace loopforge
