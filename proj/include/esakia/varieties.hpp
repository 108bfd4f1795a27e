#pragma once

#include <vector>

#include "esakia/vietoris.hpp"

namespace esakia {

// Filter for building layer `next_index` of `c` under c.mode. Empty before
// the mode's restriction stage.
StepFilter variety_filter(const Complex& c, std::size_t next_index);

// Singletons of P, discretely ordered, with the root map back to P.
Layer boolean_step(const Poset& p, const Limits& lim = Limits::defaults());

// Every ordered pair (D, D') of the given subsets of `ground` has
// up(D) meeting down(D').
bool well_directed(const Poset& ground, const std::vector<Mask>& members);
// Element `elem` of layer `stage` (>= 2), with closures taken in layer
// stage-2, the poset its members are subsets of.
bool is_well_directed(const Complex& c, std::size_t stage, std::size_t elem);

// Members of C pairwise comparable in `ambient`.
bool is_linearised(const Mask& c, const Poset& ambient);

struct FilterComparison {
  bool coincide = true;
  std::size_t checked = 0;
  // Elements where the two predicates disagree.
  std::vector<std::size_t> mismatches;
};

// On layer 2 of an unrestricted complex: C lies in [X-U] or in
// V_1 - [X-U] for every upset U of the base, iff C is well directed.
FilterComparison kc_filter_characterization(const Complex& c, const Limits& lim = Limits::defaults());
// On layer 1 of an unrestricted complex: C is a singleton iff for every upset
// U of the base, C lies in [U] or in the Heyting negation of [U] within the
// upsets of layer 1.
FilterComparison boolean_filter_characterization(const Complex& c, const Limits& lim = Limits::defaults());
// For a layer whose elements are subsets of `ambient`: C lies in
// [-U | V] or [-V | U] for all upsets U, V of ambient, iff C is linearised.
FilterComparison lc_filter_characterization(const Layer& stage, const Poset& ambient,
                                            const Limits& lim = Limits::defaults());

struct LcFree {
  // Layers V_0, V_1, V_2^L, V_3^L.
  Complex complex;
  const Poset& dual() const { return complex.layers[2].poset(); }
  // Root map V_3^L -> V_2^L as an isomorphism.
  IsoWitness stable;
};

// Throws StabilizationFailure if V_2^L is not prelinear or the root map
// V_3^L -> V_2^L is not an isomorphism.
LcFree lc_free(const Poset& x, std::vector<MonotoneMap> witnesses, const Limits& lim = Limits::defaults());
// lc_free over P x Q with both projections as witnesses. Throws NotPrelinear.
LcFree godel_coproduct(const Poset& p, const Poset& q, const Limits& lim = Limits::defaults());

struct StabilizationVerdict {
  bool root_is_iso = false;
  bool antichain = false;
  bool agree() const { return root_is_iso == antichain; }
};

StabilizationVerdict stabilization_check(const Poset& x, const Limits& lim = Limits::defaults());

}  // namespace esakia
