#pragma once

#include <vector>

#include "esakia/birkhoff.hpp"
#include "esakia/vietoris.hpp"

namespace esakia {

// V(X) for a discrete X: nonempty subsets of X, D above C iff D is a subset
// of C. Elements are sorted by (cardinality, member list) and named
// "{a,b}" after their members.
struct MedvedevFrame {
  Poset ground;
  Poset poset;
  // Parallel to poset: the subset of ground each element stands for.
  std::vector<Mask> subsets;
};

// Throws NotDiscrete, SizeLimitExceeded (past lim.layer_elements elements).
MedvedevFrame medvedev_frame(const Poset& x, const Limits& lim = Limits::defaults());
// Over antichain(n).
MedvedevFrame medvedev_frame(std::size_t n, const Limits& lim = Limits::defaults());

// [U] = { D : D subset of U } as an upset of V(X).
Mask bracket(const MedvedevFrame& v, const Mask& u);
// Subsets U whose brackets have union w: the members of w that are maximal
// as subsets. Throws NotAnUpset.
std::vector<Mask> bracket_decomposition(const MedvedevFrame& v, const Mask& w);

// Rooted subsets C of V(X) with {x} in C whenever x lies in some member of C.
// Throws NotDiscrete, SizeLimitExceeded.
Layer vmax_step(const MedvedevFrame& v, const Limits& lim = Limits::defaults());

struct MComplex {
  MedvedevFrame frame;
  // M_0 = V(X), M_1 = V_max(X), M_{k+1} = rooted r_k-open subsets of M_k.
  std::vector<Layer> layers;

  std::size_t depth() const { return layers.size() - 1; }
  const Layer& operator[](std::size_t i) const { return layers[i]; }
};

// Throws NotDiscrete, SizeLimitExceeded, and ConsistencyFailure if some
// layer's maximal elements are not in bijection with X through the roots.
MComplex m_complex(const Poset& x, std::size_t depth, const Limits& lim = Limits::defaults());
// Maximal elements of layer k mapped to X, in the order of X. Throws
// ConsistencyFailure when this is not a bijection.
std::vector<std::size_t> max_bijection(const MComplex& m, std::size_t k);

// Upsets fixed by double negation, sorted.
std::vector<Mask> regular_elements(const Poset& p, const Limits& lim = Limits::defaults());
// The regular upsets generate all upsets under meet, join and implication.
bool is_regularly_generated(const Poset& p, const Limits& lim = Limits::defaults());

}  // namespace esakia
