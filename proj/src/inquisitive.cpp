#include "esakia/inquisitive.hpp"

#include <algorithm>

namespace esakia {

MedvedevFrame medvedev_frame(const Poset& x, const Limits& lim) {
  if (!is_antichain(x)) throw NotDiscrete("V(X) is only built over a discrete X");
  std::size_t n = x.size();
  if (n >= 63 || (std::size_t{1} << n) - 1 > lim.layer_elements)
    throw SizeLimitExceeded("V(X) over " + std::to_string(n) + " points passes " +
                            std::to_string(lim.layer_elements) + " elements");
  std::vector<Mask> subsets;
  for (std::size_t bits = 1; bits < (std::size_t{1} << n); ++bits) {
    Mask m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (bits >> i & 1) m.set(i);
    }
    subsets.push_back(std::move(m));
  }
  std::sort(subsets.begin(), subsets.end(), canonical_less);
  std::size_t k = subsets.size();
  std::vector<std::string> names;
  std::vector<Mask> up(k, Mask(k));
  for (std::size_t a = 0; a < k; ++a) {
    std::string s = "{";
    for (auto i : members(subsets[a])) s += (s.size() > 1 ? "," : "") + x.name(i);
    names.push_back(s + "}");
    for (std::size_t b = 0; b < k; ++b) {
      if (subsets[b].is_subset_of(subsets[a])) up[a].set(b);
    }
  }
  return {x, Poset::from_up_sets_unchecked(std::move(names), std::move(up)), std::move(subsets)};
}

MedvedevFrame medvedev_frame(std::size_t n, const Limits& lim) { return medvedev_frame(antichain(n), lim); }

Mask bracket(const MedvedevFrame& v, const Mask& u) {
  Mask out(v.poset.size());
  for (std::size_t d = 0; d < v.subsets.size(); ++d) {
    if (v.subsets[d].is_subset_of(u)) out.set(d);
  }
  return out;
}

std::vector<Mask> bracket_decomposition(const MedvedevFrame& v, const Mask& w) {
  if (w.size() != v.poset.size() || !v.poset.is_upset(w)) throw NotAnUpset("not an upset of V(X)");
  std::vector<Mask> out;
  for (auto d : members(w)) {
    // d is a largest subset in w iff nothing strictly below it is in w.
    Mask below = v.poset.down(d);
    below.reset(d);
    if (!below.intersects(w)) out.push_back(v.subsets[d]);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Layer vmax_step(const MedvedevFrame& v, const Limits& lim) {
  const Poset& p = v.poset;
  std::vector<std::size_t> singleton(v.ground.size());
  for (std::size_t d = 0; d < v.subsets.size(); ++d) {
    if (v.subsets[d].count() == 1) singleton[v.subsets[d].find_first()] = d;
  }
  StepOptions opts;
  opts.index = 1;
  opts.filter.accept = [&](const Mask& c) {
    Mask points(v.ground.size());
    for (auto d = c.find_first(); d != Mask::npos; d = c.find_next(d)) points |= v.subsets[d];
    for (auto x = points.find_first(); x != Mask::npos; x = points.find_next(x)) {
      if (!c.test(singleton[x])) return false;
    }
    return true;
  };
  // Under the terminal witness every rooted subset is open.
  return vietoris_step(GContext(p, {terminal_map(p)}), opts, lim);
}

std::vector<std::size_t> max_bijection(const MComplex& m, std::size_t k) {
  std::vector<std::size_t> out;
  std::vector<bool> hit(m.frame.ground.size(), false);
  const Poset& p = m.layers[k].poset();
  for (auto t : members(max_elements(p))) {
    std::size_t d = t;
    for (std::size_t j = k; j > 0; --j) d = (*m.layers[j].root())(d);
    const Mask& s = m.frame.subsets[d];
    if (s.count() != 1) throw ConsistencyFailure("maximal " + p.name(t) + " does not lie over a point");
    std::size_t x = s.find_first();
    if (hit[x]) throw ConsistencyFailure("two maximal elements of layer " + std::to_string(k) + " over one point");
    hit[x] = true;
    out.push_back(x);
  }
  if (out.size() != hit.size())
    throw ConsistencyFailure("layer " + std::to_string(k) + " misses a point among its maximal elements");
  std::sort(out.begin(), out.end());
  return out;
}

MComplex m_complex(const Poset& x, std::size_t depth, const Limits& lim) {
  MComplex m{medvedev_frame(x, lim), {}};
  m.layers.emplace_back(m.frame.poset, Mode::ha);
  if (depth >= 1) m.layers.push_back(vmax_step(m.frame, lim));
  for (std::size_t k = 1; k < depth; ++k) {
    StepOptions opts;
    opts.index = k + 1;
    m.layers.push_back(vietoris_step(GContext(m.layers[k].poset(), {*m.layers[k].root()}), opts, lim));
  }
  for (std::size_t k = 0; k <= depth; ++k) max_bijection(m, k);
  return m;
}

std::vector<Mask> regular_elements(const Poset& p, const Limits& lim) {
  std::vector<Mask> out;
  UpsetLattice l = upsets(p, lim);
  for (const auto& u : l.members()) {
    if (negation(p, negation(p, u)) == u) out.push_back(u);
  }
  return out;
}

bool is_regularly_generated(const Poset& p, const Limits& lim) {
  return heyting_closure(p, regular_elements(p, lim), lim).size() == upsets(p, lim).size();
}

}  // namespace esakia
