#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "esakia/poset.hpp"

namespace esakia {

enum class Mode { ha, boolean, kc, lc };

std::string to_string(Mode m);
// Accepts "ha", "bool", "kc", "lc". Throws InvalidInput.
Mode parse_mode(std::string_view s);
// First stage at which the variety filter applies (0 for HA: never).
std::size_t restriction_start(Mode m);

// A base poset together with the maps whose indexed implications a step must
// preserve.
class GContext {
 public:
  // Throws IncompatibleMaps if the list is empty or a domain differs from base.
  GContext(Poset base, std::vector<MonotoneMap> witnesses);
  const Poset& base() const { return base_; }
  const std::vector<MonotoneMap>& witnesses() const { return witnesses_; }

 private:
  Poset base_;
  std::vector<MonotoneMap> witnesses_;
};

// Every s in S and b >= s admit some s' in S with s <= s' and g(s') = g(b),
// for each witness g.
bool is_g_open_subset(const GContext& ctx, const Mask& s);
// Condition (*): f(a) <= b implies g(f(a')) = g(b) for some a' >= a.
// Throws IncompatibleMaps.
bool is_g_open_map(const MonotoneMap& f, const MonotoneMap& g);

// Extra restriction on the subsets a step enumerates. `compatible` is asked
// once for every unordered pair of members (in either argument order) and must
// hold for all of them. `admit(y, s)` is asked when a non-root y joins, with s
// the final members above y (y included). `accept` sees the finished subset.
struct StepFilter {
  std::function<bool(std::size_t, std::size_t)> compatible;
  std::function<bool(std::size_t, const Mask&)> admit;
  std::function<bool(const Mask&)> accept;
};

// One stage of a complex. Elements of a stage i >= 1 are subsets of stage i-1,
// ordered by reverse inclusion.
class Layer {
 public:
  Layer(Poset base, Mode mode);
  Layer(std::size_t index, Poset poset, std::vector<Mask> provenance, MonotoneMap root, Mode mode);

  std::size_t index() const { return index_; }
  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  Mode mode() const { return mode_; }
  // Empty at index 0.
  const std::vector<Mask>& provenance() const { return provenance_; }
  const Mask& provenance(std::size_t i) const { return provenance_[i]; }
  // Absent at index 0.
  const std::optional<MonotoneMap>& root() const { return root_; }
  std::optional<std::size_t> locate(const Mask& s) const;

 private:
  std::size_t index_ = 0;
  Poset poset_;
  std::vector<Mask> provenance_;
  std::optional<MonotoneMap> root_;
  Mode mode_ = Mode::ha;
  std::unordered_map<Mask, std::size_t> lookup_;
};

struct StepOptions {
  std::size_t index = 1;
  Mode mode = Mode::ha;
  StepFilter filter;
};

// Rooted g-open subsets of ctx.base() passing the filter. Elements are sorted
// by (root, cardinality, member list) and named "L{i}:{root}:{hex}".
// Throws SizeLimitExceeded past lim.enumeration search nodes or
// lim.layer_elements results.
Layer vietoris_step(const GContext& ctx, const StepOptions& opts = {},
                    const Limits& lim = Limits::defaults());

struct Complex {
  Mode mode = Mode::ha;
  std::vector<MonotoneMap> witnesses;
  std::vector<Layer> layers;

  std::size_t depth() const { return layers.size() - 1; }
  const Layer& operator[](std::size_t i) const { return layers[i]; }
};

// V_0 = base with the given witnesses, V_{i+1} = step over V_i with its root
// map as the only witness. SizeLimitExceeded reports the completed prefix.
Complex build_complex(const Poset& base, std::vector<MonotoneMap> witnesses, std::size_t depth,
                      Mode mode = Mode::ha, const Limits& lim = Limits::defaults());
// Adds layers until c.depth() == depth.
void extend_complex(Complex& c, std::size_t depth, const Limits& lim = Limits::defaults());
// The context whose step produces layer i+1.
GContext step_context(const Complex& c, std::size_t i);
// Root maps composed from layer i down to layer j <= i.
MonotoneMap composite_root(const Complex& c, std::size_t i, std::size_t j = 0);

// a -> h[up(a)] located in `target`. Throws NotGOpen, IncompatibleMaps,
// MissingElement.
MonotoneMap lift_point_map(const MonotoneMap& h, const GContext& ctx, const Layer& target);
// C -> p[C] from the step over cx to the step over cy. Throws
// IncompatibleMaps when the witness triangles do not commute and
// ImageNotInLayer when an image is not an element of ly.
MonotoneMap lift_direct_image(const MonotoneMap& p, const GContext& cx, const Layer& lx,
                              const GContext& cy, const Layer& ly);
// (x, up x, up(up x), ...) as element indices of layers 0..depth.
// Throws InsufficientDepth, MissingElement.
std::vector<std::size_t> unit_thread(const Complex& c, std::size_t x, std::size_t depth);

struct ProductComplex {
  ProductResult base;
  Complex complex;
  // Per layer, the composite maps to the two factors.
  std::vector<MonotoneMap> first;
  std::vector<MonotoneMap> second;
};

ProductComplex product_complex(const Poset& x, const Poset& y, std::size_t depth,
                               Mode mode = Mode::ha, const Limits& lim = Limits::defaults());
// Throws NotPMorphism, IncompatibleMaps.
ProductComplex pullback_complex(const MonotoneMap& f, const MonotoneMap& g, std::size_t depth,
                                const Limits& lim = Limits::defaults());

struct CodistributivityResult {
  bool holds = false;
  // Layer n of the complex over X x (Y + Z) onto the disjoint union of the
  // layers n over X x Y and X x Z.
  std::vector<std::optional<IsoWitness>> witnesses;
};

CodistributivityResult codistributivity_check(const Poset& x, const Poset& y, const Poset& z,
                                              std::size_t depth,
                                              const Limits& lim = Limits::defaults());

}  // namespace esakia
