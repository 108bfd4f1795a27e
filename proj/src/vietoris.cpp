#include "esakia/vietoris.hpp"

#include <algorithm>
#include <numeric>

#include "esakia/varieties.hpp"
#include "open_search.hpp"

namespace esakia {

std::string to_string(Mode m) {
  switch (m) {
    case Mode::ha:
      return "ha";
    case Mode::boolean:
      return "bool";
    case Mode::kc:
      return "kc";
    case Mode::lc:
      return "lc";
  }
  return "ha";
}

Mode parse_mode(std::string_view s) {
  if (s == "ha") return Mode::ha;
  if (s == "bool") return Mode::boolean;
  if (s == "kc") return Mode::kc;
  if (s == "lc") return Mode::lc;
  throw InvalidInput("unknown mode '" + std::string(s) + "' (expected ha, bool, kc or lc)");
}

std::size_t restriction_start(Mode m) {
  switch (m) {
    case Mode::ha:
      return 0;
    case Mode::boolean:
      return 1;
    case Mode::kc:
    case Mode::lc:
      return 2;
  }
  return 0;
}

GContext::GContext(Poset base, std::vector<MonotoneMap> witnesses)
    : base_(std::move(base)), witnesses_(std::move(witnesses)) {
  if (witnesses_.empty()) throw IncompatibleMaps("a g-context needs at least one witness");
  for (const auto& w : witnesses_) {
    if (!(w.domain() == base_)) throw IncompatibleMaps("witness domain differs from the base");
  }
}

bool is_g_open_subset(const GContext& ctx, const Mask& s) {
  auto u = detail::universe_of(ctx);
  for (auto y = s.find_first(); y != Mask::npos; y = s.find_next(y)) {
    if (!detail::obligation_met(u, s, y)) return false;
  }
  return true;
}

bool is_g_open_map(const MonotoneMap& f, const MonotoneMap& g) {
  if (!(f.codomain() == g.domain())) throw IncompatibleMaps("codomain of f is not the domain of g");
  const Poset& a = f.domain();
  const Poset& b = f.codomain();
  for (std::size_t x = 0; x < a.size(); ++x) {
    Mask reach(g.codomain().size());
    const Mask& u = a.up(x);
    for (auto t = u.find_first(); t != Mask::npos; t = u.find_next(t)) reach.set(g(f(t)));
    if (!g.image(b.up(f(x))).is_subset_of(reach)) return false;
  }
  return true;
}

Layer::Layer(Poset base, Mode mode) : index_(0), poset_(std::move(base)), mode_(mode) {}

Layer::Layer(std::size_t index, Poset poset, std::vector<Mask> provenance, MonotoneMap root, Mode mode)
    : index_(index), poset_(std::move(poset)), provenance_(std::move(provenance)), root_(std::move(root)),
      mode_(mode) {
  lookup_.reserve(provenance_.size());
  for (std::size_t i = 0; i < provenance_.size(); ++i) lookup_.emplace(provenance_[i], i);
}

std::optional<std::size_t> Layer::locate(const Mask& s) const {
  auto it = lookup_.find(s);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Layer vietoris_step(const GContext& ctx, const StepOptions& opts, const Limits& lim) {
  const Poset& p = ctx.base();
  auto universe = detail::universe_of(ctx);
  std::size_t nodes = 0;
  detail::OpenSearch search(universe, opts.filter, lim, nodes);
  std::vector<Mask> sets;
  std::vector<std::pair<std::size_t, Mask>> found;
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::size_t before = sets.size();
    search.run(x, p.all(), sets);
    std::sort(sets.begin() + static_cast<std::ptrdiff_t>(before), sets.end(), canonical_less);
    for (std::size_t k = before; k < sets.size(); ++k) found.emplace_back(x, sets[k]);
  }
  sets.clear();
  std::size_t n = found.size();
  std::vector<std::vector<std::size_t>> by_root(p.size());
  std::vector<std::string> names;
  std::vector<Mask> prov;
  std::vector<std::size_t> root(n);
  names.reserve(n);
  prov.reserve(n);
  std::string prefix = "L" + std::to_string(opts.index) + ":";
  for (std::size_t i = 0; i < n; ++i) {
    root[i] = found[i].first;
    by_root[root[i]].push_back(i);
    names.push_back(prefix + p.name(root[i]) + ":" + mask_hex(found[i].second));
    prov.push_back(std::move(found[i].second));
  }
  // C <= D iff D is a subset of C; such a D is rooted inside C.
  std::vector<Mask> up(n, Mask(n));
  for (std::size_t c = 0; c < n; ++c) {
    const Mask& mc = prov[c];
    for (auto t = mc.find_first(); t != Mask::npos; t = mc.find_next(t)) {
      for (auto d : by_root[t]) {
        if (prov[d].is_subset_of(mc)) up[c].set(d);
      }
    }
  }
  Poset layer = Poset::from_up_sets_unchecked(std::move(names), std::move(up));
  MonotoneMap r(layer, p, std::move(root));
  return Layer(opts.index, std::move(layer), std::move(prov), std::move(r), opts.mode);
}

GContext step_context(const Complex& c, std::size_t i) {
  if (i == 0) return GContext(c.layers[0].poset(), c.witnesses);
  return GContext(c.layers[i].poset(), {*c.layers[i].root()});
}

void extend_complex(Complex& c, std::size_t depth, const Limits& lim) {
  while (c.depth() < depth) {
    std::size_t i = c.layers.size();
    StepOptions opts{i, c.mode, variety_filter(c, i)};
    try {
      c.layers.push_back(vietoris_step(step_context(c, i - 1), opts, lim));
    } catch (const SizeLimitExceeded& e) {
      throw SizeLimitExceeded(std::string(e.what()) + " while building layer " + std::to_string(i) +
                              " (layers 0.." + std::to_string(i - 1) + " completed)");
    }
  }
}

Complex build_complex(const Poset& base, std::vector<MonotoneMap> witnesses, std::size_t depth, Mode mode,
                      const Limits& lim) {
  GContext check(base, witnesses);
  Complex c;
  c.mode = mode;
  c.witnesses = std::move(witnesses);
  c.layers.emplace_back(base, mode);
  extend_complex(c, depth, lim);
  return c;
}

MonotoneMap composite_root(const Complex& c, std::size_t i, std::size_t j) {
  MonotoneMap m = identity(c.layers[i].poset());
  for (std::size_t k = i; k > j; --k) m = compose(*c.layers[k].root(), m);
  return m;
}

MonotoneMap lift_point_map(const MonotoneMap& h, const GContext& ctx, const Layer& target) {
  if (!(h.codomain() == ctx.base())) throw IncompatibleMaps("map does not land in the context's base");
  if (target.index() == 0 || !(target.root()->codomain() == ctx.base()))
    throw IncompatibleMaps("target layer is not a step over the context's base");
  for (const auto& g : ctx.witnesses()) {
    if (!is_g_open_map(h, g)) throw NotGOpen("map is not open for every witness");
  }
  const Poset& z = h.domain();
  std::vector<std::size_t> a(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    auto loc = target.locate(h.image(z.up(i)));
    if (!loc) throw MissingElement("h[up " + z.name(i) + "] is not an element of the target layer");
    a[i] = *loc;
  }
  return MonotoneMap(z, target.poset(), std::move(a));
}

MonotoneMap lift_direct_image(const MonotoneMap& p, const GContext& cx, const Layer& lx, const GContext& cy,
                              const Layer& ly) {
  if (!(p.domain() == cx.base()) || !(p.codomain() == cy.base()))
    throw IncompatibleMaps("map does not run between the two bases");
  if (lx.index() == 0 || ly.index() == 0 || !(lx.root()->codomain() == cx.base()) ||
      !(ly.root()->codomain() == cy.base()))
    throw IncompatibleMaps("layers are not steps over the two bases");
  if (cx.witnesses().size() != cy.witnesses().size())
    throw IncompatibleMaps("contexts have different numbers of witnesses");
  for (std::size_t w = 0; w < cx.witnesses().size(); ++w) {
    const auto& gx = cx.witnesses()[w];
    const auto& gy = cy.witnesses()[w];
    if (!(gx.codomain() == gy.codomain()) || compose(gy, p).assignment() != gx.assignment())
      throw IncompatibleMaps("witness triangle " + std::to_string(w) + " does not commute");
  }
  std::vector<std::size_t> a(lx.size());
  for (std::size_t c = 0; c < lx.size(); ++c) {
    auto loc = ly.locate(p.image(lx.provenance(c)));
    if (!loc) throw ImageNotInLayer("image of " + lx.poset().name(c) + " is not an element of the target layer");
    a[c] = *loc;
  }
  return MonotoneMap(lx.poset(), ly.poset(), std::move(a));
}

std::vector<std::size_t> unit_thread(const Complex& c, std::size_t x, std::size_t depth) {
  if (depth > c.depth())
    throw InsufficientDepth("thread to depth " + std::to_string(depth) + " needs more layers");
  std::vector<std::size_t> out{x};
  for (std::size_t i = 1; i <= depth; ++i) {
    const Layer& prev = c.layers[i - 1];
    auto loc = c.layers[i].locate(prev.poset().up(out.back()));
    if (!loc)
      throw MissingElement("up(" + prev.poset().name(out.back()) + ") was filtered out of layer " +
                           std::to_string(i));
    out.push_back(*loc);
  }
  return out;
}

namespace {

ProductComplex complex_over(ProductResult base, std::size_t depth, Mode mode, const Limits& lim) {
  ProductComplex out{base, build_complex(base.poset, {base.first, base.second}, depth, mode, lim), {}, {}};
  for (std::size_t i = 0; i <= depth; ++i) {
    MonotoneMap down = composite_root(out.complex, i);
    out.first.push_back(compose(base.first, down));
    out.second.push_back(compose(base.second, down));
  }
  return out;
}

}  // namespace

ProductComplex product_complex(const Poset& x, const Poset& y, std::size_t depth, Mode mode, const Limits& lim) {
  return complex_over(product(x, y, lim), depth, mode, lim);
}

ProductComplex pullback_complex(const MonotoneMap& f, const MonotoneMap& g, std::size_t depth, const Limits& lim) {
  if (!(f.codomain() == g.codomain())) throw IncompatibleMaps("pullback needs a common codomain");
  if (!is_p_morphism(f) || !is_p_morphism(g)) throw NotPMorphism("pullback legs must be p-morphisms");
  return complex_over(pullback(f, g, lim), depth, Mode::ha, lim);
}

CodistributivityResult codistributivity_check(const Poset& x, const Poset& y, const Poset& z, std::size_t depth,
                                              const Limits& lim) {
  ProductComplex lhs = product_complex(x, disjoint_union(y, z), depth, Mode::ha, lim);
  ProductComplex left = product_complex(x, y, depth, Mode::ha, lim);
  ProductComplex right = product_complex(x, z, depth, Mode::ha, lim);

  // Layer 0: (a, inl b) -> inl (a,b), (a, inr c) -> inr (a,c).
  std::size_t ny = y.size(), nz = z.size(), nxy = x.size() * ny;
  std::vector<std::size_t> iso(lhs.base.poset.size());
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t u = 0; u < ny + nz; ++u) {
      std::size_t k = a * (ny + nz) + u;
      iso[k] = u < ny ? a * ny + u : nxy + a * nz + (u - ny);
    }
  }
  CodistributivityResult out;
  out.holds = true;
  for (std::size_t n = 0; n <= depth; ++n) {
    const Layer& ll = lhs.complex.layers[n];
    const Layer& la = left.complex.layers[n];
    const Layer& lb = right.complex.layers[n];
    Poset rhs = disjoint_union(la.poset(), lb.poset());
    if (n > 0) {
      // Transport each subset along the previous level's bijection; a rooted
      // subset lands entirely in one summand.
      std::size_t na_prev = left.complex.layers[n - 1].size();
      std::size_t nb_prev = right.complex.layers[n - 1].size();
      std::vector<std::size_t> next(ll.size(), rhs.size());
      for (std::size_t c = 0; c < ll.size(); ++c) {
        Mask in_a(na_prev), in_b(nb_prev);
        for (auto t : members(ll.provenance(c))) {
          if (iso[t] < na_prev) {
            in_a.set(iso[t]);
          } else if (iso[t] < na_prev + nb_prev) {
            in_b.set(iso[t] - na_prev);
          }
        }
        if (in_a.any() == in_b.any()) continue;
        if (in_a.any()) {
          if (auto loc = la.locate(in_a)) next[c] = *loc;
        } else if (auto loc = lb.locate(in_b)) {
          next[c] = la.size() + *loc;
        }
      }
      iso = std::move(next);
    }
    auto w = check_isomorphism(ll.poset(), rhs, iso);
    if (!w && ll.size() <= lim.iso_elements && rhs.size() <= lim.iso_elements) w = is_isomorphic(ll.poset(), rhs, lim);
    if (w) {
      iso = w->forward.assignment();
    } else {
      out.holds = false;
    }
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

}  // namespace esakia
