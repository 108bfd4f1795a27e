#include "esakia/universal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "open_search.hpp"

namespace esakia {

namespace {

using Id = ConeEngine::Id;
using Ids = std::vector<Id>;

struct IdsHash {
  std::size_t operator()(const Ids& v) const { return boost::hash_range(v.begin(), v.end()); }
};

// Elements of a layer past the seed, in creation order.
struct LazyLayer {
  std::deque<Ids> prov;
  Ids root;
  std::unordered_map<Ids, Id, IdsHash> index;
};

struct Memo {
  std::unordered_map<Id, Ids> cone;
  std::unordered_map<Id, Ids> fiber;
  std::unordered_map<Id, Id> principal;
  std::unordered_map<Id, bool> prestable;
  std::unordered_map<Id, bool> stable;
};

}  // namespace

struct ConeEngine::Impl {
  Complex seed;
  Limits lim;
  std::size_t depth;
  // Seed layers: provenance as id lists and root fibers (index k for layer k).
  std::vector<std::deque<Ids>> full_prov;
  std::vector<std::vector<Ids>> full_by_root;
  std::deque<LazyLayer> lazy;
  std::deque<Memo> memo;

  Impl(Complex c, const Limits& l) : seed(std::move(c)), lim(l), depth(seed.depth()) {
    full_prov.resize(depth + 1);
    full_by_root.resize(depth + 1);
    for (std::size_t k = 1; k <= depth; ++k) {
      const Layer& layer = seed[k];
      full_by_root[k].resize(seed[k - 1].size());
      for (std::size_t x = 0; x < layer.size(); ++x) {
        full_prov[k].push_back(members(layer.provenance(x)));
        full_by_root[k][(*layer.root())(x)].push_back(x);
      }
    }
  }

  LazyLayer& lazy_layer(std::size_t k) {
    if (seed.mode != Mode::ha) throw InvalidInput("layers past the seed need an HA complex");
    if (lazy.size() <= k) lazy.resize(k + 1);
    return lazy[k];
  }

  Memo& memo_of(std::size_t k) {
    if (memo.size() <= k) memo.resize(k + 1);
    return memo[k];
  }

  std::size_t known_size(std::size_t k) {
    if (k <= depth) return seed[k].size();
    return lazy_layer(k).root.size();
  }

  Id root(std::size_t k, Id x) {
    if (k == 0) throw InvalidInput("layer 0 has no root map");
    if (k <= depth) return (*seed[k].root())(x);
    return lazy_layer(k).root.at(x);
  }

  const Ids& provenance(std::size_t k, Id x) {
    if (k == 0) throw InvalidInput("layer 0 has no provenance");
    if (k <= depth) return full_prov[k].at(x);
    return lazy_layer(k).prov.at(x);
  }

  Id intern(std::size_t k, Ids prov, Id r) {
    LazyLayer& l = lazy_layer(k);
    auto it = l.index.find(prov);
    if (it != l.index.end()) return it->second;
    if (l.root.size() >= lim.layer_elements)
      throw SizeLimitExceeded("on-demand layer " + std::to_string(k) + " passed " +
                              std::to_string(lim.layer_elements) + " elements");
    Id id = l.root.size();
    l.index.emplace(prov, id);
    l.prov.push_back(std::move(prov));
    l.root.push_back(r);
    return id;
  }

  std::optional<Id> find(std::size_t k, const Ids& prov) {
    if (k == 0) return std::nullopt;
    if (k <= depth) {
      std::size_t n = seed[k - 1].size();
      for (auto t : prov) {
        if (t >= n) return std::nullopt;
      }
      return seed[k].locate(make_mask(n, prov));
    }
    LazyLayer& l = lazy_layer(k);
    auto it = l.index.find(prov);
    if (it == l.index.end()) return std::nullopt;
    return it->second;
  }

  bool leq(std::size_t k, Id a, Id b) {
    if (k <= depth) return seed[k].poset().leq(a, b);
    // Reverse inclusion of provenance.
    const Ids& pa = provenance(k, a);
    const Ids& pb = provenance(k, b);
    return std::includes(pa.begin(), pa.end(), pb.begin(), pb.end());
  }

  // The openness data for the layer-k elements u (ascending). The values
  // over the full up-set of s are known without building it: g[up s] at layer
  // 0, and prov(s) itself above, since every member m of prov(s) roots the
  // element prov(s) & up(m) >= s.
  detail::OpenUniverse universe(std::size_t k, const Ids& u) {
    std::size_t n = u.size();
    detail::OpenUniverse out;
    out.up.assign(n, Mask(n));
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        if (s == t || leq(k, u[s], u[t])) out.up[s].set(t);
      }
    }
    if (k == 0) {
      const Poset& p = seed[0].poset();
      for (const auto& g : seed.witnesses) {
        std::vector<std::size_t> value(n);
        std::vector<Mask> need;
        for (std::size_t s = 0; s < n; ++s) {
          value[s] = g(u[s]);
          need.push_back(g.image(p.up(u[s])));
        }
        out.value.push_back(std::move(value));
        out.need.push_back(std::move(need));
        out.range.push_back(g.codomain().size());
      }
      return out;
    }
    std::unordered_map<Id, std::size_t> code;
    auto code_of = [&](Id t) { return code.emplace(t, code.size()).first->second; };
    std::vector<std::size_t> value(n);
    for (std::size_t s = 0; s < n; ++s) {
      value[s] = code_of(root(k, u[s]));
      for (auto t : provenance(k, u[s])) code_of(t);
    }
    std::vector<Mask> need;
    need.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
      Mask m(code.size());
      for (auto t : provenance(k, u[s])) m.set(code.at(t));
      need.push_back(std::move(m));
    }
    out.value.push_back(std::move(value));
    out.need.push_back(std::move(need));
    out.range.push_back(code.size());
    return out;
  }

  Mask local_mask(const Ids& u, const Ids& sub) {
    Mask m(u.size());
    for (auto t : sub) {
      auto it = std::lower_bound(u.begin(), u.end(), t);
      if (it == u.end() || *it != t) throw ConsistencyFailure("subset leaves its universe");
      m.set(static_cast<std::size_t>(it - u.begin()));
    }
    return m;
  }

  static Ids lift(const Ids& u, const Mask& m) {
    Ids out;
    out.reserve(m.count());
    for (auto t = m.find_first(); t != Mask::npos; t = m.find_next(t)) out.push_back(u[t]);
    return out;
  }

  const Ids& cone(std::size_t k, Id x) {
    Memo& mm = memo_of(k);
    if (auto it = mm.cone.find(x); it != mm.cone.end()) return it->second;
    Ids out;
    if (k <= depth) {
      out = members(seed[k].poset().up(x));
    } else {
      // Members of the cone are the rooted open subsets of prov(x).
      Ids u = provenance(k, x);
      auto uni = universe(k - 1, u);
      Mask allowed(u.size());
      allowed.set();
      StepFilter none;
      std::size_t nodes = 0;
      detail::OpenSearch search(uni, none, lim, nodes);
      for (auto d = allowed.find_first(); d != Mask::npos; d = allowed.find_next(d)) {
        std::vector<Mask> found;
        search.run(d, allowed, found);
        for (const auto& m : found) out.push_back(intern(k, lift(u, m), u[d]));
      }
      std::sort(out.begin(), out.end());
    }
    return mm.cone.emplace(x, std::move(out)).first->second;
  }

  const Ids& fiber(std::size_t k, Id x) {
    Memo& mm = memo_of(k);
    if (auto it = mm.fiber.find(x); it != mm.fiber.end()) return it->second;
    Ids out;
    if (k < depth) {
      out = full_by_root[k + 1].at(x);
    } else {
      Ids u = cone(k, x);
      auto uni = universe(k, u);
      StepFilter none;
      std::size_t nodes = 0;
      detail::OpenSearch search(uni, none, lim, nodes);
      std::vector<Mask> found;
      Mask all(u.size());
      all.set();
      search.run(local_mask(u, {x}).find_first(), all, found);
      for (const auto& m : found) out.push_back(intern(k + 1, lift(u, m), x));
      std::sort(out.begin(), out.end());
    }
    return mm.fiber.emplace(x, std::move(out)).first->second;
  }

  Id element(std::size_t k, const Ids& prov) {
    if (auto f = find(k, prov)) return *f;
    if (k <= depth || prov.empty() || !std::is_sorted(prov.begin(), prov.end()))
      throw MissingElement("no layer-" + std::to_string(k) + " element with that provenance");
    // The root is the member below all the others.
    std::optional<Id> r;
    for (auto t : prov) {
      if (std::all_of(prov.begin(), prov.end(), [&](Id a) { return leq(k - 1, t, a); })) {
        r = t;
        break;
      }
    }
    if (!r) throw MissingElement("subset of layer " + std::to_string(k - 1) + " is not rooted");
    auto uni = universe(k - 1, prov);
    Mask m(prov.size());
    m.set();
    for (std::size_t s = 0; s < prov.size(); ++s) {
      if (!detail::obligation_met(uni, m, s))
        throw MissingElement("subset of layer " + std::to_string(k - 1) + " is not open");
    }
    return intern(k, prov, *r);
  }

  Id principal(std::size_t k, Id x) {
    Memo& mm = memo_of(k);
    if (auto it = mm.principal.find(x); it != mm.principal.end()) return it->second;
    Id p = element(k + 1, cone(k, x));
    mm.principal.emplace(x, p);
    return p;
  }

  bool prestable(std::size_t k, Id x) {
    Memo& mm = memo_of(k);
    if (auto it = mm.prestable.find(x); it != mm.prestable.end()) return it->second;
    bool v;
    if (auto it = mm.fiber.find(x); it != mm.fiber.end() || k < depth) {
      v = fiber(k, x).size() == 1;
    } else {
      // Two members already decide it; skip the rest of a possibly huge fiber.
      Ids u = cone(k, x);
      auto uni = universe(k, u);
      StepFilter none;
      std::size_t nodes = 0;
      detail::OpenSearch search(uni, none, lim, nodes);
      std::vector<Mask> found;
      Mask all(u.size());
      all.set();
      search.run(local_mask(u, {x}).find_first(), all, found, 2);
      v = found.size() == 1;
    }
    memo_of(k).prestable.emplace(x, v);
    return v;
  }

  bool stable(std::size_t k, Id x) {
    if (auto it = memo_of(k).stable.find(x); it != memo_of(k).stable.end()) return it->second;
    Ids c = cone(k, x);
    bool v = true;
    // Larger elements first: their verdicts are shared by many cones.
    for (auto it = c.rbegin(); it != c.rend() && v; ++it) {
      if (auto s = memo_of(k).stable.find(*it); s != memo_of(k).stable.end()) {
        if (*it != x && s->second) continue;
      }
      v = prestable(k, *it);
    }
    memo_of(k).stable.emplace(x, v);
    return v;
  }

  std::string name(std::size_t k, Id x) {
    if (k <= depth) return seed[k].poset().name(x);
    Mask m(known_size(k - 1));
    for (auto t : provenance(k, x)) m.set(t);
    return "L" + std::to_string(k) + ":" + name(k - 1, root(k, x)) + ":" + mask_hex(m);
  }

  std::vector<Id> stable_layer(std::size_t k) {
    std::vector<Id> out;
    if (k <= depth) {
      for (Id x = 0; x < seed[k].size(); ++x) {
        if (stable(k, x)) out.push_back(x);
      }
      return out;
    }
    if (k != depth + 1)
      throw InsufficientDepth("stable layer " + std::to_string(k) + " needs layer " + std::to_string(k - 1) +
                              " complete");
    // Top-down: every member y of a stable element x cuts out the element
    // prov(x) & up(y) >= x, which is stable and rooted at y. Roots with
    // smaller cones are handled first, so those elements are already known.
    std::size_t n = seed[k - 1].size();
    std::vector<Id> order(n);
    for (Id c = 0; c < n; ++c) order[c] = c;
    std::stable_sort(order.begin(), order.end(),
                     [&](Id a, Id b) { return cone(k - 1, a).size() < cone(k - 1, b).size(); });
    std::unordered_set<Id> good;
    std::vector<bool> has_good(n, false);
    for (Id c : order) {
      Ids u = cone(k - 1, c);
      auto uni = universe(k - 1, u);
      // Members other than c must be roots of stable elements found earlier.
      Mask allowed(u.size());
      for (std::size_t s = 0; s < u.size(); ++s) {
        if (u[s] == c || has_good[u[s]]) allowed.set(s);
      }
      StepFilter filter;
      filter.admit = [&](std::size_t, const Mask& above) {
        auto f = find(k, lift(u, above));
        return f && good.count(*f) > 0;
      };
      std::size_t nodes = 0;
      detail::OpenSearch search(uni, filter, lim, nodes);
      std::vector<Mask> found;
      search.run(local_mask(u, {c}).find_first(), allowed, found);
      for (const auto& m : found) {
        Id x = intern(k, lift(u, m), c);
        if (stable(k, x)) {
          good.insert(x);
          has_good[c] = true;
        }
      }
    }
    out.assign(good.begin(), good.end());
    std::vector<Mask> masks(known_size(k));
    for (auto x : out) masks[x] = make_mask(n, provenance(k, x));
    std::sort(out.begin(), out.end(), [&](Id a, Id b) {
      Id ra = root(k, a), rb = root(k, b);
      if (ra != rb) return ra < rb;
      return canonical_less(masks[a], masks[b]);
    });
    return out;
  }
};

ConeEngine::ConeEngine(Complex seed, const Limits& lim) : impl_(std::make_unique<Impl>(std::move(seed), lim)) {}
ConeEngine::~ConeEngine() = default;
ConeEngine::ConeEngine(ConeEngine&&) noexcept = default;
ConeEngine& ConeEngine::operator=(ConeEngine&&) noexcept = default;

const Complex& ConeEngine::seed() const { return impl_->seed; }
bool ConeEngine::complete(std::size_t k) const { return k <= impl_->depth; }
ConeEngine::Id ConeEngine::root(std::size_t k, Id x) const { return impl_->root(k, x); }
const std::vector<ConeEngine::Id>& ConeEngine::provenance(std::size_t k, Id x) const {
  return impl_->provenance(k, x);
}
std::string ConeEngine::name(std::size_t k, Id x) const { return impl_->name(k, x); }
const std::vector<ConeEngine::Id>& ConeEngine::cone(std::size_t k, Id x) { return impl_->cone(k, x); }
bool ConeEngine::leq(std::size_t k, Id a, Id b) { return impl_->leq(k, a, b); }
const std::vector<ConeEngine::Id>& ConeEngine::fiber(std::size_t k, Id x) { return impl_->fiber(k, x); }
ConeEngine::Id ConeEngine::principal(std::size_t k, Id x) { return impl_->principal(k, x); }
std::optional<ConeEngine::Id> ConeEngine::find(std::size_t k, const std::vector<Id>& prov) {
  return impl_->find(k, prov);
}
ConeEngine::Id ConeEngine::element(std::size_t k, const std::vector<Id>& prov) { return impl_->element(k, prov); }
bool ConeEngine::prestable(std::size_t k, Id x) { return impl_->prestable(k, x); }
bool ConeEngine::stable(std::size_t k, Id x) { return impl_->stable(k, x); }
std::vector<ConeEngine::Id> ConeEngine::stable_layer(std::size_t k) { return impl_->stable_layer(k); }

StabilityTable stability_table(const Complex& c) {
  if (c.layers.empty()) throw InsufficientDepth("empty complex");
  StabilityTable t;
  std::size_t depth = c.depth();
  for (std::size_t i = 0; i <= depth; ++i) {
    std::size_t n = c[i].size();
    if (i == depth) {
      t.prestable.emplace_back(n, Flag::unknown);
      t.stable.emplace_back(n, Flag::unknown);
      continue;
    }
    std::vector<std::size_t> fiber(n, 0);
    const MonotoneMap& r = *c[i + 1].root();
    for (std::size_t z = 0; z < c[i + 1].size(); ++z) ++fiber[r(z)];
    std::vector<Flag> pre(n), st(n);
    for (std::size_t x = 0; x < n; ++x) pre[x] = fiber[x] == 1 ? Flag::yes : Flag::no;
    const Poset& p = c[i].poset();
    for (std::size_t x = 0; x < n; ++x) {
      bool all = true;
      const Mask& up = p.up(x);
      for (auto y = up.find_first(); y != Mask::npos && all; y = up.find_next(y)) all = pre[y] == Flag::yes;
      st[x] = all ? Flag::yes : Flag::no;
    }
    t.prestable.push_back(std::move(pre));
    t.stable.push_back(std::move(st));
  }
  // The fiber over a stable point is a single stable point.
  for (std::size_t i = 0; i + 1 < depth; ++i) {
    const MonotoneMap& r = *c[i + 1].root();
    for (std::size_t z = 0; z < c[i + 1].size(); ++z) {
      if (t.stable[i][r(z)] == Flag::yes && t.stable[i + 1][z] != Flag::yes)
        throw ConsistencyFailure("stable point " + c[i].poset().name(r(z)) + " has an unstable fiber");
    }
  }
  return t;
}

ConeEngine::Id bullet_embed(ConeEngine& e, std::size_t i, ConeEngine::Id x) {
  std::vector<ConeEngine::Id> ups;
  for (auto y : std::vector<ConeEngine::Id>(e.cone(i, x))) ups.push_back(e.principal(i, y));
  std::sort(ups.begin(), ups.end());
  ConeEngine::Id b = e.element(i + 2, ups);
  if (e.root(i + 1, e.root(i + 2, b)) != x)
    throw ConsistencyFailure("double root of " + e.name(i + 2, b) + " is not " + e.name(i, x));
  if (!e.stable(i + 2, b)) throw ConsistencyFailure(e.name(i + 2, b) + " is not stable");
  return b;
}

UniversalModel universal_model(ConeEngine& e, std::size_t d) {
  UniversalModel m;
  m.depth = d;
  m.ids = e.stable_layer(d);
  std::size_t n = m.ids.size();
  std::vector<std::string> names;
  std::vector<Mask> up(n, Mask(n));
  names.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(e.name(d, m.ids[a]));
    for (std::size_t b = 0; b < n; ++b) {
      if (e.leq(d, m.ids[a], m.ids[b])) up[a].set(b);
    }
  }
  m.poset = Poset::from_up_sets_unchecked(std::move(names), std::move(up));
  return m;
}

ConeEngine terminal_engine(const Poset& base, std::size_t complete_depth, const Limits& lim) {
  return ConeEngine(build_complex(base, {terminal_map(base)}, complete_depth, Mode::ha, lim), lim);
}

UniversalModel universal_model(const Poset& base, std::size_t d, const Limits& lim) {
  ConeEngine e = terminal_engine(base, d == 0 ? 0 : d - 1, lim);
  return universal_model(e, d);
}

UniversalModel n_universal_model(std::size_t n, std::size_t d, const Limits& lim) {
  return universal_model(free_dl_dual(n).poset, d, lim);
}

MonotoneMap universal_embedding(ConeEngine& e, const UniversalModel& lower, const UniversalModel& upper) {
  if (upper.depth != lower.depth + 1) throw InvalidInput("models must be at consecutive depths");
  std::unordered_map<ConeEngine::Id, std::size_t> at;
  for (std::size_t k = 0; k < upper.ids.size(); ++k) at.emplace(upper.ids[k], k);
  std::vector<std::size_t> assignment;
  for (auto x : lower.ids) {
    auto it = at.find(e.principal(lower.depth, x));
    if (it == at.end())
      throw ConsistencyFailure("up " + e.name(lower.depth, x) + " is not a stable point of the next layer");
    assignment.push_back(it->second);
  }
  MonotoneMap m(lower.poset, upper.poset, std::move(assignment));
  if (!is_order_embedding(m)) throw ConsistencyFailure("stable parts do not embed");
  return m;
}

}  // namespace esakia
