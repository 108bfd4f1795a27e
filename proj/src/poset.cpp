#include "esakia/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <unordered_map>

namespace esakia {

const Limits& Limits::defaults() {
  static const Limits lim = [] {
    Limits l;
    if (const char* env = std::getenv("ESAKIA_FORGE_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) l.enumeration = static_cast<std::size_t>(v);
    }
    return l;
  }();
  return lim;
}

Mask make_mask(std::size_t n, const std::vector<std::size_t>& ms) {
  Mask m(n);
  for (std::size_t i : ms) m.set(i);
  return m;
}

std::vector<std::size_t> members(const Mask& m) {
  std::vector<std::size_t> out;
  out.reserve(m.count());
  for (auto i = m.find_first(); i != Mask::npos; i = m.find_next(i)) out.push_back(i);
  return out;
}

bool canonical_less(const Mask& a, const Mask& b) {
  auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  auto i = a.find_first(), j = b.find_first();
  while (i != Mask::npos && j != Mask::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return false;
}

std::string mask_hex(const Mask& m) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  std::size_t nibbles = (m.size() + 3) / 4;
  for (std::size_t k = nibbles; k-- > 0;) {
    unsigned v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      std::size_t i = 4 * k + b;
      if (i < m.size() && m.test(i)) v |= 1u << b;
    }
    if (v == 0 && out.empty()) continue;
    out.push_back(digits[v]);
  }
  return out.empty() ? "0" : out;
}

struct Poset::Data {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<Mask> up;
  std::vector<Mask> down;
};

Poset::Poset() : d_(std::make_shared<Data>()) {}
Poset::Poset(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

Poset Poset::from_up_sets_unchecked(std::vector<std::string> names, std::vector<Mask> up) {
  std::size_t n = names.size();
  auto d = std::make_shared<Data>();
  d->index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!d->index.emplace(names[i], i).second)
      throw InvalidPoset("duplicate element name '" + names[i] + "'");
  }
  d->down.assign(n, Mask(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = up[i].find_first(); j != Mask::npos; j = up[i].find_next(j)) d->down[j].set(i);
  }
  d->names = std::move(names);
  d->up = std::move(up);
  return Poset(std::move(d));
}

Poset Poset::from_up_sets(std::vector<std::string> names, std::vector<Mask> up) {
  std::size_t n = names.size();
  if (up.size() != n) throw InvalidPoset("relation size does not match element count");
  for (std::size_t i = 0; i < n; ++i) {
    if (up[i].size() != n) throw InvalidPoset("relation row has the wrong width");
    if (!up[i].test(i)) throw InvalidPoset("relation is not reflexive at '" + names[i] + "'");
    for (auto j = up[i].find_first(); j != Mask::npos; j = up[i].find_next(j)) {
      if (j != i && up[j].test(i))
        throw InvalidPoset("antisymmetry fails for '" + names[i] + "' and '" + names[j] + "'");
      if (!up[j].is_subset_of(up[i])) throw InvalidPoset("relation is not transitive");
    }
  }
  return from_up_sets_unchecked(std::move(names), std::move(up));
}

Poset Poset::from_relation(std::vector<std::string> names,
                           const std::vector<std::pair<std::size_t, std::size_t>>& leq) {
  std::size_t n = names.size();
  std::vector<Mask> up(n, Mask(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (auto [a, b] : leq) {
    if (a >= n || b >= n) throw InvalidPoset("relation index out of range");
    up[a].set(b);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i].test(k)) up[i] |= up[k];
    }
  }
  return from_up_sets(std::move(names), std::move(up));
}

std::size_t Poset::size() const { return d_->names.size(); }
const std::string& Poset::name(std::size_t i) const { return d_->names[i]; }
const std::vector<std::string>& Poset::names() const { return d_->names; }

std::optional<std::size_t> Poset::find(std::string_view name) const {
  auto it = d_->index.find(std::string(name));
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Poset::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownElement("no element named '" + std::string(name) + "'");
}

Mask Poset::mask_of(const std::vector<std::string>& ns) const {
  Mask m(size());
  for (const auto& s : ns) m.set(index_of(s));
  return m;
}

std::vector<std::string> Poset::names_of(const Mask& m) const {
  std::vector<std::string> out;
  for (auto i = m.find_first(); i != Mask::npos; i = m.find_next(i)) out.push_back(name(i));
  std::sort(out.begin(), out.end());
  return out;
}

bool Poset::leq(std::size_t a, std::size_t b) const { return d_->up[a].test(b); }
const Mask& Poset::up(std::size_t i) const { return d_->up[i]; }
const Mask& Poset::down(std::size_t i) const { return d_->down[i]; }
Mask Poset::none() const { return Mask(size()); }
Mask Poset::all() const { return ~Mask(size()); }

Mask Poset::up_closure(const Mask& s) const {
  Mask out(size());
  for (auto i = s.find_first(); i != Mask::npos; i = s.find_next(i)) out |= d_->up[i];
  return out;
}

Mask Poset::down_closure(const Mask& s) const {
  Mask out(size());
  for (auto i = s.find_first(); i != Mask::npos; i = s.find_next(i)) out |= d_->down[i];
  return out;
}

bool Poset::is_upset(const Mask& s) const {
  for (auto i = s.find_first(); i != Mask::npos; i = s.find_next(i)) {
    if (!d_->up[i].is_subset_of(s)) return false;
  }
  return true;
}

bool Poset::is_downset(const Mask& s) const {
  for (auto i = s.find_first(); i != Mask::npos; i = s.find_next(i)) {
    if (!d_->down[i].is_subset_of(s)) return false;
  }
  return true;
}

std::optional<std::size_t> Poset::root_of(const Mask& s) const {
  for (auto i = s.find_first(); i != Mask::npos; i = s.find_next(i)) {
    if (s.is_subset_of(d_->up[i])) return i;
  }
  return std::nullopt;
}

bool operator==(const Poset& a, const Poset& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->names == b.d_->names && a.d_->up == b.d_->up;
}

Poset chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<Mask> up(n, Mask(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (std::size_t j = i; j < n; ++j) up[i].set(j);
  }
  return Poset::from_up_sets_unchecked(std::move(names), std::move(up));
}

Poset antichain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<Mask> up(n, Mask(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    up[i].set(i);
  }
  return Poset::from_up_sets_unchecked(std::move(names), std::move(up));
}

Poset singleton() {
  Mask m(1);
  m.set(0);
  return Poset::from_up_sets_unchecked({"*"}, {m});
}

Poset induced(const Poset& p, const Mask& s) {
  auto ms = members(s);
  std::vector<std::string> names;
  std::vector<Mask> up(ms.size(), Mask(ms.size()));
  for (std::size_t a = 0; a < ms.size(); ++a) {
    names.push_back(p.name(ms[a]));
    for (std::size_t b = 0; b < ms.size(); ++b) {
      if (p.leq(ms[a], ms[b])) up[a].set(b);
    }
  }
  return Poset::from_up_sets_unchecked(std::move(names), std::move(up));
}

std::vector<Poset> all_posets(std::size_t n) {
  // Every poset has a natural labelling (a <= b only if a <= b as integers),
  // so strict relations on pairs i<j cover all isomorphism classes.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));

  std::vector<Poset> found;
  Limits lim;
  lim.iso_elements = n;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    std::vector<Mask> up(n, Mask(n));
    for (std::size_t i = 0; i < n; ++i) up[i].set(i);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (bits >> k & 1) up[pairs[k].first].set(pairs[k].second);
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i) {
      for (auto j = up[i].find_first(); j != Mask::npos; j = up[i].find_next(j)) {
        if (!up[j].is_subset_of(up[i])) {
          transitive = false;
          break;
        }
      }
    }
    if (!transitive) continue;
    Poset candidate = Poset::from_up_sets_unchecked(names, std::move(up));
    bool seen = false;
    for (const auto& q : found) {
      if (is_isomorphic(candidate, q, lim)) {
        seen = true;
        break;
      }
    }
    if (!seen) found.push_back(candidate);
  }
  return found;
}

MonotoneMap::MonotoneMap(Poset domain, Poset codomain, std::vector<std::size_t> assignment)
    : dom_(std::move(domain)), cod_(std::move(codomain)), a_(std::move(assignment)) {
  if (a_.size() != dom_.size()) throw NotMonotone("assignment does not cover the domain");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] >= cod_.size()) throw NotMonotone("assignment leaves the codomain");
  }
  for (std::size_t i = 0; i < a_.size(); ++i) {
    const Mask& u = dom_.up(i);
    for (auto j = u.find_first(); j != Mask::npos; j = u.find_next(j)) {
      if (!cod_.leq(a_[i], a_[j]))
        throw NotMonotone("'" + dom_.name(i) + "' <= '" + dom_.name(j) + "' is not preserved");
    }
  }
}

Mask MonotoneMap::image(const Mask& s) const {
  Mask out(cod_.size());
  for (auto i = s.find_first(); i != Mask::npos; i = s.find_next(i)) out.set(a_[i]);
  return out;
}

Mask MonotoneMap::preimage(const Mask& s) const {
  Mask out(dom_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (s.test(a_[i])) out.set(i);
  }
  return out;
}

bool MonotoneMap::is_surjective() const { return image(dom_.all()).all(); }

bool MonotoneMap::is_injective() const {
  Mask seen(cod_.size());
  for (auto v : a_) {
    if (seen.test(v)) return false;
    seen.set(v);
  }
  return true;
}

MonotoneMap identity(const Poset& p) {
  std::vector<std::size_t> a(p.size());
  std::iota(a.begin(), a.end(), 0);
  return MonotoneMap(p, p, std::move(a));
}

MonotoneMap terminal_map(const Poset& p) {
  return MonotoneMap(p, singleton(), std::vector<std::size_t>(p.size(), 0));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!(f.codomain() == g.domain())) throw IncompatibleMaps("composition of non-matching maps");
  std::vector<std::size_t> a(f.domain().size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = g(f(i));
  return MonotoneMap(f.domain(), g.codomain(), std::move(a));
}

std::vector<MonotoneMap> all_monotone_maps(const Poset& dom, const Poset& cod) {
  std::vector<MonotoneMap> out;
  std::size_t n = dom.size(), m = cod.size();
  if (m == 0 && n > 0) return out;
  std::vector<std::size_t> a(n, 0);
  // Depth-first in index order keeps the output lexicographic.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.emplace_back(dom, cod, a);
      return;
    }
    for (std::size_t v = 0; v < m; ++v) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (dom.leq(j, i) && !cod.leq(a[j], v)) ok = false;
        if (dom.leq(i, j) && !cod.leq(v, a[j])) ok = false;
      }
      if (!ok) continue;
      a[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

bool is_p_morphism(const MonotoneMap& f) {
  const Poset& d = f.domain();
  const Poset& c = f.codomain();
  for (std::size_t x = 0; x < d.size(); ++x) {
    if (!(f.image(d.up(x)) == c.up(f(x)))) return false;
  }
  return true;
}

bool is_order_embedding(const MonotoneMap& f) {
  const Poset& d = f.domain();
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = 0; b < d.size(); ++b)
      if (d.leq(a, b) != f.codomain().leq(f(a), f(b))) return false;
  return true;
}

ProductResult product(const Poset& p, const Poset& q, const Limits& lim) {
  std::size_t n = p.size() * q.size();
  if (n > lim.layer_elements) throw SizeLimitExceeded("product has " + std::to_string(n) + " elements");
  std::vector<std::string> names;
  std::vector<Mask> up(n, Mask(n));
  std::vector<std::size_t> a1(n), a2(n);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      std::size_t k = i * q.size() + j;
      names.push_back("(" + p.name(i) + "," + q.name(j) + ")");
      a1[k] = i;
      a2[k] = j;
      for (auto i2 = p.up(i).find_first(); i2 != Mask::npos; i2 = p.up(i).find_next(i2))
        for (auto j2 = q.up(j).find_first(); j2 != Mask::npos; j2 = q.up(j).find_next(j2))
          up[k].set(i2 * q.size() + j2);
    }
  }
  Poset pq = Poset::from_up_sets_unchecked(std::move(names), std::move(up));
  return {pq, MonotoneMap(pq, p, std::move(a1)), MonotoneMap(pq, q, std::move(a2))};
}

Poset disjoint_union(const Poset& p, const Poset& q) {
  std::size_t n = p.size() + q.size();
  std::vector<std::string> names;
  std::vector<Mask> up(n, Mask(n));
  for (std::size_t i = 0; i < p.size(); ++i) {
    names.push_back("inl(" + p.name(i) + ")");
    for (auto j = p.up(i).find_first(); j != Mask::npos; j = p.up(i).find_next(j)) up[i].set(j);
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    names.push_back("inr(" + q.name(i) + ")");
    for (auto j = q.up(i).find_first(); j != Mask::npos; j = q.up(i).find_next(j))
      up[p.size() + i].set(p.size() + j);
  }
  return Poset::from_up_sets_unchecked(std::move(names), std::move(up));
}

ProductResult pullback(const MonotoneMap& f, const MonotoneMap& g, const Limits& lim) {
  if (!(f.codomain() == g.codomain())) throw IncompatibleMaps("pullback needs a common codomain");
  auto full = product(f.domain(), g.domain(), lim);
  Mask keep(full.poset.size());
  for (std::size_t k = 0; k < full.poset.size(); ++k) {
    if (f(full.first(k)) == g(full.second(k))) keep.set(k);
  }
  Poset pb = induced(full.poset, keep);
  std::vector<std::size_t> a1, a2;
  for (auto k : members(keep)) {
    a1.push_back(full.first(k));
    a2.push_back(full.second(k));
  }
  return {pb, MonotoneMap(pb, f.domain(), std::move(a1)), MonotoneMap(pb, g.domain(), std::move(a2))};
}

FreeDl free_dl_dual(std::size_t n, const Limits& lim) {
  if (n >= 63 || (std::size_t{1} << n) > lim.layer_elements)
    throw SizeLimitExceeded("2^" + std::to_string(n) + " exceeds the element cap");
  std::size_t m = std::size_t{1} << n;
  // Index order is the lexicographic order of the bit-string names.
  auto name_of = [n](std::size_t k) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
      if (k >> (n - 1 - i) & 1) s[i] = '1';
    }
    return s;
  };
  std::vector<std::string> names;
  std::vector<Mask> up(m, Mask(m));
  for (std::size_t a = 0; a < m; ++a) {
    names.push_back(name_of(a));
    for (std::size_t b = 0; b < m; ++b) {
      if ((a & b) == a) up[a].set(b);
    }
  }
  FreeDl out{Poset::from_up_sets_unchecked(std::move(names), std::move(up)), {}};
  for (std::size_t i = 0; i < n; ++i) {
    Mask g(m);
    for (std::size_t a = 0; a < m; ++a) {
      if (a >> (n - 1 - i) & 1) g.set(a);
    }
    out.generators.push_back(g);
  }
  return out;
}

bool is_prelinear(const Poset& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    auto ms = members(p.up(x));
    for (std::size_t a = 0; a < ms.size(); ++a)
      for (std::size_t b = a + 1; b < ms.size(); ++b)
        if (!p.leq(ms[a], ms[b]) && !p.leq(ms[b], ms[a])) return false;
  }
  return true;
}

bool is_directed(const Poset& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    auto ms = members(p.up(x));
    for (std::size_t a = 0; a < ms.size(); ++a)
      for (std::size_t b = a + 1; b < ms.size(); ++b)
        if (!p.up(ms[a]).intersects(p.up(ms[b]))) return false;
  }
  return true;
}

bool is_antichain(const Poset& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.up(x).count() != 1) return false;
  }
  return true;
}

Mask max_elements(const Poset& p) {
  Mask out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.up(x).count() == 1) out.set(x);
  }
  return out;
}

Mask min_elements(const Poset& p) {
  Mask out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.down(x).count() == 1) out.set(x);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const Poset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (auto b = p.up(a).find_first(); b != Mask::npos; b = p.up(a).find_next(b)) {
      if (b == a) continue;
      // a < b is a cover iff nothing lies strictly between.
      Mask between = p.up(a) & p.down(b);
      if (between.count() == 2) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::size_t> levels(const Poset& p) {
  std::size_t n = p.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Larger down-sets come later in any linear extension.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p.down(a).count() < p.down(b).count(); });
  std::vector<std::size_t> lvl(n, 0);
  for (std::size_t x : order) {
    const Mask& d = p.down(x);
    for (auto y = d.find_first(); y != Mask::npos; y = d.find_next(y)) {
      if (y != x) lvl[x] = std::max(lvl[x], lvl[y] + 1);
    }
  }
  return lvl;
}

namespace {

// Colour refinement run jointly over both posets so colours are comparable.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine(const Poset& p, const Poset& q) {
  auto initial = [](const Poset& x, std::vector<std::vector<std::size_t>>& sig) {
    auto lv = levels(x);
    sig.assign(x.size(), {});
    for (std::size_t i = 0; i < x.size(); ++i)
      sig[i] = {x.up(i).count(), x.down(i).count(), lv[i]};
  };
  std::vector<std::vector<std::size_t>> sp, sq;
  initial(p, sp);
  initial(q, sq);
  std::vector<std::size_t> cp(p.size()), cq(q.size());
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    for (const auto& s : sp) ids.emplace(s, 0);
    for (const auto& s : sq) ids.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [k, v] : ids) v = next++;
    for (std::size_t i = 0; i < p.size(); ++i) cp[i] = ids[sp[i]];
    for (std::size_t i = 0; i < q.size(); ++i) cq[i] = ids[sq[i]];
    if (next == classes) break;
    classes = next;
    auto step = [](const Poset& x, const std::vector<std::size_t>& c,
                   std::vector<std::vector<std::size_t>>& sig) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<std::size_t> ups, downs;
        for (auto j : members(x.up(i))) if (j != i) ups.push_back(c[j]);
        for (auto j : members(x.down(i))) if (j != i) downs.push_back(c[j]);
        std::sort(ups.begin(), ups.end());
        std::sort(downs.begin(), downs.end());
        std::vector<std::size_t> s{c[i], ups.size()};
        s.insert(s.end(), ups.begin(), ups.end());
        s.push_back(downs.size());
        s.insert(s.end(), downs.begin(), downs.end());
        sig[i] = std::move(s);
      }
    };
    step(p, cp, sp);
    step(q, cq, sq);
  }
  return {cp, cq};
}

}  // namespace

std::optional<IsoWitness> check_isomorphism(const Poset& p, const Poset& q,
                                            const std::vector<std::size_t>& forward) {
  if (p.size() != q.size() || forward.size() != p.size()) return std::nullopt;
  std::vector<std::size_t> back(q.size(), q.size());
  for (std::size_t i = 0; i < forward.size(); ++i) {
    if (forward[i] >= q.size() || back[forward[i]] != q.size()) return std::nullopt;
    back[forward[i]] = i;
  }
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b) != q.leq(forward[a], forward[b])) return std::nullopt;
  return IsoWitness{MonotoneMap(p, q, forward), MonotoneMap(q, p, std::move(back))};
}

std::optional<IsoWitness> is_isomorphic(const Poset& p, const Poset& q, const Limits& lim) {
  if (p.size() > lim.iso_elements || q.size() > lim.iso_elements)
    throw SizeLimitExceeded("isomorphism test above " + std::to_string(lim.iso_elements) + " elements");
  if (p.size() != q.size()) return std::nullopt;
  std::size_t n = p.size();
  auto [cp, cq] = refine(p, q);
  {
    auto a = cp, b = cq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<std::size_t> f(n, n);
  std::vector<bool> used(n, false);
  // Domain in index order, candidates ascending: the first solution is the
  // lexicographically least witness.
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || cq[j] != cp[i]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        if (p.leq(i, k) != q.leq(j, f[k]) || p.leq(k, i) != q.leq(f[k], j)) ok = false;
      }
      if (!ok) continue;
      f[i] = j;
      used[j] = true;
      if (self(self, i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return check_isomorphism(p, q, f);
}

}  // namespace esakia
