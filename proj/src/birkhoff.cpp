#include "esakia/birkhoff.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace esakia {

UpsetLattice::UpsetLattice(Poset base, std::vector<Mask> sorted_members)
    : base_(std::move(base)), members_(std::move(sorted_members)) {}

std::optional<std::size_t> UpsetLattice::index_of(const Mask& u) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), u, canonical_less);
  if (it == members_.end() || *it != u) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

UpsetLattice upsets(const Poset& p, const Limits& lim) {
  std::size_t n = p.size();
  // Decide elements from the top down; x may join only once its strict
  // upset is already in, so every branch ends in an upset.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p.up(a).count() < p.up(b).count(); });
  std::vector<Mask> out;
  Mask cur(n);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      if (out.size() >= lim.upsets)
        throw SizeLimitExceeded("more than " + std::to_string(lim.upsets) + " upsets");
      out.push_back(cur);
      return;
    }
    std::size_t x = order[k];
    self(self, k + 1);
    Mask strict = p.up(x);
    strict.reset(x);
    if (strict.is_subset_of(cur)) {
      cur.set(x);
      self(self, k + 1);
      cur.reset(x);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), canonical_less);
  return UpsetLattice(p, std::move(out));
}

namespace {

void require_upset(const Poset& p, const Mask& u) {
  if (u.size() != p.size() || !p.is_upset(u)) throw NotAnUpset("argument is not an upset of the poset");
}

}  // namespace

Mask heyting_implication(const Poset& p, const Mask& u, const Mask& v) {
  require_upset(p, u);
  require_upset(p, v);
  Mask diff = u - v;
  return ~p.down_closure(diff);
}

Mask negation(const Poset& p, const Mask& u) { return heyting_implication(p, u, p.none()); }

Mask box(const Poset& p, const Mask& s) { return ~p.down_closure(~s); }

std::vector<Mask> heyting_closure(const Poset& p, const std::vector<Mask>& seeds, const Limits& lim) {
  std::vector<Mask> items;
  std::unordered_set<Mask> seen;
  auto add = [&](const Mask& m) {
    if (seen.insert(m).second) {
      if (items.size() >= lim.algebra_members)
        throw SizeLimitExceeded("closure passed " + std::to_string(lim.algebra_members) + " members");
      items.push_back(m);
    }
  };
  add(p.none());
  add(p.all());
  for (const auto& s : seeds) {
    require_upset(p, s);
    add(s);
  }
  // Each pair is combined exactly once: pairs (i,j) with max(i,j) < done
  // were handled in earlier rounds.
  std::size_t done = 0;
  while (done < items.size()) {
    std::size_t end = items.size();
    for (std::size_t i = 0; i < end; ++i) {
      for (std::size_t j = std::max(done, i); j < end; ++j) {
        Mask a = items[i], b = items[j];
        add(a & b);
        add(a | b);
        add(~p.down_closure(a - b));
        add(~p.down_closure(b - a));
      }
    }
    done = end;
  }
  std::sort(items.begin(), items.end(), canonical_less);
  return items;
}

Poset join_irreducibles(const UpsetLattice& l) {
  const auto& ms = l.members();
  std::vector<std::size_t> ji;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i].none()) continue;
    Mask below(ms[i].size());
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (j != i && ms[j].is_subset_of(ms[i])) below |= ms[j];
    }
    if (below != ms[i]) ji.push_back(i);
  }
  std::vector<std::string> names;
  for (auto i : ji) {
    auto r = l.base().root_of(ms[i]);
    names.push_back(r ? l.base().name(*r) : mask_hex(ms[i]));
  }
  std::vector<std::size_t> order(ji.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
  std::vector<std::string> sorted_names;
  std::vector<Mask> up(ji.size(), Mask(ji.size()));
  for (std::size_t a = 0; a < order.size(); ++a) {
    sorted_names.push_back(names[order[a]]);
    for (std::size_t b = 0; b < order.size(); ++b) {
      if (ms[ji[order[b]]].is_subset_of(ms[ji[order[a]]])) up[a].set(b);
    }
  }
  return Poset::from_up_sets(std::move(sorted_names), std::move(up));
}

Valuation::Valuation(Poset frame, std::map<std::string, Mask> assign)
    : frame_(std::move(frame)), assign_(std::move(assign)) {
  for (const auto& [name, m] : assign_) {
    if (m.size() != frame_.size() || !frame_.is_upset(m))
      throw NotAnUpset("value of '" + name + "' is not an upset of the frame");
  }
}

Mask eval(const Formula& f, const Valuation& v) {
  const Poset& p = v.frame();
  switch (f.kind()) {
    case Formula::Kind::var: {
      auto it = v.assign().find(f.name());
      if (it == v.assign().end()) throw UnboundVariable("variable '" + f.name() + "' has no value");
      return it->second;
    }
    case Formula::Kind::bottom:
      return p.none();
    case Formula::Kind::top:
      return p.all();
    case Formula::Kind::conj:
      return eval(f.left(), v) & eval(f.right(), v);
    case Formula::Kind::disj:
      return eval(f.left(), v) | eval(f.right(), v);
    case Formula::Kind::implies:
      return ~p.down_closure(eval(f.left(), v) - eval(f.right(), v));
  }
  return p.none();
}

bool validates(const Poset& p, const Formula& f, const Limits& lim) {
  auto vs = variables(f);
  if (vs.size() > 3) throw SizeLimitExceeded("validity checks are limited to three variables");
  UpsetLattice l = upsets(p, lim);
  double count = 1;
  for (std::size_t i = 0; i < vs.size(); ++i) count *= static_cast<double>(l.size());
  if (count > static_cast<double>(lim.valuations))
    throw SizeLimitExceeded("too many valuations to check validity");
  std::vector<std::string> names(vs.begin(), vs.end());
  return for_each_valuation(l, names, [&](const Valuation& v) { return eval(f, v).all(); });
}

}  // namespace esakia
