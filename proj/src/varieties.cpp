#include "esakia/varieties.hpp"

#include <memory>

#include "esakia/birkhoff.hpp"

namespace esakia {

StepFilter variety_filter(const Complex& c, std::size_t next_index) {
  StepFilter f;
  if (c.mode == Mode::ha || next_index < restriction_start(c.mode)) return f;
  switch (c.mode) {
    case Mode::boolean:
      f.compatible = [](std::size_t, std::size_t) { return false; };
      break;
    case Mode::lc: {
      Poset prev = c.layers[next_index - 1].poset();
      f.compatible = [prev](std::size_t a, std::size_t b) { return prev.leq(a, b) || prev.leq(b, a); };
      break;
    }
    case Mode::kc: {
      const Layer& prev = c.layers[next_index - 1];
      const Poset& ground = c.layers[next_index - 2].poset();
      auto up = std::make_shared<std::vector<Mask>>();
      auto down = std::make_shared<std::vector<Mask>>();
      for (const auto& d : prev.provenance()) {
        up->push_back(ground.up_closure(d));
        down->push_back(ground.down_closure(d));
      }
      f.compatible = [up, down](std::size_t a, std::size_t b) {
        return (*up)[a].intersects((*down)[b]) && (*up)[b].intersects((*down)[a]);
      };
      break;
    }
    case Mode::ha:
      break;
  }
  return f;
}

Layer boolean_step(const Poset& p, const Limits& lim) {
  Complex c = build_complex(p, {terminal_map(p)}, 1, Mode::boolean, lim);
  return c.layers[1];
}

bool well_directed(const Poset& ground, const std::vector<Mask>& ms) {
  for (const auto& d : ms) {
    Mask up = ground.up_closure(d);
    for (const auto& e : ms) {
      if (!up.intersects(ground.down_closure(e))) return false;
    }
  }
  return true;
}

bool is_well_directed(const Complex& c, std::size_t stage, std::size_t elem) {
  if (stage < 2 || stage > c.depth()) throw InvalidInput("well-directedness is defined on stages >= 2");
  const Layer& prev = c.layers[stage - 1];
  std::vector<Mask> ms;
  for (auto d : members(c.layers[stage].provenance(elem))) ms.push_back(prev.provenance(d));
  return well_directed(c.layers[stage - 2].poset(), ms);
}

bool is_linearised(const Mask& c, const Poset& ambient) {
  auto ms = members(c);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!ambient.leq(ms[i], ms[j]) && !ambient.leq(ms[j], ms[i])) return false;
  return true;
}

FilterComparison kc_filter_characterization(const Complex& c, const Limits& lim) {
  if (c.depth() < 2) throw InsufficientDepth("the KC characterization needs layer 2");
  const Poset& base = c.layers[0].poset();
  const Layer& l1 = c.layers[1];
  const Layer& l2 = c.layers[2];
  UpsetLattice ups = upsets(base, lim);
  // For each upset, the layer-1 elements meeting it.
  std::vector<Mask> meets;
  for (const auto& u : ups.members()) {
    Mask m(l1.size());
    for (std::size_t d = 0; d < l1.size(); ++d) {
      if (l1.provenance(d).intersects(u)) m.set(d);
    }
    meets.push_back(std::move(m));
  }
  FilterComparison out;
  for (std::size_t e = 0; e < l2.size(); ++e) {
    const Mask& cm = l2.provenance(e);
    bool in_filter = true;
    for (const auto& m : meets) {
      if (!(cm.is_subset_of(m) || !cm.intersects(m))) {
        in_filter = false;
        break;
      }
    }
    ++out.checked;
    if (in_filter != is_well_directed(c, 2, e)) {
      out.coincide = false;
      out.mismatches.push_back(e);
    }
  }
  return out;
}

FilterComparison boolean_filter_characterization(const Complex& c, const Limits& lim) {
  if (c.depth() < 1) throw InsufficientDepth("the Boolean characterization needs layer 1");
  const Poset& base = c.layers[0].poset();
  const Layer& l1 = c.layers[1];
  const Poset& v1 = l1.poset();
  UpsetLattice ups = upsets(base, lim);
  std::vector<std::pair<Mask, Mask>> filters;
  for (const auto& u : ups.members()) {
    Mask box(l1.size());
    for (std::size_t d = 0; d < l1.size(); ++d) {
      if (l1.provenance(d).is_subset_of(u)) box.set(d);
    }
    Mask neg = negation(v1, box);
    filters.emplace_back(std::move(box), std::move(neg));
  }
  FilterComparison out;
  for (std::size_t e = 0; e < l1.size(); ++e) {
    bool in_filter = true;
    for (const auto& [box, neg] : filters) {
      if (!box.test(e) && !neg.test(e)) {
        in_filter = false;
        break;
      }
    }
    ++out.checked;
    if (in_filter != (l1.provenance(e).count() == 1)) {
      out.coincide = false;
      out.mismatches.push_back(e);
    }
  }
  return out;
}

FilterComparison lc_filter_characterization(const Layer& stage, const Poset& ambient, const Limits& lim) {
  UpsetLattice ups = upsets(ambient, lim);
  std::vector<Mask> implications;
  for (const auto& u : ups.members())
    for (const auto& v : ups.members()) implications.push_back(~u | v);
  FilterComparison out;
  for (std::size_t e = 0; e < stage.size(); ++e) {
    const Mask& cm = stage.provenance(e);
    bool in_filter = true;
    // The pair (U,V) needs C inside -U|V or inside -V|U; both are listed.
    std::size_t k = ups.size();
    for (std::size_t i = 0; i < k && in_filter; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (!cm.is_subset_of(implications[i * k + j]) && !cm.is_subset_of(implications[j * k + i])) {
          in_filter = false;
          break;
        }
      }
    }
    ++out.checked;
    if (in_filter != is_linearised(cm, ambient)) {
      out.coincide = false;
      out.mismatches.push_back(e);
    }
  }
  return out;
}

LcFree lc_free(const Poset& x, std::vector<MonotoneMap> witnesses, const Limits& lim) {
  Complex c = build_complex(x, std::move(witnesses), 3, Mode::lc, lim);
  if (!is_prelinear(c.layers[2].poset())) throw StabilizationFailure("V_2^L is not prelinear");
  auto r = c.layers[3].root()->assignment();
  auto iso = check_isomorphism(c.layers[3].poset(), c.layers[2].poset(), r);
  if (!iso) throw StabilizationFailure("the root map V_3^L -> V_2^L is not an isomorphism");
  return LcFree{std::move(c), std::move(*iso)};
}

LcFree godel_coproduct(const Poset& p, const Poset& q, const Limits& lim) {
  if (!is_prelinear(p) || !is_prelinear(q)) throw NotPrelinear("both factors must be prelinear");
  auto pq = product(p, q, lim);
  return lc_free(pq.poset, {pq.first, pq.second}, lim);
}

StabilizationVerdict stabilization_check(const Poset& x, const Limits& lim) {
  Complex c = build_complex(x, {terminal_map(x)}, 1, Mode::ha, lim);
  StabilizationVerdict v;
  v.antichain = is_antichain(x);
  v.root_is_iso = check_isomorphism(c.layers[1].poset(), x, c.layers[1].root()->assignment()).has_value();
  return v;
}

}  // namespace esakia
