#include <doctest.h>

#include "esakia/birkhoff.hpp"
#include "esakia/varieties.hpp"
#include "oracles.hpp"

using namespace esakia;

namespace {

Poset vee() { return Poset::from_relation({"a", "b", "c"}, {{2, 0}, {2, 1}}); }

Complex chain_complex(std::size_t depth, Mode mode = Mode::ha) {
  Poset base = chain(2);
  return build_complex(base, {terminal_map(base)}, depth, mode);
}

// Layer-2 element over the 2-chain, given as sets of base-point names.
std::size_t stage2(const Complex& c, const std::vector<std::vector<std::string>>& sets) {
  Mask m(c[1].size());
  for (const auto& s : sets) m.set(*c[1].locate(c[0].poset().mask_of(s)));
  return *c[2].locate(m);
}

}  // namespace

TEST_CASE("boolean step") {
  CHECK(is_isomorphic(boolean_step(chain(2)).poset(), antichain(2)).has_value());
  CHECK(is_isomorphic(boolean_step(antichain(3)).poset(), antichain(3)).has_value());
  Layer b = boolean_step(vee());
  CHECK(is_isomorphic(b.poset(), antichain(3)).has_value());
  CHECK(upsets(b.poset()).size() == 8);
}

TEST_CASE("well directed stage-2 elements over the 2-chain") {
  Complex c = chain_complex(2);
  CHECK(is_well_directed(c, 2, stage2(c, {{"1"}})));
  CHECK(is_well_directed(c, 2, stage2(c, {{"0", "1"}, {"1"}})));
  CHECK_FALSE(is_well_directed(c, 2, stage2(c, {{"0", "1"}, {"0"}, {"1"}})));
}

TEST_CASE("well_directed agrees with pairwise cone intersection") {
  Poset v = vee();
  for (const auto& a : oracle::all_subsets(3)) {
    for (const auto& b : oracle::all_subsets(3)) {
      if (a.empty() || b.empty()) continue;
      std::vector<Mask> ms = {oracle::to_mask(3, a), oracle::to_mask(3, b)};
      bool want = true;
      for (const auto& d : {a, b}) {
        for (const auto& e : {a, b}) {
          bool meet = false;
          for (std::size_t x = 0; x < 3; ++x) {
            bool above = false, below = false;
            for (auto s : d) above = above || v.leq(s, x);
            for (auto t : e) below = below || v.leq(x, t);
            meet = meet || (above && below);
          }
          want = want && meet;
        }
      }
      CHECK(well_directed(v, ms) == want);
    }
  }
}

TEST_CASE("linearised elements") {
  Complex c = chain_complex(2);
  const Poset& l1 = c[1].poset();
  CHECK(is_linearised(c[2].provenance(stage2(c, {{"0", "1"}, {"1"}})), l1));
  CHECK_FALSE(is_linearised(c[2].provenance(stage2(c, {{"0", "1"}, {"0"}, {"1"}})), l1));
  CHECK(is_linearised(c[2].provenance(stage2(c, {{"1"}})), l1));
}

TEST_CASE("filter characterizations on small bases") {
  Complex c = chain_complex(2);
  auto kc = kc_filter_characterization(c);
  CHECK(kc.coincide);
  CHECK(kc.checked == 4);
  Poset a = antichain(2);
  CHECK(kc_filter_characterization(build_complex(a, {terminal_map(a)}, 2)).coincide);
  CHECK(boolean_filter_characterization(c).coincide);
}

TEST_CASE("lc restriction over the 2-chain") {
  LcFree f = lc_free(chain(2), {terminal_map(chain(2))});
  CHECK(f.dual().size() == 3);
  CHECK(upsets(f.dual()).size() == 6);
  CHECK(is_prelinear(f.dual()));
  CHECK(lc_free(singleton(), {terminal_map(singleton())}).dual().size() == 1);
  LcFree d = lc_free(antichain(2), {terminal_map(antichain(2))});
  CHECK(is_antichain(d.dual()));
}

TEST_CASE("kc complexes keep only well directed stage-2 elements") {
  Complex ha = chain_complex(2);
  Complex kc = chain_complex(2, Mode::kc);
  std::size_t directed = 0;
  for (std::size_t x = 0; x < ha[2].size(); ++x) directed += is_well_directed(ha, 2, x);
  CHECK(kc[2].size() == directed);
}

TEST_CASE("godel coproduct") {
  LcFree g1 = lc_free(chain(2), {terminal_map(chain(2))});
  LcFree co = godel_coproduct(g1.dual(), g1.dual());
  LcFree g2 = lc_free(free_dl_dual(2).poset, {terminal_map(free_dl_dual(2).poset)});
  CHECK(is_isomorphic(co.dual(), g2.dual()).has_value());
  CHECK_THROWS_AS(godel_coproduct(vee(), chain(2)), NotPrelinear);
  LcFree unit = godel_coproduct(g1.dual(), singleton());
  CHECK(is_isomorphic(unit.dual(), g1.dual()).has_value());
}

TEST_CASE("stabilization") {
  auto a = stabilization_check(antichain(3));
  CHECK(a.root_is_iso);
  CHECK(a.antichain);
  auto c = stabilization_check(chain(2));
  CHECK_FALSE(c.root_is_iso);
  CHECK_FALSE(c.antichain);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& p : all_posets(n)) CHECK(stabilization_check(p).agree());
  }
}
