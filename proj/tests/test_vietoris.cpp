#include <doctest.h>

#include <algorithm>

#include "esakia/vietoris.hpp"
#include "oracles.hpp"

using namespace esakia;

namespace {

std::vector<Poset> small_posets(std::size_t max) {
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= max; ++n) {
    for (auto& p : all_posets(n)) out.push_back(p);
  }
  return out;
}

std::set<oracle::Set> provenances(const Layer& l) {
  std::set<oracle::Set> out;
  for (const auto& m : l.provenance()) out.insert(oracle::to_set(m));
  return out;
}

std::string sizes(const Complex& c) {
  std::string s;
  for (const auto& l : c.layers) s += (s.empty() ? "" : ",") + std::to_string(l.size());
  return s;
}

// Layer 1 over the 2-chain: the element {0,1} sits below {0} and {1}.
struct ChainLayer {
  Poset base = chain(2);
  Complex c = build_complex(base, {terminal_map(base)}, 2);
  const Layer& l1 = c[1];
  std::size_t at(const std::vector<std::string>& names) const { return *l1.locate(base.mask_of(names)); }
};

}  // namespace

TEST_CASE("the step is the set of rooted g-open subsets") {
  for (const auto& x : small_posets(3)) {
    for (const auto& w : small_posets(3)) {
      for (const auto& g : all_monotone_maps(x, w)) {
        Layer l = vietoris_step(GContext(x, {g}));
        auto brute = oracle::step(x, {g});
        CHECK(provenances(l) == std::set<oracle::Set>(brute.begin(), brute.end()));
        CHECK(l.size() == brute.size());
        for (std::size_t a = 0; a < l.size(); ++a) {
          CHECK((*l.root())(a) == *x.root_of(l.provenance(a)));
          for (std::size_t b = 0; b < l.size(); ++b)
            CHECK(l.poset().leq(a, b) == l.provenance(b).is_subset_of(l.provenance(a)));
        }
      }
    }
  }
}

TEST_CASE("two witnesses on a product") {
  Poset c = chain(2);
  auto sq = product(c, c);
  Layer l = vietoris_step(GContext(sq.poset, {sq.first, sq.second}));
  auto brute = oracle::step(sq.poset, {sq.first, sq.second});
  CHECK(provenances(l) == std::set<oracle::Set>(brute.begin(), brute.end()));
  CHECK(l.root()->is_surjective());
}

TEST_CASE("layer element names") {
  Poset c = chain(2);
  Layer l = vietoris_step(GContext(c, {terminal_map(c)}));
  REQUIRE(l.size() == 3);
  CHECK(l.poset().name(0) == "L1:0:1");
  CHECK(l.poset().name(1) == "L1:0:3");
  CHECK(l.poset().name(2) == "L1:1:2");
}

TEST_CASE("g-open subsets of the first layer over the 2-chain") {
  ChainLayer t;
  const Poset& p = t.l1.poset();
  GContext ctx(p, {*t.l1.root()});
  std::size_t a = t.at({"0"}), b = t.at({"1"}), c = t.at({"0", "1"});
  CHECK_FALSE(is_g_open_subset(ctx, make_mask(3, {c})));
  CHECK(is_g_open_subset(ctx, make_mask(3, {b, c})));
  CHECK(is_g_open_subset(ctx, p.all()));
  for (std::size_t x = 0; x < 3; ++x) CHECK(is_g_open_subset(ctx, p.up(x)));
  (void)a;
}

TEST_CASE("g-open maps") {
  ChainLayer t;
  const Poset& p = t.l1.poset();
  std::size_t b = t.at({"1"}), c = t.at({"0", "1"});
  Poset two = Poset::from_relation({"c", "b"}, {{0, 1}});
  CHECK(is_g_open_map(MonotoneMap(two, p, {c, b}), *t.l1.root()));
  CHECK_FALSE(is_g_open_map(MonotoneMap(singleton(), p, {c}), *t.l1.root()));
}

TEST_CASE("condition (*) agrees with its definition on all small maps") {
  auto ps = small_posets(2);
  for (const auto& x : ps) {
    for (const auto& y : ps) {
      for (const auto& z : ps) {
        for (const auto& f : all_monotone_maps(x, y)) {
          for (const auto& g : all_monotone_maps(y, z)) CHECK(is_g_open_map(f, g) == oracle::is_g_open_map(f, g));
          if (is_p_morphism(f)) {
            for (const auto& g : all_monotone_maps(y, z)) CHECK(is_g_open_map(f, g));
          }
        }
      }
    }
  }
}

TEST_CASE("the 2-chain complex") {
  Poset base = chain(2);
  Complex c = build_complex(base, {terminal_map(base)}, 3);
  CHECK(sizes(c) == "2,3,4,5");
  // Layer 1 is the V with {0,1} at the bottom.
  CHECK(is_isomorphic(c[1].poset(), Poset::from_relation({"a", "b", "c"}, {{2, 0}, {2, 1}})).has_value());
  // Layer 2: {{01},{0},{1}} < {{01},{1}} < {{1}} and {{01},{0},{1}} < {{0}}.
  Poset x2 = Poset::from_relation({"A", "B", "C", "D"}, {{2, 1}, {1, 0}, {2, 3}});
  CHECK(is_isomorphic(c[2].poset(), x2).has_value());
  CHECK(hasse_edges(c[2].poset()).size() == 3);
  auto brute = oracle::step(c[2].poset(), {*c[2].root()});
  CHECK(brute.size() == 5);
  CHECK(provenances(c[3]) == std::set<oracle::Set>(brute.begin(), brute.end()));
  auto thread = unit_thread(c, 0, 2);
  CHECK(thread[1] == *c[1].locate(base.all()));
  CHECK(oracle::to_set(c[2].provenance(thread[2])) == oracle::to_set(c[1].poset().all()));
}

TEST_CASE("complexes over trivial bases") {
  for (std::size_t d = 0; d <= 4; ++d) {
    Complex s = build_complex(singleton(), {terminal_map(singleton())}, d);
    for (const auto& l : s.layers) CHECK(l.size() == 1);
  }
  Poset a = antichain(3);
  Complex c = build_complex(a, {terminal_map(a)}, 5);
  for (const auto& l : c.layers) CHECK(is_antichain(l.poset()));
  for (std::size_t i = 1; i <= 5; ++i) CHECK(c[i].size() == 3);
}

TEST_CASE("caps") {
  Limits lim;
  lim.layer_elements = 4;
  Poset base = chain(2);
  CHECK_THROWS_AS(build_complex(base, {terminal_map(base)}, 3, Mode::ha, lim), SizeLimitExceeded);
  lim = Limits();
  lim.enumeration = 2;
  CHECK_THROWS_AS(build_complex(chain(3), {terminal_map(chain(3))}, 2, Mode::ha, lim), SizeLimitExceeded);
}

TEST_CASE("lift_point_map") {
  Poset base = chain(2);
  GContext ctx(base, {terminal_map(base)});
  Layer l = vietoris_step(ctx);
  MonotoneMap id = lift_point_map(identity(base), ctx, l);
  for (std::size_t x = 0; x < 2; ++x) CHECK(l.provenance(id(x)) == base.up(x));
  MonotoneMap top = lift_point_map(MonotoneMap(singleton(), base, {1}), ctx, l);
  CHECK(l.provenance(top(0)) == base.mask_of({"1"}));
  CHECK(compose(*l.root(), id).assignment() == identity(base).assignment());
}

TEST_CASE("lift_direct_image") {
  Poset base = chain(2);
  GContext cx(base, {terminal_map(base)});
  Layer lx = vietoris_step(cx);
  GContext cy(singleton(), {terminal_map(singleton())});
  Layer ly = vietoris_step(cy);
  MonotoneMap collapse = lift_direct_image(terminal_map(base), cx, lx, cy, ly);
  for (std::size_t x = 0; x < lx.size(); ++x) CHECK(collapse(x) == 0);

  Poset a = antichain(2);
  GContext ca(a, {terminal_map(a)});
  Layer la = vietoris_step(ca);
  MonotoneMap swap(a, a, {1, 0});
  MonotoneMap moved = lift_direct_image(swap, ca, la, ca, la);
  for (std::size_t x = 0; x < 2; ++x) CHECK((*la.root())(moved(x)) == 1 - (*la.root())(x));
  CHECK(lift_direct_image(identity(base), cx, lx, cx, lx).assignment() == identity(lx.poset()).assignment());
}

TEST_CASE("product and pullback complexes") {
  Poset c = chain(2), a = antichain(2);
  ProductComplex aa = product_complex(a, a, 2);
  CHECK(aa.complex[1].size() == 4);
  CHECK(is_antichain(aa.complex[1].poset()));
  ProductComplex cc = product_complex(c, c, 1);
  auto brute = oracle::step(cc.base.poset, {cc.base.first, cc.base.second});
  CHECK(cc.complex[1].size() == brute.size());
  CHECK(cc.complex[1].root()->is_surjective());
  // With a singleton factor the witnesses are the projection onto c, an
  // isomorphism, and the identity witness keeps only principal upsets.
  ProductComplex unit = product_complex(c, singleton(), 2);
  Complex plain = build_complex(c, {identity(c)}, 2);
  for (std::size_t i = 0; i <= 2; ++i) CHECK(is_isomorphic(unit.complex[i].poset(), plain[i].poset()).has_value());

  ProductComplex diag = pullback_complex(identity(c), identity(c), 2);
  for (std::size_t i = 0; i <= 2; ++i) CHECK(is_isomorphic(diag.complex[i].poset(), plain[i].poset()).has_value());
  ProductComplex two = pullback_complex(terminal_map(c), terminal_map(c), 2);
  for (std::size_t i = 0; i <= 2; ++i) {
    CHECK(two.first[i].is_surjective());
    CHECK(two.second[i].is_surjective());
  }
  CHECK_THROWS_AS(pullback_complex(MonotoneMap(c, c, {0, 0}), identity(c), 1), NotPMorphism);
}

TEST_CASE("codistributivity") {
  Poset c = chain(2);
  CHECK(codistributivity_check(c, c, c, 1).holds);
  CHECK(codistributivity_check(antichain(2), c, singleton(), 2).holds);
  CHECK(codistributivity_check(c, singleton(), singleton(), 1).holds);
}
