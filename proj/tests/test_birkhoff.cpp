#include <doctest.h>

#include "esakia/birkhoff.hpp"
#include "oracles.hpp"

using namespace esakia;

namespace {

Poset vee() { return Poset::from_relation({"a", "b", "c"}, {{2, 0}, {2, 1}}); }

std::vector<Poset> small_posets(std::size_t max) {
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= max; ++n) {
    for (auto& p : all_posets(n)) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("upset counts") {
  CHECK(upsets(chain(2)).size() == 3);
  CHECK(upsets(antichain(2)).size() == 4);
  CHECK(upsets(free_dl_dual(2).poset).size() == 6);
}

TEST_CASE("upsets agree with subset enumeration for all posets of size <= 4") {
  for (const auto& p : small_posets(4)) {
    auto lib = upsets(p);
    auto brute = oracle::upsets(p);
    REQUIRE(lib.size() == brute.size());
    for (const auto& s : brute) CHECK(lib.contains(oracle::to_mask(p.size(), s)));
  }
}

TEST_CASE("upset cap") {
  Limits lim;
  lim.upsets = 3;
  CHECK_THROWS_AS(upsets(antichain(3), lim), SizeLimitExceeded);
}

TEST_CASE("implication on small examples") {
  Poset c = chain(2);
  CHECK(heyting_implication(c, c.mask_of({"1"}), c.none()) == c.none());
  CHECK(heyting_implication(c, c.none(), c.mask_of({"1"})) == c.all());
  Poset v = vee();
  CHECK(heyting_implication(v, v.mask_of({"a"}), v.mask_of({"b"})) == v.mask_of({"b"}));
  CHECK_THROWS_AS(heyting_implication(c, c.mask_of({"0"}), c.none()), NotAnUpset);
}

TEST_CASE("implication is the largest upset meeting U inside V") {
  for (const auto& p : small_posets(4)) {
    auto ups = upsets(p);
    for (const auto& u : ups.members()) {
      CHECK(heyting_implication(p, u, u) == p.all());
      for (const auto& v : ups.members()) {
        auto want = oracle::implication(p, oracle::to_set(u), oracle::to_set(v));
        CHECK(oracle::to_set(heyting_implication(p, u, v)) == want);
      }
    }
  }
}

TEST_CASE("box is the largest upset inside S") {
  for (const auto& p : small_posets(3)) {
    for (const auto& s : oracle::all_subsets(p.size())) {
      oracle::Set want;
      for (const auto& u : oracle::upsets(p)) {
        if (oracle::subset(u, s)) want.insert(u.begin(), u.end());
      }
      CHECK(oracle::to_set(box(p, oracle::to_mask(p.size(), s))) == want);
    }
  }
}

TEST_CASE("join irreducibles recover the poset") {
  for (const auto& p : small_posets(4)) CHECK(is_isomorphic(join_irreducibles(upsets(p)), p).has_value());
}

TEST_CASE("evaluation") {
  Poset c = chain(2);
  Valuation vc(c, {{"p", c.mask_of({"1"})}});
  CHECK(eval(parse("p -> p"), vc) == c.all());
  CHECK(eval(parse("~p | ~~p"), vc) == c.all());
  Poset v = vee();
  Valuation vv(v, {{"p", v.mask_of({"a"})}});
  CHECK(eval(parse("~p | ~~p"), vv) == v.mask_of({"a", "b"}));
  CHECK_THROWS_AS(eval(parse("q"), vv), UnboundVariable);
  CHECK_THROWS_AS(Valuation(c, {{"p", c.mask_of({"0"})}}), NotAnUpset);
}

TEST_CASE("validity") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(validates(chain(n), parse("(p -> q) | (q -> p)")));
  CHECK_FALSE(validates(vee(), parse("~p | ~~p")));
  for (const auto& p : small_posets(3)) CHECK(validates(p, parse("p -> p")));
  // Excluded middle holds exactly on antichains.
  for (const auto& p : small_posets(3)) CHECK(validates(p, parse("p | ~p")) == is_antichain(p));
}

TEST_CASE("heyting closure of all upsets is closed") {
  Poset v = vee();
  auto all = upsets(v).members();
  CHECK(heyting_closure(v, all).size() == all.size());
  CHECK(heyting_closure(v, {}).size() == 2);
}
