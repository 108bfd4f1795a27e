#include <doctest.h>

#include "esakia/algebra.hpp"
#include "esakia/birkhoff.hpp"
#include "esakia/varieties.hpp"
#include "oracles.hpp"

using namespace esakia;

TEST_CASE("parse and print") {
  CHECK(print(parse("p -> (q -> r)")) == "p -> q -> r");
  CHECK(print(parse("(p -> q) -> r")) == "(p -> q) -> r");
  CHECK(parse("p -> q -> r") == parse("p -> (q -> r)"));
  CHECK(parse("~p | q & r") == Formula::disj(Formula::neg(Formula::var("p")),
                                             Formula::conj(Formula::var("q"), Formula::var("r"))));
  // | binds tighter than ->, so the middle disjunction groups first.
  auto p = Formula::var("p"), q = Formula::var("q");
  CHECK(parse("p->q|q->p") == Formula::implies(p, Formula::implies(Formula::disj(q, q), p)));
  CHECK(parse("~~p") == Formula::implies(Formula::implies(p, Formula::bottom()), Formula::bottom()));
  CHECK(parse("0").kind() == Formula::Kind::bottom);
  CHECK(parse("1").kind() == Formula::Kind::top);
  for (const char* text : {"(p -> q) | (q -> p)", "~~p -> p", "p & (q | r)", "~(p & ~p)"})
    CHECK(parse(print(parse(text))) == parse(text));
  CHECK_THROWS_AS(parse("p ->"), ParseError);
  CHECK_THROWS_AS(parse("(p"), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
}

TEST_CASE("rank and size") {
  CHECK(implication_rank(parse("p & q")) == 0);
  CHECK(implication_rank(parse("p -> q")) == 1);
  CHECK(implication_rank(parse("(p -> q) -> r")) == 2);
  CHECK(implication_rank(parse("~p")) == 1);
  CHECK(formula_size(parse("p -> q")) == 3);
  CHECK(variables(parse("p -> q | p")) == std::set<std::string>{"p", "q"});
}

TEST_CASE("generated subalgebras") {
  FreeDl sq = free_dl_dual(2);
  GeneratedAlgebra dl =
      generate_subalgebra(sq.poset, {{"p", sq.generators[0]}, {"q", sq.generators[1]}});
  CHECK(dl.members.size() == 6);
  for (auto s : dl.stage) CHECK(s == 0);

  Poset v = Poset::from_relation({"a", "b", "c"}, {{2, 0}, {2, 1}});
  std::vector<NamedUpset> all;
  for (const auto& u : upsets(v).members()) all.push_back({"u" + std::to_string(all.size()), u});
  GeneratedAlgebra whole = generate_subalgebra(v, all);
  CHECK(whole.members.size() == upsets(v).size());
  for (auto s : whole.stage) CHECK(s == 0);
}

TEST_CASE("witness terms evaluate to their members") {
  GeneratedAlgebra a = generate_subalgebra(chain(3), {{"p", chain(3).mask_of({"1", "2"})}});
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    Valuation v(chain(3), {{"p", chain(3).mask_of({"1", "2"})}});
    CHECK(eval(a.witness[i], v) == a.members[i]);
    CHECK(implication_rank(a.witness[i]) <= a.stage[i]);
  }
}

TEST_CASE("free godel algebra on one generator") {
  LcFree g1 = lc_free(chain(2), {terminal_map(chain(2))});
  MonotoneMap down = composite_root(g1.complex, 2, 0);
  GeneratedAlgebra a = generate_subalgebra(g1.dual(), {{"p", down.preimage(chain(2).mask_of({"1"}))}});
  CHECK(a.members.size() == 6);
  for (auto s : a.stage) CHECK(s <= 2);
}

TEST_CASE("godel chain oracle") {
  CHECK(godel_chain_oracle(0, 3).count == 2);
  CHECK(godel_chain_oracle(1, 3).count == 6);
  CHECK(godel_chain_oracle(1, 3).count == upsets(lc_free(chain(2), {terminal_map(chain(2))}).dual()).size());
  CHECK(godel_chain_oracle(1, 4).count == 6);
}

TEST_CASE("equivalence on frames") {
  Poset c = chain(3);
  CHECK(equivalent_on_frame(parse("~~~p"), parse("~p"), c));
  CHECK_FALSE(equivalent_on_frame(parse("~~p"), parse("p"), c));
  CHECK_THROWS_AS(equivalent_on_frame(parse("a & b"), parse("c & d"), c), SizeLimitExceeded);
}
