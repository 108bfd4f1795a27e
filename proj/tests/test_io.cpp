#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "esakia/io.hpp"

using namespace esakia;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("poset json round trip") {
  Json j = Json::parse(R"({"elements": ["b", "a", "c"], "leq": [["a", "b"], ["b", "c"]]})");
  Poset p = poset_from_json(j);
  CHECK(p.names() == std::vector<std::string>{"a", "b", "c"});
  CHECK(p.leq(p.index_of("a"), p.index_of("c")));
  CHECK(poset_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"elements": ["a"], "leq": [["a", "z"]]})")), UnknownElement);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"leq": []})")), InvalidInput);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"elements": ["a", "a"]})")), InvalidPoset);
}

TEST_CASE("maps and valuations resolve file references") {
  auto dir = std::filesystem::temp_directory_path() / "esakia_io_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "c.json") << R"({"elements": ["0", "1"], "leq": [["0", "1"]]})";
  std::ofstream(dir / "m.json") << R"({"domain": "c.json", "codomain": {"elements": ["*"]}, "map": {"0": "*", "1": "*"}})";
  std::ofstream(dir / "v.json") << R"({"frame": "c.json", "assign": {"p": ["1"]}})";
  MonotoneMap m = load_map(dir / "m.json");
  CHECK(m.domain().size() == 2);
  CHECK(m.codomain().size() == 1);
  Valuation v = load_valuation(dir / "v.json");
  CHECK(v.assign().at("p") == v.frame().mask_of({"1"}));
  CHECK(map_from_json(to_json(m)).assignment() == m.assignment());
  std::ofstream(dir / "bad.json") << R"({"domain": "c.json", "codomain": "c.json", "map": {"0": "1", "1": "0"}})";
  CHECK_THROWS_AS(load_map(dir / "bad.json"), NotMonotone);
  CHECK_THROWS_AS(load_poset(dir / "missing.json"), InvalidInput);
  std::filesystem::remove_all(dir);
}

TEST_CASE("complex json") {
  Poset base = chain(2);
  Complex c = build_complex(base, {terminal_map(base)}, 2);
  Json j = document("complex", to_json(c));
  CHECK(j["schema"] == kSchema);
  const Json& layers = j["data"]["layers"];
  REQUIRE(layers.size() == 3);
  CHECK(layers[0]["elements"][0].count("provenance") == 0);
  for (const auto& e : layers[1]["elements"]) {
    CHECK(e["provenance"].is_array());
    CHECK(e.contains("root"));
  }
  CHECK(dump(j) == dump(document("complex", to_json(build_complex(base, {terminal_map(base)}, 2)))));
}

TEST_CASE("dot output") {
  std::string one = to_dot(singleton());
  CHECK(count(one, "[label=") == 1);
  CHECK(count(one, " -> ") == 0);
  Poset base = chain(2);
  Complex c = build_complex(base, {terminal_map(base)}, 2);
  std::string x2 = to_dot(c[2].poset());
  CHECK(count(x2, "[label=") == 4);
  CHECK(count(x2, " -> ") == 3);
  std::string all = to_dot(c.layers);
  CHECK(count(all, "subgraph") == 3);
  CHECK(count(all, "style=dashed") == 3 + 4);
}
