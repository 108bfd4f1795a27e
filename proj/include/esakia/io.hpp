#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "esakia/birkhoff.hpp"
#include "esakia/inquisitive.hpp"
#include "esakia/universal.hpp"
#include "esakia/vietoris.hpp"

namespace esakia {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "esakia-forge/1";

// {"elements": [...], "leq": [[a, b], ...]}; elements are sorted by name.
// A poset-ref is either such an object or a path, resolved against `dir`.
// Throws InvalidInput, InvalidPoset, UnknownElement.
Poset poset_from_json(const Json& j, const std::filesystem::path& dir = {});
// {"domain": ref, "codomain": ref, "map": {a: b, ...}}.
MonotoneMap map_from_json(const Json& j, const std::filesystem::path& dir = {});
// {"frame": ref, "assign": {"p": [names...], ...}}.
Valuation valuation_from_json(const Json& j, const std::filesystem::path& dir = {});

Json read_json_file(const std::filesystem::path& path);
Poset load_poset(const std::filesystem::path& path);
MonotoneMap load_map(const std::filesystem::path& path);
Valuation load_valuation(const std::filesystem::path& path);

Json to_json(const Poset& p);
Json to_json(const MonotoneMap& m);
// Elements as sorted name lists.
Json names_json(const Poset& p, const Mask& m);
// Root and provenance are named in `below` when given.
Json to_json(const Layer& l, const Poset* below = nullptr);
Json to_json(const Complex& c);
Json to_json(const MComplex& m);
Json to_json(const UniversalModel& m);
Json to_json(const StabilityTable& t, const Complex& c);

// Wraps a payload with the schema tag and a kind.
Json document(const std::string& kind, Json payload);
// Two-space indented, sorted keys, trailing newline.
std::string dump(const Json& j);

// Hasse diagram, bottom to top, one rank per level.
std::string to_dot(const Poset& p, const std::string& graph_name = "poset");
// One cluster per layer plus dashed root edges.
std::string to_dot(const std::vector<Layer>& layers, const std::string& graph_name = "complex");

}  // namespace esakia
