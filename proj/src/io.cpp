#include "esakia/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace esakia {

namespace {

Json resolve(const Json& ref, const std::filesystem::path& dir, std::filesystem::path& inner_dir) {
  if (ref.is_string()) {
    std::filesystem::path p = ref.get<std::string>();
    if (p.is_relative()) p = dir / p;
    inner_dir = p.parent_path();
    return read_json_file(p);
  }
  if (!ref.is_object()) throw InvalidInput("expected a poset object or a file name");
  inner_dir = dir;
  return ref;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string as_name(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InvalidInput("element names must be strings or integers");
}

Json edges_json(const Poset& p) {
  Json out = Json::array();
  for (auto [a, b] : hasse_edges(p)) out.push_back({p.name(a), p.name(b)});
  return out;
}

}  // namespace

Json to_json(const Layer& l, const Poset* below) {
  Json j;
  j["index"] = l.index();
  j["mode"] = to_string(l.mode());
  j["size"] = l.size();
  Json elems = Json::array();
  const Poset& p = l.poset();
  for (std::size_t x = 0; x < p.size(); ++x) {
    Json e;
    e["name"] = p.name(x);
    if (below && l.root()) {
      e["root"] = below->name((*l.root())(x));
      e["provenance"] = names_json(*below, l.provenance(x));
    }
    elems.push_back(std::move(e));
  }
  j["elements"] = std::move(elems);
  j["leq"] = edges_json(p);
  return j;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void dot_body(std::ostringstream& os, const Poset& p, const std::string& prefix, const std::string& indent) {
  auto lv = levels(p);
  std::size_t top = lv.empty() ? 0 : *std::max_element(lv.begin(), lv.end());
  for (std::size_t x = 0; x < p.size(); ++x)
    os << indent << quote(prefix + std::to_string(x)) << " [label=" << quote(p.name(x)) << "];\n";
  for (std::size_t level = 0; level <= top && !p.empty(); ++level) {
    os << indent << "{ rank=same;";
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (lv[x] == level) os << " " << quote(prefix + std::to_string(x)) << ";";
    }
    os << " }\n";
  }
  for (auto [a, b] : hasse_edges(p))
    os << indent << quote(prefix + std::to_string(a)) << " -> " << quote(prefix + std::to_string(b)) << ";\n";
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

Poset poset_from_json(const Json& ref, const std::filesystem::path& dir) {
  std::filesystem::path inner;
  Json j = resolve(ref, dir, inner);
  const Json& elems = field(j, "elements");
  if (!elems.is_array()) throw InvalidInput("\"elements\" must be an array");
  std::vector<std::string> names;
  for (const auto& e : elems) names.push_back(as_name(e));
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end())
    throw InvalidPoset("duplicate element names");
  auto index = [&](const std::string& n) -> std::size_t {
    auto it = std::lower_bound(names.begin(), names.end(), n);
    if (it == names.end() || *it != n) throw UnknownElement("unknown element '" + n + "'");
    return static_cast<std::size_t>(it - names.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> leq;
  if (j.contains("leq")) {
    for (const auto& pair : j.at("leq")) {
      if (!pair.is_array() || pair.size() != 2) throw InvalidInput("\"leq\" entries must be pairs");
      leq.emplace_back(index(as_name(pair[0])), index(as_name(pair[1])));
    }
  }
  return Poset::from_relation(std::move(names), leq);
}

MonotoneMap map_from_json(const Json& ref, const std::filesystem::path& dir) {
  std::filesystem::path inner;
  Json j = resolve(ref, dir, inner);
  Poset dom = poset_from_json(field(j, "domain"), inner);
  Poset cod = poset_from_json(field(j, "codomain"), inner);
  const Json& m = field(j, "map");
  if (!m.is_object()) throw InvalidInput("\"map\" must be an object");
  std::vector<std::size_t> a(dom.size(), 0);
  std::vector<bool> seen(dom.size(), false);
  for (auto it = m.begin(); it != m.end(); ++it) {
    std::size_t x = dom.index_of(it.key());
    a[x] = cod.index_of(as_name(it.value()));
    seen[x] = true;
  }
  for (std::size_t x = 0; x < dom.size(); ++x) {
    if (!seen[x]) throw InvalidInput("map leaves '" + dom.name(x) + "' unassigned");
  }
  return MonotoneMap(std::move(dom), std::move(cod), std::move(a));
}

Valuation valuation_from_json(const Json& ref, const std::filesystem::path& dir) {
  std::filesystem::path inner;
  Json j = resolve(ref, dir, inner);
  Poset frame = poset_from_json(field(j, "frame"), inner);
  std::map<std::string, Mask> assign;
  const Json& a = field(j, "assign");
  if (!a.is_object()) throw InvalidInput("\"assign\" must be an object");
  for (auto it = a.begin(); it != a.end(); ++it) {
    std::vector<std::string> names;
    for (const auto& e : it.value()) names.push_back(as_name(e));
    assign.emplace(it.key(), frame.mask_of(names));
  }
  return Valuation(std::move(frame), std::move(assign));
}

Poset load_poset(const std::filesystem::path& path) { return poset_from_json(path.string(), {}); }
MonotoneMap load_map(const std::filesystem::path& path) { return map_from_json(path.string(), {}); }
Valuation load_valuation(const std::filesystem::path& path) { return valuation_from_json(path.string(), {}); }

Json to_json(const Poset& p) {
  Json j;
  j["elements"] = p.names();
  j["leq"] = edges_json(p);
  return j;
}

Json to_json(const MonotoneMap& m) {
  Json j;
  j["domain"] = to_json(m.domain());
  j["codomain"] = to_json(m.codomain());
  Json map = Json::object();
  for (std::size_t x = 0; x < m.domain().size(); ++x) map[m.domain().name(x)] = m.codomain().name(m(x));
  j["map"] = std::move(map);
  return j;
}

Json names_json(const Poset& p, const Mask& m) {
  auto names = p.names_of(m);
  std::sort(names.begin(), names.end());
  return names;
}

Json to_json(const Complex& c) {
  Json j;
  j["mode"] = to_string(c.mode);
  j["depth"] = c.depth();
  Json w = Json::array();
  for (const auto& g : c.witnesses) w.push_back(to_json(g));
  j["witnesses"] = std::move(w);
  Json layers = Json::array();
  for (std::size_t i = 0; i <= c.depth(); ++i) layers.push_back(to_json(c[i], i ? &c[i - 1].poset() : nullptr));
  j["layers"] = std::move(layers);
  return j;
}

Json to_json(const MComplex& m) {
  Json j;
  j["ground"] = to_json(m.frame.ground);
  Json layers = Json::array();
  for (std::size_t i = 0; i <= m.depth(); ++i) {
    Json l = to_json(m[i], i ? &m[i - 1].poset() : nullptr);
    Json over = Json::array();
    for (auto x : max_bijection(m, i)) over.push_back(m.frame.ground.name(x));
    l["maximal_over"] = std::move(over);
    layers.push_back(std::move(l));
  }
  j["layers"] = std::move(layers);
  return j;
}

Json to_json(const UniversalModel& m) {
  Json j = to_json(m.poset);
  j["depth"] = m.depth;
  return j;
}

Json to_json(const StabilityTable& t, const Complex& c) {
  auto flag = [](Flag f) { return f == Flag::yes ? "yes" : f == Flag::no ? "no" : "unknown"; };
  Json layers = Json::array();
  for (std::size_t i = 0; i < t.stable.size(); ++i) {
    Json elems = Json::array();
    for (std::size_t x = 0; x < t.stable[i].size(); ++x) {
      elems.push_back({{"name", c[i].poset().name(x)},
                       {"prestable", flag(t.prestable[i][x])},
                       {"stable", flag(t.stable[i][x])}});
    }
    layers.push_back({{"index", i}, {"elements", std::move(elems)}});
  }
  return {{"layers", std::move(layers)}};
}

Json document(const std::string& kind, Json payload) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  j["data"] = std::move(payload);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string to_dot(const Poset& p, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << quote(graph_name) << " {\n  rankdir=BT;\n  node [shape=box];\n";
  dot_body(os, p, "n", "  ");
  os << "}\n";
  return os.str();
}

std::string to_dot(const std::vector<Layer>& layers, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << quote(graph_name) << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < layers.size(); ++i) {
    std::string prefix = "l" + std::to_string(i) + "_";
    os << "  subgraph " << quote("cluster_" + std::to_string(i)) << " {\n    label=" << quote("V" + std::to_string(i))
       << ";\n";
    dot_body(os, layers[i].poset(), prefix, "    ");
    os << "  }\n";
  }
  for (std::size_t i = 1; i < layers.size(); ++i) {
    const auto& r = *layers[i].root();
    for (std::size_t x = 0; x < layers[i].size(); ++x) {
      os << "  " << quote("l" + std::to_string(i) + "_" + std::to_string(x)) << " -> "
         << quote("l" + std::to_string(i - 1) + "_" + std::to_string(r(x))) << " [style=dashed, constraint=false];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace esakia
