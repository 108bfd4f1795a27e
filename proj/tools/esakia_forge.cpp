#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "esakia/algebra.hpp"
#include "esakia/inquisitive.hpp"
#include "esakia/io.hpp"
#include "esakia/suites.hpp"
#include "esakia/universal.hpp"
#include "esakia/varieties.hpp"

using namespace esakia;

namespace {

const std::vector<std::string> kSubcommands = {"poset",     "complex",   "variety",     "coproduct-godel",
                                               "product",   "pullback",  "universal",   "stability",
                                               "inquisitive", "regular", "free",        "eval",
                                               "oracle",    "check"};

struct Output {
  std::string emit = "json";
  std::string out;
};

void write(const Output& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + o.out);
  f << text;
}

void emit(const Output& o, const std::string& kind, const Json& payload, const std::optional<std::string>& dot) {
  if (o.emit == "dot") {
    if (!dot) throw InvalidInput(kind + " has no DOT form");
    write(o, *dot);
  } else {
    write(o, dump(document(kind, payload)));
  }
}

std::vector<MonotoneMap> witnesses_for(const Poset& p, const std::vector<std::string>& specs) {
  std::vector<MonotoneMap> out;
  for (const auto& s : specs) {
    if (s == "terminal") {
      out.push_back(terminal_map(p));
      continue;
    }
    MonotoneMap g = load_map(s);
    if (!(g.domain() == p)) throw IncompatibleMaps("witness " + s + " is not defined on the base poset");
    out.push_back(std::move(g));
  }
  if (out.empty()) out.push_back(terminal_map(p));
  return out;
}

Json poset_summary(const Poset& p, const Limits& lim) {
  Json j = to_json(p);
  j["size"] = p.size();
  j["upsets"] = upsets(p, lim).size();
  j["antichain"] = is_antichain(p);
  j["prelinear"] = is_prelinear(p);
  return j;
}

Limits limits_from_env(Limits lim) {
  if (const char* cap = std::getenv("ESAKIA_FORGE_CAP")) {
    try {
      lim.enumeration = std::stoull(cap);
    } catch (const std::exception&) {
      throw InvalidInput("ESAKIA_FORGE_CAP must be a positive integer");
    }
    if (lim.enumeration == 0) throw InvalidInput("ESAKIA_FORGE_CAP must be a positive integer");
  }
  return lim;
}

void add_output(CLI::App* cmd, Output& o, bool dot) {
  if (dot) {
    cmd->add_option("--emit", o.emit, "Output format")->check(CLI::IsMember({"json", "dot"}));
  }
  cmd->add_option("--out", o.out, "Write to this file instead of stdout");
}

int run(int argc, char** argv) {
  if (argc > 1 && argv[1][0] != '-' &&
      std::find(kSubcommands.begin(), kSubcommands.end(), argv[1]) == kSubcommands.end())
    throw UnknownSubcommand(std::string("unknown subcommand '") + argv[1] + "'");

  CLI::App app{"Finite Esakia-duality workbench: Vietoris complexes, free algebras, universal models."};
  app.require_subcommand(1);
  app.fallthrough();
  Limits lim = Limits::defaults();
  app.add_option("--cap-elements", lim.layer_elements, "Largest poset any construction may build")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--cap-search", lim.enumeration, "Search nodes per Vietoris step (ESAKIA_FORGE_CAP)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--cap-valuations", lim.valuations, "Valuations a validity check may visit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--cap-upsets", lim.upsets, "Upsets an enumeration may produce")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  Output o;
  std::string poset_path, left, right, formula, valuation_path, mode = "ha", suite = "all", logic = "ipc";
  std::vector<std::string> witness;
  std::size_t depth = 0, gens = 1, size = 2, vars = 1;
  std::optional<std::size_t> max_chain, max_size;
  std::string builtin;

  auto* poset = app.add_subcommand("poset", "Normalize a poset and report its invariants");
  auto* poset_in = poset->add_option("--poset", poset_path, "Poset JSON file");
  poset->add_option("--builtin", builtin, "chain:N, antichain:N or free:N instead of a file")->excludes(poset_in);
  add_output(poset, o, true);

  auto* complex = app.add_subcommand("complex", "Vietoris complexes");
  complex->require_subcommand(1);
  auto* build = complex->add_subcommand("build", "Build layers 0..depth");
  build->add_option("--poset", poset_path, "Base poset JSON")->required();
  build->add_option("--witness", witness, "terminal or a map JSON; repeat to add witnesses");
  build->add_option("--depth", depth, "Last layer index")->capture_default_str();
  build->add_option("--mode", mode, "ha, bool, kc or lc")->check(CLI::IsMember({"ha", "bool", "kc", "lc"}))
      ->capture_default_str();
  add_output(build, o, true);

  auto* variety = app.add_subcommand("variety", "Variety-restricted steps");
  variety->require_subcommand(1);
  auto* vstep = variety->add_subcommand("step", "bool: the Boolean step; kc, lc: the complex to --depth");
  vstep->add_option("--poset", poset_path, "Base poset JSON")->required();
  vstep->add_option("--mode", mode, "bool, kc or lc")->required()->check(CLI::IsMember({"bool", "kc", "lc"}));
  vstep->add_option("--witness", witness, "terminal or a map JSON; repeat to add witnesses");
  vstep->add_option("--depth", depth, "Last layer index for kc and lc (default 2 for kc, 3 for lc)");
  add_output(vstep, o, true);

  auto* coproduct = app.add_subcommand("coproduct-godel", "Dual of the coproduct of two Goedel algebras");
  coproduct->add_option("--left", left, "Prelinear poset JSON")->required();
  coproduct->add_option("--right", right, "Prelinear poset JSON")->required();
  add_output(coproduct, o, true);

  auto* prod = app.add_subcommand("product", "Complex over a product with both projections as witnesses");
  prod->add_option("--left", left, "Poset JSON")->required();
  prod->add_option("--right", right, "Poset JSON")->required();
  prod->add_option("--depth", depth, "Last layer index")->capture_default_str();
  add_output(prod, o, true);

  auto* pull = app.add_subcommand("pullback", "Complex over the pullback of two p-morphisms");
  pull->add_option("--left", left, "Map JSON")->required();
  pull->add_option("--right", right, "Map JSON")->required();
  pull->add_option("--depth", depth, "Last layer index")->capture_default_str();
  add_output(pull, o, true);

  auto* universal = app.add_subcommand("universal", "Universal model over 2^n, truncated at a depth");
  universal->add_option("--gens", gens, "Number of generators")->capture_default_str();
  universal->add_option("--depth", depth, "Truncation depth")->capture_default_str();
  add_output(universal, o, true);

  auto* stability = app.add_subcommand("stability", "Prestable and stable flags of an HA complex");
  stability->add_option("--poset", poset_path, "Base poset JSON")->required();
  stability->add_option("--witness", witness, "terminal or a map JSON; repeat to add witnesses");
  stability->add_option("--depth", depth, "Last layer index")->capture_default_str();
  add_output(stability, o, false);

  auto* inquisitive = app.add_subcommand("inquisitive", "Medvedev frame and the M complex over n points");
  inquisitive->add_option("--size", size, "Number of points")->capture_default_str();
  inquisitive->add_option("--depth", depth, "Last layer index")->capture_default_str();
  add_output(inquisitive, o, true);

  auto* regular = app.add_subcommand("regular", "Regular upsets and whether they generate");
  regular->add_option("--poset", poset_path, "Poset JSON")->required();
  add_output(regular, o, false);

  auto* free = app.add_subcommand("free", "Complex dual to the free algebra on n generators");
  free->add_option("--logic", logic, "ipc or lc")->check(CLI::IsMember({"ipc", "lc"}))->capture_default_str();
  free->add_option("--gens", gens, "Number of generators")->capture_default_str();
  free->add_option("--depth", depth, "Last layer index (ipc only)")->capture_default_str();
  add_output(free, o, true);

  auto* ev = app.add_subcommand("eval", "Evaluate a formula; without a valuation, check validity");
  ev->add_option("--frame", poset_path, "Frame JSON (overrides the valuation's frame)");
  ev->add_option("--formula", formula, "Formula text")->required();
  ev->add_option("--valuation", valuation_path, "Valuation JSON");
  add_output(ev, o, false);

  auto* oracle = app.add_subcommand("oracle", "Independent oracles");
  oracle->require_subcommand(1);
  auto* godel = oracle->add_subcommand("godel", "Free Goedel algebra inside products of chains");
  godel->add_option("--vars", vars, "Number of variables")->capture_default_str();
  godel->add_option("--max-chain", max_chain, "Largest chain (default vars + 2)");
  add_output(godel, o, false);

  auto* check = app.add_subcommand("check", "Exhaustive property suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  check->add_option("--suite", suite, "Suite name or all")->check(CLI::IsMember(suites))->capture_default_str();
  check->add_option("--max-size", max_size, "Largest base poset (default: 4, or 3 for the multi-poset suites)");
  add_output(check, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return 1;
  }
  if (!app.get_option("--cap-search")->count()) lim = limits_from_env(lim);

  if (*poset) {
    Poset p;
    if (!builtin.empty()) {
      auto colon = builtin.find(':');
      std::string kind = builtin.substr(0, colon);
      std::size_t n = 0;
      try {
        n = colon == std::string::npos ? 0 : std::stoull(builtin.substr(colon + 1));
      } catch (const std::exception&) {
        throw InvalidInput("bad --builtin '" + builtin + "'");
      }
      if (kind == "chain") {
        p = chain(n);
      } else if (kind == "antichain") {
        p = antichain(n);
      } else if (kind == "free") {
        p = free_dl_dual(n, lim).poset;
      } else {
        throw InvalidInput("bad --builtin '" + builtin + "'");
      }
    } else if (!poset_path.empty()) {
      p = load_poset(poset_path);
    } else {
      throw InvalidInput("poset needs --poset or --builtin");
    }
    emit(o, "poset", poset_summary(p, lim), to_dot(p));
  } else if (*build) {
    Poset p = load_poset(poset_path);
    Complex c = build_complex(p, witnesses_for(p, witness), depth, parse_mode(mode), lim);
    emit(o, "complex", to_json(c), to_dot(c.layers));
  } else if (*vstep) {
    Poset p = load_poset(poset_path);
    Mode m = parse_mode(mode);
    if (m == Mode::boolean) {
      Layer l = boolean_step(p, lim);
      emit(o, "layer", to_json(l, &p), to_dot(l.poset()));
    } else {
      std::size_t d = vstep->get_option("--depth")->count() ? depth : (m == Mode::kc ? 2 : 3);
      Complex c = build_complex(p, witnesses_for(p, witness), d, m, lim);
      emit(o, "complex", to_json(c), to_dot(c.layers));
    }
  } else if (*coproduct) {
    LcFree f = godel_coproduct(load_poset(left), load_poset(right), lim);
    emit(o, "poset", poset_summary(f.dual(), lim), to_dot(f.dual()));
  } else if (*prod) {
    ProductComplex pc = product_complex(load_poset(left), load_poset(right), depth, Mode::ha, lim);
    emit(o, "complex", to_json(pc.complex), to_dot(pc.complex.layers));
  } else if (*pull) {
    ProductComplex pc = pullback_complex(load_map(left), load_map(right), depth, lim);
    emit(o, "complex", to_json(pc.complex), to_dot(pc.complex.layers));
  } else if (*universal) {
    UniversalModel m = n_universal_model(gens, depth, lim);
    emit(o, "universal-model", to_json(m), to_dot(m.poset));
  } else if (*stability) {
    Poset p = load_poset(poset_path);
    Complex c = build_complex(p, witnesses_for(p, witness), depth, Mode::ha, lim);
    emit(o, "stability", to_json(stability_table(c), c), std::nullopt);
  } else if (*inquisitive) {
    MComplex m = m_complex(antichain(size), depth, lim);
    emit(o, "m-complex", to_json(m), to_dot(m.layers));
  } else if (*regular) {
    Poset p = load_poset(poset_path);
    Json list = Json::array();
    for (const auto& u : regular_elements(p, lim)) list.push_back(names_json(p, u));
    emit(o, "regular", {{"regular", list}, {"regularly_generated", is_regularly_generated(p, lim)}}, std::nullopt);
  } else if (*free) {
    FreeDl base = free_dl_dual(gens, lim);
    if (logic == "lc") {
      LcFree f = lc_free(base.poset, {terminal_map(base.poset)}, lim);
      emit(o, "complex", to_json(f.complex), to_dot(f.complex.layers));
    } else {
      Complex c = build_complex(base.poset, {terminal_map(base.poset)}, depth, Mode::ha, lim);
      emit(o, "complex", to_json(c), to_dot(c.layers));
    }
  } else if (*ev) {
    Formula f = parse(formula);
    Json j;
    j["formula"] = print(f);
    if (valuation_path.empty()) {
      if (poset_path.empty()) throw InvalidInput("eval needs --frame or --valuation");
      j["valid"] = validates(load_poset(poset_path), f, lim);
    } else {
      Json v = read_json_file(valuation_path);
      std::filesystem::path dir = std::filesystem::path(valuation_path).parent_path();
      if (!poset_path.empty()) v["frame"] = std::filesystem::absolute(poset_path).string();
      Valuation val = valuation_from_json(v, dir);
      Mask m = eval(f, val);
      j["extension"] = names_json(val.frame(), m);
      j["true_everywhere"] = m == val.frame().all();
    }
    emit(o, "eval", j, std::nullopt);
  } else if (*godel) {
    GodelOracle g = godel_chain_oracle(vars, max_chain.value_or(vars + 2), lim);
    emit(o, "godel-oracle", {{"vars", vars}, {"count", g.count}, {"components", g.components.size()}},
         std::nullopt);
  } else if (*check) {
    std::vector<std::string> run_these = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    std::string text;
    bool pass = true;
    for (const auto& name : run_these) {
      SuiteReport r = run_suite(name, max_size.value_or(default_max_size(name)), lim);
      text += "[" + name + "] " + (r.pass ? "PASS" : "FAIL") + " (" + std::to_string(r.cases) + " cases)\n";
      for (const auto& line : r.log) text += "  " + line + "\n";
      pass = pass && r.pass;
    }
    write(o, text);
    if (!pass) {
      std::cerr << "SuiteFailed: see the log for failing cases\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const SizeLimitExceeded& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "InternalError: " << e.what() << "\n";
    return 3;
  }
}
