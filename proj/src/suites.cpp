#include "esakia/suites.hpp"

#include <functional>
#include <sstream>

#include "esakia/algebra.hpp"
#include "esakia/birkhoff.hpp"
#include "esakia/inquisitive.hpp"
#include "esakia/universal.hpp"
#include "esakia/varieties.hpp"

namespace esakia {

void SuiteReport::check(bool ok, const std::string& line) {
  ++cases;
  log.push_back((ok ? "ok   " : "FAIL ") + line);
  if (!ok) {
    pass = false;
    failures.push_back(line);
  }
}

namespace {

std::vector<Poset> bases_up_to(std::size_t n) {
  std::vector<Poset> out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (auto& p : all_posets(k)) out.push_back(std::move(p));
  }
  return out;
}

std::string describe(const Poset& p) {
  std::ostringstream os;
  os << "|P|=" << p.size() << " covers=[";
  bool first = true;
  for (auto [a, b] : hasse_edges(p)) {
    os << (first ? "" : ",") << p.name(a) << "<" << p.name(b);
    first = false;
  }
  os << "]";
  return os.str();
}

std::string sizes(const std::vector<Layer>& layers) {
  std::string s;
  for (const auto& l : layers) s += (s.empty() ? "" : ",") + std::to_string(l.size());
  return s;
}

// Runs `body`, turning a domain error into a failed case.
void guarded(SuiteReport& r, const std::string& what, const std::function<void()>& body) {
  try {
    body();
  } catch (const SizeLimitExceeded&) {
    throw;
  } catch (const Error& e) {
    r.check(false, what + ": " + e.kind() + ": " + e.what());
  }
}

Poset two_chain(const std::string& bottom, const std::string& top) {
  return Poset::from_relation({bottom, top}, {{0, 1}});
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"rn",      "stabilization", "gopen",        "lifting",   "lc",        "kc",         "bool",
          "godel",   "codistributivity", "product", "amalgamation", "stability", "inquisitive"};
}

std::size_t default_max_size(const std::string& name) {
  for (const char* n : {"gopen", "lifting", "amalgamation", "stability", "inquisitive"}) {
    if (name == n) return 3;
  }
  return 4;
}

SuiteReport run_suite(const std::string& name, std::size_t max_size, const Limits& lim) {
  if (name == "rn") return rieger_nishimura_suite(lim);
  if (name == "stabilization") return stabilization_suite(max_size, lim);
  if (name == "gopen") return g_open_suite(max_size, lim);
  if (name == "lifting") return lifting_suite(max_size, lim);
  if (name == "lc") return lc_suite(max_size, lim);
  if (name == "kc") return kc_suite(max_size, lim);
  if (name == "bool") return bool_suite(max_size, lim);
  if (name == "godel") return godel_suite(lim);
  if (name == "codistributivity") return codistributivity_suite(2, lim);
  if (name == "product") return product_suite(lim);
  if (name == "amalgamation") return amalgamation_suite(max_size, lim);
  if (name == "stability") return stability_suite(max_size, lim);
  if (name == "inquisitive") return inquisitive_suite(max_size, lim);
  throw InvalidInput("unknown suite '" + name + "'");
}

SuiteReport rieger_nishimura_suite(const Limits& lim) {
  SuiteReport r{"rn"};
  Poset base = chain(2);
  Complex c = build_complex(base, {terminal_map(base)}, 3, Mode::ha, lim);
  r.check(sizes(c.layers) == "2,3,4,5", "2-chain layer sizes " + sizes(c.layers));
  // The four posets of the worked example, drawn bottom to top.
  std::vector<Poset> figure = {
      two_chain("0", "1"),
      Poset::from_relation({"{0}", "{0,1}", "{1}"}, {{1, 0}, {1, 2}}),
      Poset::from_relation({"a", "b", "c", "d"}, {{2, 1}, {1, 0}, {2, 3}}),
      Poset::from_relation({"p", "q", "r", "s", "t"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}}),
  };
  for (std::size_t i = 0; i < figure.size() && i <= c.depth(); ++i) {
    bool iso = is_isomorphic(c[i].poset(), figure[i], lim).has_value();
    r.check(iso, "layer " + std::to_string(i) + (iso ? " matches" : " differs from") + " the figure");
  }
  // Stage-2 elements spelled as sets of stage-1 sets of base points.
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < c[2].size(); ++x) {
    std::vector<std::string> inner;
    for (auto d : members(c[2].provenance(x))) {
      std::string s;
      for (auto b : members(c[1].provenance(d))) s += base.name(b);
      inner.push_back("{" + s + "}");
    }
    std::sort(inner.begin(), inner.end());
    std::string outer;
    for (const auto& s : inner) outer += (outer.empty() ? "" : ",") + s;
    labels.push_back("{" + outer + "}");
  }
  std::sort(labels.begin(), labels.end());
  std::vector<std::string> expected = {"{{01},{0},{1}}", "{{01},{1}}", "{{0}}", "{{1}}"};
  std::sort(expected.begin(), expected.end());
  std::string got;
  for (const auto& l : labels) got += l + " ";
  r.check(labels == expected, "stage-2 labels " + got);
  return r;
}

SuiteReport stabilization_suite(std::size_t max_size, const Limits& lim) {
  SuiteReport r{"stabilization"};
  for (const auto& p : bases_up_to(max_size)) {
    guarded(r, describe(p), [&] {
      auto v = stabilization_check(p, lim);
      r.check(v.agree(), describe(p) + " root-iso=" + (v.root_is_iso ? "yes" : "no") +
                             " antichain=" + (v.antichain ? "yes" : "no"));
    });
  }
  return r;
}

SuiteReport g_open_suite(std::size_t max_size, const Limits& lim) {
  SuiteReport r{"gopen"};
  auto bases = bases_up_to(max_size);
  std::size_t agree = 0, open = 0, total = 0;
  for (const auto& x : bases) {
    UpsetLattice ux = upsets(x, lim);
    for (const auto& y : bases) {
      for (const auto& z : bases) {
        UpsetLattice uz = upsets(z, lim);
        auto fs = all_monotone_maps(x, y);
        auto gs = all_monotone_maps(y, z);
        for (const auto& g : gs) {
          for (const auto& f : fs) {
            bool star = is_g_open_map(f, g);
            // f^-1 preserves every implication g^-1 U -> g^-1 V.
            bool preserves = true;
            for (const auto& u : uz.members()) {
              for (const auto& v : uz.members()) {
                Mask gu = g.preimage(u), gv = g.preimage(v);
                Mask lhs = f.preimage(heyting_implication(y, gu, gv));
                Mask rhs = heyting_implication(x, f.preimage(gu), f.preimage(gv));
                if (lhs != rhs) {
                  preserves = false;
                  break;
                }
              }
              if (!preserves) break;
            }
            ++total;
            open += star;
            if (star == preserves) {
              ++agree;
            } else {
              r.check(false, "f on " + describe(x) + " into " + describe(y) + " disagrees over " + describe(z));
            }
          }
        }
      }
    }
    (void)ux;
  }
  r.check(agree == total, std::to_string(total) + " pairs (f, g), " + std::to_string(open) + " g-open, " +
                              std::to_string(agree) + " agree");
  return r;
}

SuiteReport lifting_suite(std::size_t max_size, const Limits& lim) {
  SuiteReport r{"lifting"};
  auto bases = bases_up_to(max_size);
  std::size_t lifts = 0;
  for (const auto& x : bases) {
    for (const auto& w : bases) {
      for (const auto& g : all_monotone_maps(x, w)) {
        GContext ctx(x, {g});
        StepOptions opts;
        Layer layer = vietoris_step(ctx, opts, lim);
        const MonotoneMap& root = *layer.root();
        std::vector<std::vector<std::size_t>> fiber(x.size());
        for (std::size_t c = 0; c < layer.size(); ++c) fiber[root(c)].push_back(c);
        for (const auto& z : bases) {
          for (const auto& h : all_monotone_maps(z, x)) {
            if (!is_g_open_map(h, g)) continue;
            guarded(r, "lift over " + describe(x), [&] {
              MonotoneMap lift = lift_point_map(h, ctx, layer);
              // Every root-compatible assignment, kept when monotone and r-open.
              std::size_t found = 0;
              bool matches = false;
              std::vector<std::size_t> a(z.size());
              std::function<void(std::size_t)> go = [&](std::size_t i) {
                if (i == z.size()) {
                  for (std::size_t s = 0; s < z.size(); ++s) {
                    for (std::size_t t = 0; t < z.size(); ++t) {
                      if (z.leq(s, t) && !layer.poset().leq(a[s], a[t])) return;
                    }
                  }
                  MonotoneMap k(z, layer.poset(), a);
                  if (!is_g_open_map(k, root)) return;
                  ++found;
                  matches = matches || k.assignment() == lift.assignment();
                  return;
                }
                for (auto c : fiber[h(i)]) {
                  a[i] = c;
                  go(i + 1);
                }
              };
              go(0);
              ++lifts;
              if (found != 1 || !matches)
                r.check(false, "h into " + describe(x) + ": " + std::to_string(found) + " candidates");
            });
          }
        }
      }
    }
  }
  r.check(r.failures.empty(), std::to_string(lifts) + " g-open maps, each with a unique lift");
  return r;
}

SuiteReport lc_suite(std::size_t max_size, const Limits& lim) {
  SuiteReport r{"lc"};
  Formula dummett = parse("(p -> q) | (q -> p)");
  for (const auto& p : bases_up_to(max_size)) {
    guarded(r, describe(p), [&] {
      LcFree f = lc_free(p, {terminal_map(p)}, lim);
      bool prelinear = is_prelinear(f.dual());
      bool valid = validates(f.dual(), dummett, lim);
      const Layer& v3 = f.complex.layers[3];
      bool iso = check_isomorphism(v3.poset(), f.dual(), v3.root()->assignment()).has_value();
      r.check(prelinear && iso && valid, describe(p) + " V2=" + std::to_string(f.dual().size()) +
                                             " prelinear=" + (prelinear ? "yes" : "no") +
                                             " root3-iso=" + (iso ? "yes" : "no") + " dummett=" + (valid ? "yes" : "no"));
    });
  }
  return r;
}

SuiteReport kc_suite(std::size_t max_size, const Limits& lim) {
  SuiteReport r{"kc"};
  for (const auto& p : bases_up_to(max_size)) {
    guarded(r, describe(p), [&] {
      Complex c = build_complex(p, {terminal_map(p)}, 2, Mode::ha, lim);
      auto cmp = kc_filter_characterization(c, lim);
      r.check(cmp.coincide, describe(p) + " stage-2 elements=" + std::to_string(cmp.checked) +
                                " mismatches=" + std::to_string(cmp.mismatches.size()));
    });
  }
  return r;
}

SuiteReport bool_suite(std::size_t max_size, const Limits& lim) {
  SuiteReport r{"bool"};
  for (const auto& p : bases_up_to(max_size)) {
    guarded(r, describe(p), [&] {
      Complex c = build_complex(p, {terminal_map(p)}, 1, Mode::ha, lim);
      auto cmp = boolean_filter_characterization(c, lim);
      Layer b = boolean_step(p, lim);
      UpsetLattice u = upsets(b.poset(), lim);
      bool boolean = u.size() == (std::size_t{1} << p.size());
      for (const auto& m : u.members()) boolean = boolean && u.contains(~m);
      r.check(cmp.coincide && boolean, describe(p) + " filter mismatches=" + std::to_string(cmp.mismatches.size()) +
                                           " |upsets(B1)|=" + std::to_string(u.size()));
    });
  }
  return r;
}

SuiteReport godel_suite(const Limits& lim) {
  SuiteReport r{"godel"};
  FreeDl one = free_dl_dual(1, lim);
  LcFree g1 = lc_free(one.poset, {terminal_map(one.poset)}, lim);
  UpsetLattice u1 = upsets(g1.dual(), lim);
  GodelOracle o1 = godel_chain_oracle(1, 3, lim);
  r.check(u1.size() == 6 && o1.count == 6,
          "|upsets(G(1) dual)|=" + std::to_string(u1.size()) + " oracle=" + std::to_string(o1.count));
  MonotoneMap down = composite_root(g1.complex, 2, 0);
  GeneratedAlgebra a = generate_subalgebra(g1.dual(), {{"p", down.preimage(one.generators[0])}}, std::nullopt, lim);
  std::size_t max_stage = 0;
  for (auto s : a.stage) max_stage = std::max(max_stage, s);
  r.check(a.members.size() == u1.size() && max_stage <= 2,
          "generated " + std::to_string(a.members.size()) + " members, last stage " + std::to_string(max_stage));

  LcFree co = godel_coproduct(g1.dual(), g1.dual(), lim);
  FreeDl two = free_dl_dual(2, lim);
  LcFree g2 = lc_free(two.poset, {terminal_map(two.poset)}, lim);
  UpsetLattice uc = upsets(co.dual(), lim);
  UpsetLattice u2 = upsets(g2.dual(), lim);
  bool iso = is_isomorphic(co.dual(), g2.dual(), lim).has_value();
  GodelOracle o2 = godel_chain_oracle(2, 4, lim);
  r.check(iso && uc.size() == u2.size() && uc.size() == o2.count,
          "coproduct dual " + std::to_string(co.dual().size()) + " points, " + std::to_string(uc.size()) +
              " upsets; G(2) " + std::to_string(u2.size()) + " upsets; oracle " + std::to_string(o2.count) +
              (iso ? "; duals isomorphic" : "; duals differ"));
  return r;
}

SuiteReport codistributivity_suite(std::size_t depth, const Limits& lim) {
  SuiteReport r{"codistributivity"};
  std::vector<std::pair<std::string, Poset>> pool = {
      {"1", singleton()}, {"A2", antichain(2)}, {"C2", chain(2)}};
  for (const auto& [nx, x] : pool) {
    for (const auto& [ny, y] : pool) {
      for (const auto& [nz, z] : pool) {
        std::string what = "X=" + nx + " Y=" + ny + " Z=" + nz;
        guarded(r, what, [&] {
          auto res = codistributivity_check(x, y, z, depth, lim);
          r.check(res.holds, what + " layers 0.." + std::to_string(depth));
        });
      }
    }
  }
  return r;
}

SuiteReport product_suite(const Limits& lim) {
  SuiteReport r{"product"};
  Poset p1 = two_chain("y", "x");
  Poset p2 = two_chain("b", "a");
  Poset w = disjoint_union(p1, p2);
  auto at = [&](const std::string& n) { return w.index_of(n); };
  std::vector<std::size_t> fa(w.size()), ga(w.size());
  fa[at("inl(x)")] = p2.index_of("a");
  fa[at("inl(y)")] = p2.index_of("a");
  fa[at("inr(a)")] = p2.index_of("a");
  fa[at("inr(b)")] = p2.index_of("b");
  ga[at("inl(x)")] = p1.index_of("x");
  ga[at("inl(y)")] = p1.index_of("y");
  ga[at("inr(a)")] = p1.index_of("x");
  ga[at("inr(b)")] = p1.index_of("y");
  MonotoneMap f(w, p2, fa), g(w, p1, ga);
  ProductResult prod = product(p1, p2, lim);
  std::vector<std::size_t> ka(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) ka[i] = g(i) * p2.size() + f(i);
  MonotoneMap k(w, prod.poset, ka);
  r.check(is_p_morphism(f) && is_p_morphism(g), "f and g are p-morphisms");
  r.check(!is_p_morphism(k), "the map into X x Y is not a p-morphism");
  GContext ctx(prod.poset, {prod.first, prod.second});
  Layer l1 = vietoris_step(ctx, {}, lim);
  guarded(r, "lift", [&] {
    MonotoneMap lift = lift_point_map(k, ctx, l1);
    bool compatible = compose(*l1.root(), lift).assignment() == k.assignment();
    bool open = is_g_open_map(lift, *l1.root());
    r.check(compatible && open, std::string("lift into layer 1 (") + std::to_string(l1.size()) +
                                    " elements): root-compatible=" + (compatible ? "yes" : "no") +
                                    " r-open=" + (open ? "yes" : "no"));
  });
  return r;
}

SuiteReport amalgamation_suite(std::size_t max_size, const Limits& lim) {
  SuiteReport r{"amalgamation"};
  auto bases = bases_up_to(max_size);
  std::size_t spans = 0, certified = 0;
  for (std::size_t iz = 0; iz < bases.size(); ++iz) {
    const Poset& z = bases[iz];
    // Surjective p-morphisms into z from every base.
    std::vector<MonotoneMap> into;
    for (const auto& x : bases) {
      for (auto& f : all_monotone_maps(x, z)) {
        if (f.is_surjective() && is_p_morphism(f)) into.push_back(std::move(f));
      }
    }
    for (std::size_t i = 0; i < into.size(); ++i) {
      // (g, f) is the mirror image of (f, g).
      for (std::size_t j = i; j < into.size(); ++j) {
        std::string what = "over " + describe(z) + " from " + describe(into[i].domain()) + " and " +
                           describe(into[j].domain());
        guarded(r, what, [&] {
          bool onto = true;
          try {
            ProductComplex pc = pullback_complex(into[i], into[j], 2, lim);
            for (std::size_t d = 0; d <= 2; ++d)
              onto = onto && pc.first[d].is_surjective() && pc.second[d].is_surjective();
          } catch (const SizeLimitExceeded&) {
            // Layer 2 is too large to build. Exhibit a preimage instead: for
            // each base point p, up(up p) is checked to be a layer-2 element
            // over p, so the depth-0 projections carry over.
            ProductComplex pc = pullback_complex(into[i], into[j], 1, lim);
            onto = pc.first[0].is_surjective() && pc.second[0].is_surjective() && pc.first[1].is_surjective() &&
                   pc.second[1].is_surjective();
            ConeEngine e(pc.complex, lim);
            for (std::size_t p = 0; p < pc.base.poset.size(); ++p) {
              ConeEngine::Id a = e.principal(0, p);
              ConeEngine::Id b = e.principal(1, a);
              onto = onto && e.root(1, a) == p && e.root(2, b) == a;
            }
            ++certified;
          }
          ++spans;
          if (!onto) r.check(false, what + ": projection not surjective");
        });
      }
    }
  }
  r.check(r.failures.empty(), std::to_string(spans) + " cospans, projections surjective at depths 0..2 (" +
                                  std::to_string(certified) + " by layer-2 preimages)");
  return r;
}

SuiteReport stability_suite(std::size_t max_size, const Limits& lim) {
  SuiteReport r{"stability"};
  for (const auto& p : bases_up_to(max_size)) {
    std::string what = describe(p);
    guarded(r, what, [&] {
      // Layers 0..2 are built whole; x* for x in them lives in layers 2..4.
      ConeEngine e = terminal_engine(p, 2, lim);
      std::size_t bullets = 0;
      for (std::size_t i = 0; i <= 2; ++i) {
        for (std::size_t x = 0; x < e.seed()[i].size(); ++x) {
          bullet_embed(e, i, x);
          ++bullets;
        }
      }
      // Persistence: the fiber over a stable point is one stable point whose
      // cone the root map carries isomorphically onto the cone below.
      std::size_t persistent = 0;
      bool persists = true;
      std::vector<UniversalModel> models;
      for (std::size_t d = 0; d <= 3; ++d) {
        models.push_back(universal_model(e, d));
        for (auto x : models.back().ids) {
          const auto& fib = e.fiber(d, x);
          if (fib.size() != 1 || !e.stable(d + 1, fib[0])) {
            persists = false;
            continue;
          }
          std::vector<ConeEngine::Id> upper = e.cone(d + 1, fib[0]);
          std::vector<ConeEngine::Id> lower = e.cone(d, x);
          std::vector<ConeEngine::Id> image;
          for (auto y : upper) image.push_back(e.root(d + 1, y));
          std::vector<ConeEngine::Id> sorted = image;
          std::sort(sorted.begin(), sorted.end());
          bool ok = sorted == lower && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
          for (std::size_t a = 0; ok && a < upper.size(); ++a) {
            for (std::size_t b = 0; ok && b < upper.size(); ++b)
              ok = e.leq(d + 1, upper[a], upper[b]) == e.leq(d, image[a], image[b]);
          }
          persists = persists && ok;
          ++persistent;
        }
      }
      for (std::size_t d = 0; d + 1 < models.size(); ++d) universal_embedding(e, models[d], models[d + 1]);
      std::string counts;
      for (const auto& m : models) counts += (counts.empty() ? "" : ",") + std::to_string(m.poset.size());
      r.check(persists, what + " x*=" + std::to_string(bullets) + " stable fibers=" + std::to_string(persistent) +
                            " model sizes " + counts + " embed");
    });
  }
  return r;
}

SuiteReport inquisitive_suite(std::size_t max_size, const Limits& lim) {
  SuiteReport r{"inquisitive"};
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::string what = "|X|=" + std::to_string(n);
    guarded(r, what, [&] {
      MedvedevFrame v = medvedev_frame(n, lim);
      bool brackets = true;
      for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
        Mask u(n);
        for (std::size_t i = 0; i < n; ++i) {
          if (bits >> i & 1) u.set(i);
        }
        brackets = brackets && negation(v.poset, bracket(v, u)) == bracket(v, ~u);
      }
      MComplex m = m_complex(v.ground, 2, lim);
      bool reg1 = is_regularly_generated(m[1].poset(), lim);
      bool reg2 = n != 2 || is_regularly_generated(m[2].poset(), lim);
      r.check(brackets && reg1 && reg2, what + " neg[U]=[X-U] " + (brackets ? "yes" : "no") + ", max bijection k<=2, M sizes " +
                                            sizes(m.layers) + ", M1 regular " + (reg1 ? "yes" : "no") +
                                            (n == 2 ? std::string(", M2 regular ") + (reg2 ? "yes" : "no") : ""));
    });
  }
  return r;
}

}  // namespace esakia
