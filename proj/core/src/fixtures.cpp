#include "hypograph/fixtures.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "hypograph/abc.hpp"
#include "hypograph/assoc.hpp"
#include "hypograph/graph.hpp"
#include "hypograph/hypomorphism.hpp"
#include "json.hpp"

namespace hypograph {

using nlohmann::json;

namespace {

struct Checker {
  FixtureResult& result;

  void expect(const std::string& description, bool pass, std::string diff = {}) {
    result.checks.push_back({description, pass, pass ? "" : std::move(diff)});
  }
};

// The Lemma-style reflection maps phi_1: a_i -> a'_{n-i+2} and phi_2:
// a_i -> a'_{n-i} as pair data at (v1, v2) = (a_1, a_n).
PairMaps boundary_pair(const AbcSpec& spec) {
  int n = spec.n;
  PartialInjection phi1(n, n), phi2(n, n);
  for (int i = 2; i <= n; ++i) phi1.set(i - 1, n - i + 1);
  for (int i = 1; i <= n - 1; ++i) phi2.set(i - 1, n - i - 1);
  return PairMaps{0, n - 1, 0, n - 1, std::move(phi1), std::move(phi2)};
}

struct PairArrows {
  bool normal_fwd, normal_bwd, dashed_fwd, dashed_bwd;
};

PairArrows pair_arrows(const SimpleGraph& g, const SimpleGraph& h, const PairMaps& pm) {
  PairArrows a{};
  a.normal_fwd = !g.edge(pm.v1, pm.v2) && h.edge(pm.fv1, pm.phi1.apply(pm.v2));
  a.normal_bwd = !g.edge(pm.v2, pm.v1) && h.edge(pm.fv2, pm.phi2.apply(pm.v1));
  int pull_fwd = pm.phi1.apply_inv(pm.fv2);
  int pull_bwd = pm.phi2.apply_inv(pm.fv1);
  a.dashed_fwd = !h.edge(pm.fv1, pm.fv2) && pull_fwd != PartialInjection::kBlank &&
                 g.edge(pm.v1, pull_fwd);
  a.dashed_bwd = !h.edge(pm.fv2, pm.fv1) && pull_bwd != PartialInjection::kBlank &&
                 g.edge(pm.v2, pull_bwd);
  return a;
}

void check_components(Checker& ck, const SimpleGraph& g, const std::string& which,
                      std::size_t expected_count, std::size_t expected_size) {
  auto comps = connected_components(g);
  bool sizes_ok = comps.size() == expected_count;
  for (const auto& c : comps)
    if (c.size() != expected_size) sizes_ok = false;
  std::string actual;
  for (const auto& c : comps) actual += std::to_string(c.size()) + " ";
  ck.expect(which + " splits into " + std::to_string(expected_count) + " components of size " +
                std::to_string(expected_size),
            sizes_ok, "component sizes: " + actual);
}

void check_arrow_pattern(Checker& ck, const SimpleGraph& a, const SimpleGraph& ap,
                         const PairMaps& pm, bool expect_dashed) {
  auto arrows = pair_arrows(a, ap, pm);
  ck.expect("normal arrows run both ways at the boundary pair",
            arrows.normal_fwd && arrows.normal_bwd,
            std::string("forward=") + (arrows.normal_fwd ? "yes" : "no") +
                " backward=" + (arrows.normal_bwd ? "yes" : "no"));
  ck.expect(expect_dashed ? "dashed arrows run both ways" : "no dashed arrow either way",
            expect_dashed ? (arrows.dashed_fwd && arrows.dashed_bwd)
                          : (!arrows.dashed_fwd && !arrows.dashed_bwd),
            std::string("dashed forward=") + (arrows.dashed_fwd ? "yes" : "no") +
                " backward=" + (arrows.dashed_bwd ? "yes" : "no"));
}

void fixture_ex61(Checker& ck) {
  AbcSpec spec = make_abc_spec(8, {3}, {1});
  auto [a, ap] = companion(spec);
  check_components(ck, a, "A", 2, 4);
  check_components(ck, ap, "A'", 2, 4);
  ck.expect("A and A' are isomorphic", find_isomorphism(a, ap).has_value());
  auto ham = hamilton_check(spec);
  ck.expect("the vertex sequence is not a Hamilton path", !ham.a_path && !ham.offsets_present);
  check_arrow_pattern(ck, a, ap, boundary_pair(spec), /*expect_dashed=*/false);
}

void fixture_ex62(Checker& ck) {
  AbcSpec spec = make_abc_spec(8, {1, 3}, {1, 5});
  auto [a, ap] = companion(spec);
  ck.expect("A and A' are isomorphic", find_isomorphism(a, ap).has_value());
  auto p61 = prop61_check(spec);
  ck.expect("odd-parity offset sets differ", !p61.b0_eq_c0);
  ck.expect("the three symmetry maps fail accordingly",
            !(p61.tau0_pass && p61.tau1_pass && p61.phibar_pass));
  ck.expect("equivalence of the symmetry criterion holds", p61.equivalent);
  check_arrow_pattern(ck, a, ap, boundary_pair(spec), /*expect_dashed=*/true);
  auto cls = classify_pair(a, ap, boundary_pair(spec));
  ck.expect("boundary pair is alpha-type with n0 = 8",
            cls.kind == CycleType::alpha && cls.n0 == 8,
            cls.kind == CycleType::alpha ? "n0 = " + std::to_string(cls.n0) : "beta-type");
}

void fixture_ex63(Checker& ck) {
  AbcSpec spec = make_abc_spec(8, {3, 4}, {1});
  auto [a, ap] = companion(spec);
  check_components(ck, a, "A", 2, 4);
  ck.expect("A and A' are isomorphic", find_isomorphism(a, ap).has_value());
  check_arrow_pattern(ck, a, ap, boundary_pair(spec), /*expect_dashed=*/false);
}

void fixture_ex64(Checker& ck) {
  AbcSpec spec = make_abc_spec(7, {1, 2, 3}, {1, 4});
  auto [a, ap] = companion(spec);
  ck.expect("A and A' are isomorphic", find_isomorphism(a, ap).has_value());
  auto ham = hamilton_check(spec);
  ck.expect("the vertex sequence is a Hamilton path", ham.a_path && ham.a_prime_path);
  check_arrow_pattern(ck, a, ap, boundary_pair(spec), /*expect_dashed=*/true);
  auto report = extract_structure_f(a, ap, boundary_pair(spec));
  ck.expect("structure extraction passes all sixteen items", report.all_pass);
}

void fixture_ex65(Checker& ck) {
  AbcSpec spec = make_abc_spec(8, {1, 3, 4}, {1, 5});
  auto [a, ap] = companion(spec);
  auto bg = beta_gamma(spec);
  ck.expect("beta(A) = gamma(A) = 2", bg.beta == 2 && bg.gamma == 2,
            "beta=" + std::to_string(bg.beta) + " gamma=" + std::to_string(bg.gamma));

  std::vector<int> da, dap;
  for (int v = 0; v < 8; ++v) da.push_back(a.degree(v)), dap.push_back(ap.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(dap.begin(), dap.end());
  ck.expect("a degree-preserving vertex bijection exists", da == dap);

  ck.expect("A and A' are not isomorphic", !find_isomorphism(a, ap).has_value());

  // Triangle a'_3, a'_7, a'_8 with degrees 4, 4, 2 (0-based 2, 6, 7).
  bool triangle = ap.edge(2, 6) && ap.edge(2, 7) && ap.edge(6, 7);
  bool degs = ap.degree(2) == 4 && ap.degree(6) == 4 && ap.degree(7) == 2;
  ck.expect("A' contains the witness triangle with degrees 4,4,2", triangle && degs);

  bool found = false;
  for (int x = 0; x < 8 && !found; ++x)
    for (int y = x + 1; y < 8 && !found; ++y)
      for (int z = y + 1; z < 8 && !found; ++z) {
        if (!a.edge(x, y) || !a.edge(x, z) || !a.edge(y, z)) continue;
        std::multiset<int> degrees{a.degree(x), a.degree(y), a.degree(z)};
        if (degrees == std::multiset<int>{2, 4, 4}) found = true;
      }
  ck.expect("A has no triangle with degrees 4,4,2", !found);

  int deg2 = 0;
  for (int v = 0; v < 8; ++v)
    if (a.degree(v) == 2) ++deg2;
  ck.expect("a_8 is the unique degree-2 vertex of A", deg2 == 1 && a.degree(7) == 2);
  ck.expect("its neighbors a_5, a_7 have degree 4 and do not span an edge",
            a.edge(4, 7) && a.edge(6, 7) && a.degree(4) == 4 && a.degree(6) == 4 &&
                !a.edge(4, 6));

  ck.expect("the decks of A and A' differ", !decks_equal(a, ap));
}

void fixture_ex71(Checker& ck) {
  SimpleGraph g = build_bar_abc({make_abc_spec(7, {1, 5}, {1, 4}), 5});
  SimpleGraph h = build_bar_abc({make_abc_spec(7, {1, 4}, {1, 5}), 4});

  auto expect_edges = [&](const SimpleGraph& graph, const std::string& which,
                          std::vector<std::pair<int, int>> expected) {
    std::sort(expected.begin(), expected.end());
    auto actual = graph.edges();
    std::ostringstream diff;
    for (auto [u, v] : actual) diff << "(" << u << "," << v << ") ";
    ck.expect(which + " has the derived edge set", actual == expected, diff.str());
  };
  // Vertices in kept-position order: a1,a2,a3,a4,a6 and a1,a2,a3,a5,a7.
  expect_edges(g, "the first subgraph", {{0, 1}, {2, 3}, {0, 4}, {1, 2}, {1, 4}});
  expect_edges(h, "the second subgraph", {{0, 1}, {0, 3}, {2, 4}, {1, 2}, {1, 4}});

  ck.expect("the two subgraphs are isomorphic", find_isomorphism(g, h).has_value());

  // Search for endpoint vertices and card isomorphisms realizing the arrow
  // pattern: both normal arrows, the backward dashed arrow, no forward one.
  std::optional<PairMaps> found;
  std::optional<CycleClassification> found_cls;
  int n = g.order();
  for (int v1 = 0; v1 < n && !found; ++v1) {
    for (int v2 = 0; v2 < n && !found; ++v2) {
      if (v1 == v2) continue;
      for (int fv1 = 0; fv1 < n && !found; ++fv1) {
        if (g.degree(v1) != h.degree(fv1)) continue;
        auto card1 = delete_vertex(g, v1);
        auto target1 = delete_vertex(h, fv1);
        std::vector<PartialInjection> phi1s;
        for_each_isomorphism(card1.graph, target1.graph, [&](const VertexMap& compact) {
          PartialInjection lifted(n, n);
          for (int u = 0; u < n; ++u)
            if (u != v1)
              lifted.set(u, target1.new_to_old[compact(card1.old_to_new[u])]);
          phi1s.push_back(std::move(lifted));
          return true;
        });
        if (phi1s.empty()) continue;
        for (int fv2 = 0; fv2 < n && !found; ++fv2) {
          if (fv2 == fv1 || g.degree(v2) != h.degree(fv2)) continue;
          auto card2 = delete_vertex(g, v2);
          auto target2 = delete_vertex(h, fv2);
          std::vector<PartialInjection> phi2s;
          for_each_isomorphism(card2.graph, target2.graph, [&](const VertexMap& compact) {
            PartialInjection lifted(n, n);
            for (int u = 0; u < n; ++u)
              if (u != v2)
                lifted.set(u, target2.new_to_old[compact(card2.old_to_new[u])]);
            phi2s.push_back(std::move(lifted));
            return true;
          });
          for (const auto& p1 : phi1s) {
            for (const auto& p2 : phi2s) {
              PairMaps pm{v1, v2, fv1, fv2, p1, p2};
              auto arrows = pair_arrows(g, h, pm);
              if (!(arrows.normal_fwd && arrows.normal_bwd && arrows.dashed_bwd &&
                    !arrows.dashed_fwd))
                continue;
              auto cls = classify_pair(g, h, pm);
              if (cls.kind != CycleType::beta) continue;
              const auto& primed = cls.table.primed[0];
              const auto& unprimed = cls.table.unprimed[0];
              auto blank_at = [](const TypeSequence& s, int i) {
                return i > static_cast<int>(s.entries.size()) ||
                       s.entries[i - 1] == TypeSequence::kBlank;
              };
              bool primed_pattern = !blank_at(primed, 1) && !blank_at(primed, 2) &&
                                    !blank_at(primed, 3) && blank_at(primed, 4) &&
                                    !blank_at(primed, 5) && blank_at(primed, 6) &&
                                    !blank_at(primed, 7) && blank_at(primed, 8);
              bool unprimed_pattern = !blank_at(unprimed, 1) && !blank_at(unprimed, 2) &&
                                      !blank_at(unprimed, 3) && !blank_at(unprimed, 4) &&
                                      blank_at(unprimed, 5) && !blank_at(unprimed, 6) &&
                                      blank_at(unprimed, 7) && blank_at(unprimed, 8);
              if (primed_pattern && unprimed_pattern) {
                found = pm;
                found_cls = cls;
                break;
              }
            }
            if (found) break;
          }
        }
      }
    }
  }
  ck.expect(
      "a map family realizes both normal arrows, the backward dashed arrow and no forward one, "
      "with a beta-type pair and the stated blank pattern",
      found.has_value());
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"ex6.1", "ex6.2", "ex6.3", "ex6.4", "ex6.5", "ex7.1"};
}

FixtureResult run_fixture(const std::string& name) {
  FixtureResult result;
  result.name = name;
  Checker ck{result};
  if (name == "ex6.1")
    fixture_ex61(ck);
  else if (name == "ex6.2")
    fixture_ex62(ck);
  else if (name == "ex6.3")
    fixture_ex63(ck);
  else if (name == "ex6.4")
    fixture_ex64(ck);
  else if (name == "ex6.5")
    fixture_ex65(ck);
  else if (name == "ex7.1")
    fixture_ex71(ck);
  else
    throw GraphError("unknown fixture: " + name);
  result.pass = std::all_of(result.checks.begin(), result.checks.end(),
                            [](const FixtureCheck& c) { return c.pass; });
  return result;
}

std::string FixtureResult::to_json() const {
  json j;
  j["name"] = name;
  j["pass"] = pass;
  j["checks"] = json::array();
  for (const auto& c : checks) {
    json cj = {{"description", c.description}, {"pass", c.pass}};
    if (!c.diff.empty()) cj["diff"] = c.diff;
    j["checks"].push_back(cj);
  }
  return j.dump(2);
}

}  // namespace hypograph
