#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "hypograph/abc.hpp"
#include "hypograph/enumerate.hpp"
#include "hypograph/graph.hpp"

using namespace hypograph;

namespace {

SimpleGraph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_graph(n, edges);
}

SimpleGraph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return make_graph(n, edges);
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return make_graph(g.order(), edges);
}

// Brute-force oracle: all bijections g -> h preserving adjacency exactly.
std::vector<std::vector<int>> brute_isomorphisms(const SimpleGraph& g, const SimpleGraph& h) {
  std::vector<std::vector<int>> found;
  if (g.order() != h.order()) return found;
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < g.order() && ok; ++u)
      for (int v = u + 1; v < g.order(); ++v)
        if (g.edge(u, v) != h.edge(perm[u], perm[v])) {
          ok = false;
          break;
        }
    if (ok) found.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

TEST_CASE("make_graph basics and validation") {
  SimpleGraph empty3 = make_graph(3, {});
  CHECK(empty3.order() == 3);
  for (int v = 0; v < 3; ++v) CHECK(empty3.degree(v) == 0);

  SimpleGraph p4 = path(4);
  CHECK(p4.degree(0) == 1);
  CHECK(p4.degree(1) == 2);
  CHECK(p4.degree(2) == 2);
  CHECK(p4.degree(3) == 1);

  // Duplicate pairs in either order collapse to one edge.
  SimpleGraph dup = make_graph(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);

  CHECK_THROWS_AS(make_graph(0, {}), GraphError);
  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(make_graph(3, {{1, 1}}), GraphError);
  CHECK_THROWS_AS(make_graph(2, {}, {"a", "a"}), GraphError);
  CHECK_THROWS_WITH_AS(make_graph(3, {{0, 5}}), "edge endpoint out of range: (0,5)", GraphError);
}

TEST_CASE("the two-component offset graph") {
  // A(8;{3},{1}) in 0-based form.
  SimpleGraph a = make_graph(8, {{0, 3}, {2, 5}, {4, 7}, {1, 2}, {3, 4}, {5, 6}});
  auto comps = connected_components(a);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 4);
  CHECK(comps[1].size() == 4);
  // Both components are 4-vertex paths.
  SimpleGraph built = build_abc(make_abc_spec(8, {3}, {1}));
  CHECK(built.edges() == a.edges());
}

TEST_CASE("delete_vertex produces cards with re-index maps") {
  SimpleGraph k3 = complete(3);
  auto card = delete_vertex(k3, 1);
  CHECK(card.graph.order() == 2);
  CHECK(card.graph.edge_count() == 1);
  CHECK(card.old_to_new == std::vector<int>{0, -1, 1});
  CHECK(card.new_to_old == std::vector<int>{0, 2});

  SimpleGraph p4 = path(4);
  auto endpoint = delete_vertex(p4, 0);
  CHECK(find_isomorphism(endpoint.graph, path(3)).has_value());

  auto inner = delete_vertex(p4, 1);  // one edge plus an isolated vertex
  CHECK(inner.graph.edge_count() == 1);
  CHECK(inner.graph.degree(0) == 0);

  CHECK_THROWS_AS(delete_vertex(p4, 4), GraphError);

  SUBCASE("order and edge count bookkeeping") {
    for (int v = 0; v < 4; ++v) {
      auto d = delete_vertex(p4, v);
      CHECK(d.graph.order() == p4.order() - 1);
      CHECK(d.graph.edge_count() == p4.edge_count() - p4.degree(v));
    }
  }
}

TEST_CASE("find_isomorphism returns the lexicographically least map") {
  SimpleGraph p4 = path(4);
  auto rho = find_isomorphism(p4, p4);
  REQUIRE(rho.has_value());
  CHECK(rho->images == std::vector<int>{0, 1, 2, 3});

  SUBCASE("offset graph pair from the two-component example") {
    SimpleGraph a = build_abc(make_abc_spec(8, {3}, {1}));
    SimpleGraph ap = build_abc(make_abc_spec(8, {1}, {3}));
    auto iso = find_isomorphism(a, ap);
    REQUIRE(iso.has_value());
    CHECK(is_isomorphism(a, ap, *iso));
  }

  SUBCASE("the non-isomorphic offset pair") {
    SimpleGraph a = build_abc(make_abc_spec(8, {1, 3, 4}, {1, 5}));
    SimpleGraph ap = build_abc(make_abc_spec(8, {1, 5}, {1, 3, 4}));
    CHECK(!find_isomorphism(a, ap).has_value());
  }
}

TEST_CASE("enumerate_isomorphisms matches brute force") {
  SimpleGraph k3 = complete(3);
  CHECK(enumerate_isomorphisms(k3, k3, 100).size() == 6);

  SimpleGraph p4 = path(4);
  auto fast = enumerate_isomorphisms(p4, p4, 100);
  auto brute = brute_isomorphisms(p4, p4);
  REQUIRE(fast.size() == brute.size());
  CHECK(fast.size() == 2);
  for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].images == brute[i]);

  CHECK(enumerate_isomorphisms(k3, path(3), 100).empty());
  CHECK(enumerate_isomorphisms(p4, p4, 1).size() == 1);
  CHECK_THROWS_AS(enumerate_isomorphisms(p4, p4, 0), GraphError);

  SUBCASE("every yield preserves and reflects adjacency") {
    SimpleGraph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    for (const auto& rho : enumerate_isomorphisms(c5, c5, 100)) CHECK(is_isomorphism(c5, c5, rho));
  }
}

TEST_CASE("canonical keys identify isomorphism classes") {
  SimpleGraph p4 = path(4);
  CHECK(canonical_key(p4) == canonical_key(relabel(p4, {3, 2, 1, 0})));
  CHECK(canonical_key(complete(3)) != canonical_key(path(3)));

  SimpleGraph a = build_abc(make_abc_spec(8, {3}, {1}));
  SimpleGraph ap = build_abc(make_abc_spec(8, {1}, {3}));
  CHECK(canonical_key(a) == canonical_key(ap));

  SUBCASE("random relabelings keep the key") {
    std::mt19937 rng(20210618);
    for (const auto& g : {path(6), complete(5), build_abc(make_abc_spec(7, {1, 2}, {3})),
                          make_graph(6, {{0, 2}, {2, 4}, {1, 3}, {3, 5}, {0, 5}})}) {
      std::vector<int> perm(g.order());
      std::iota(perm.begin(), perm.end(), 0);
      for (int round = 0; round < 20; ++round) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_key(relabel(g, perm)) == canonical_key(g));
      }
    }
  }

  SUBCASE("key equality coincides with isomorphism on all graphs up to 6 vertices") {
    for (int n = 2; n <= 6; ++n) {
      auto reps = enumerate_graphs(n);
      // Distinct representatives must have distinct keys and no isomorphism.
      for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i; j < reps.size(); ++j) {
          bool same_key = canonical_key(reps[i]) == canonical_key(reps[j]);
          bool iso = find_isomorphism(reps[i], reps[j]).has_value();
          CHECK(same_key == iso);
          CHECK(same_key == (i == j));
        }
      }
    }
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(make_graph(3, {})).size() == 3);
  CHECK(connected_components(complete(3)).size() == 1);
  auto comps = connected_components(make_graph(5, {{1, 3}, {0, 2}}));
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{0, 2});
  CHECK(comps[1] == std::vector<int>{1, 3});
  CHECK(comps[2] == std::vector<int>{4});
}

TEST_CASE("degree accessors and the boundary-degree facts") {
  SimpleGraph a = build_abc(make_abc_spec(8, {1, 3, 4}, {1, 5}));
  CHECK(degree(a, 0) == 3);  // |B|
  CHECK(degree(a, 7) == 2);  // beta + gamma'
  CHECK_THROWS_AS(degree(a, 8), GraphError);
}

TEST_CASE("partial injections absorb the blank value") {
  PartialInjection p(3, 3);
  p.set(0, 2);
  p.set(2, 0);
  CHECK(p.apply(0) == 2);
  CHECK(p.apply(1) == PartialInjection::kBlank);
  CHECK(p.apply(PartialInjection::kBlank) == PartialInjection::kBlank);
  CHECK(p.apply_inv(2) == 0);
  CHECK(p.apply_inv(1) == PartialInjection::kBlank);
  CHECK_THROWS_AS(p.set(0, 1), GraphError);
}
