#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "hypograph/graph.hpp"
#include "hypograph/hypomorphism.hpp"

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

// Brute-force oracle over all n! bijections and, for each vertex, all card
// isomorphisms found by exhaustive permutation search on the cards.
std::size_t brute_hypomorphism_count(const SimpleGraph& g, const SimpleGraph& h) {
  int n = g.order();
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  std::size_t total = 0;
  do {
    std::size_t product = 1;
    for (int v = 0; v < n && product > 0; ++v) {
      auto gc = delete_vertex(g, v);
      auto hc = delete_vertex(h, f[v]);
      std::size_t count = 0;
      std::vector<int> perm(n - 1);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        bool ok = true;
        for (int x = 0; x < n - 1 && ok; ++x)
          for (int y = x + 1; y < n - 1; ++y)
            if (gc.graph.edge(x, y) != hc.graph.edge(perm[x], perm[y])) {
              ok = false;
              break;
            }
        if (ok) ++count;
      } while (std::next_permutation(perm.begin(), perm.end()));
      product *= count;
    }
    total += product;
  } while (std::next_permutation(f.begin(), f.end()));
  return total;
}

}  // namespace

TEST_CASE("decks") {
  SimpleGraph k3 = complete(3);
  Deck d = deck(k3);
  REQUIRE(d.cards.size() == 3);
  CHECK(d.cards[0] == d.cards[1]);
  CHECK(d.cards[1] == d.cards[2]);
  CHECK(d.cards[0] == canonical_key(complete(2)));

  SUBCASE("the path deck from explicit deletions") {
    SimpleGraph p4 = path(4);
    Deck dp = deck(p4);
    std::vector<CanonicalKey> expected{
        canonical_key(path(3)),
        canonical_key(path(3)),
        canonical_key(make_graph(3, {{0, 1}})),
        canonical_key(make_graph(3, {{0, 1}})),
    };
    std::sort(expected.begin(), expected.end());
    CHECK(dp.cards == expected);
  }

  SUBCASE("edgeless deck") {
    Deck de = deck(make_graph(3, {}));
    CHECK(de.cards[0] == canonical_key(make_graph(2, {})));
    CHECK(de.cards[0] == de.cards[2]);
  }

  CHECK_THROWS_AS(deck(make_graph(1, {})), GraphError);
}

TEST_CASE("decks_equal") {
  SimpleGraph p4 = path(4);
  CHECK(decks_equal(p4, p4));
  CHECK(!decks_equal(complete(3), path(3)));

  // The non-isomorphic offset pair cannot share a deck.
  SimpleGraph a = make_graph(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {0, 3}, {2, 5}, {4, 7},
                                 {0, 4}, {2, 6}, {1, 2}, {3, 4}, {5, 6}, {1, 6}});
  SimpleGraph b = make_graph(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {0, 5}, {2, 7},
                                 {1, 2}, {3, 4}, {5, 6}, {1, 4}, {3, 6}, {1, 5}, {3, 7}});
  CHECK(!decks_equal(a, b));
}

TEST_CASE("hypomorphism search on the triangle starts from the identity") {
  SimpleGraph k3 = complete(3);
  auto all = find_hypomorphisms(k3, k3, 10);
  REQUIRE(!all.empty());
  CHECK(all.front() == identity_hypomorphism(k3));
}

TEST_CASE("hypomorphism search on the path matches the brute-force oracle") {
  SimpleGraph p4 = path(4);
  std::size_t expected = brute_hypomorphism_count(p4, p4);
  auto all = find_hypomorphisms(p4, p4, 1000000);
  CHECK(all.size() == expected);
  CHECK(all.size() == 64);
  for (const auto& hy : all) CHECK(validate_hypomorphism(p4, p4, hy).valid());

  SUBCASE("all yields are distinct") {
    for (std::size_t i = 0; i + 1 < all.size(); ++i)
      CHECK(!(all[i] == all[i + 1]));
  }

  SUBCASE("five-vertex exhaustiveness") {
    SimpleGraph p5 = path(5);
    CHECK(find_hypomorphisms(p5, p5, 1000000).size() == brute_hypomorphism_count(p5, p5));
    SimpleGraph bull = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 4}});
    CHECK(find_hypomorphisms(bull, bull, 1000000).size() ==
          brute_hypomorphism_count(bull, bull));
  }
}

TEST_CASE("hypomorphism search rejections") {
  CHECK(find_hypomorphisms(complete(3), path(3), 10).empty());
  CHECK_THROWS_AS(find_hypomorphisms(path(3), path(4), 10), GraphError);
  CHECK_THROWS_AS(find_hypomorphisms(complete(2), complete(2), 10), GraphError);
  SimpleGraph p4 = path(4);
  CHECK(find_hypomorphisms(p4, p4, 5).size() == 5);
}

TEST_CASE("validate_hypomorphism reports violations") {
  SimpleGraph p4 = path(4);
  Hypomorphism good = identity_hypomorphism(p4);
  CHECK(validate_hypomorphism(p4, p4, good).valid());

  SUBCASE("degree violation from swapping images of different degree") {
    Hypomorphism bad = good;
    std::swap(bad.f.images[0], bad.f.images[1]);  // deg 1 vs deg 2
    auto report = validate_hypomorphism(p4, p4, bad);
    CHECK(!report.valid());
    bool saw_degree = false;
    for (const auto& v : report.violations)
      if (v.kind == HypoViolation::Kind::degree_mismatch) saw_degree = true;
    CHECK(saw_degree);
  }

  SUBCASE("phi violation") {
    Hypomorphism bad = good;
    // Identity on the card of vertex 0 is not an isomorphism onto the card
    // of vertex 3 when f(0) = 3.
    bad.f.images = {3, 1, 2, 0};
    auto report = validate_hypomorphism(p4, p4, bad);
    CHECK(!report.valid());
    bool saw_phi = false;
    for (const auto& v : report.violations)
      if (v.kind == HypoViolation::Kind::phi_not_isomorphism) saw_phi = true;
    CHECK(saw_phi);
  }

  SUBCASE("shape mismatch is an error, not a violation") {
    Hypomorphism bad = good;
    bad.phi.pop_back();
    auto report = validate_hypomorphism(p4, p4, bad);
    CHECK(!report.shape_ok);
    CHECK(report.violations.empty());
  }

  SUBCASE("search yields always validate") {
    for (const auto& hy : find_hypomorphisms(p4, p4, 50))
      CHECK(validate_hypomorphism(p4, p4, hy).valid());
  }
}

TEST_CASE("hypomorphism JSON round trip") {
  SimpleGraph p4 = path(4);
  auto all = find_hypomorphisms(p4, p4, 10);
  for (const auto& hy : all) {
    Hypomorphism back = hypomorphism_from_json(hypomorphism_to_json(hy));
    CHECK(back == hy);
  }
  CHECK_THROWS_AS(hypomorphism_from_json("{}"), GraphError);
  CHECK_THROWS_AS(hypomorphism_from_json("{\"f\": [0,1], \"phi\": {}}"), GraphError);
}
