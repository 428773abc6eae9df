#include "hypograph/enumerate.hpp"

#include <map>
#include <utility>

namespace hypograph {

std::vector<SimpleGraph> enumerate_graphs(int n) {
  if (n < 1 || n > 8)
    throw GraphError("enumeration supports 1..8 vertices, got " + std::to_string(n));

  std::vector<SimpleGraph> level{make_graph(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::map<CanonicalKey, SimpleGraph> classes;
    for (const auto& g : level) {
      std::vector<std::pair<int, int>> base_edges = g.edges();
      for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        auto edges = base_edges;
        for (int v = 0; v < k - 1; ++v)
          if ((mask >> v) & 1u) edges.emplace_back(v, k - 1);
        SimpleGraph extended = make_graph(k, edges);
        CanonicalKey key = canonical_key(extended);
        classes.try_emplace(std::move(key), std::move(extended));
      }
    }
    level.clear();
    level.reserve(classes.size());
    for (auto& [key, g] : classes) level.push_back(std::move(g));
  }
  return level;
}

}  // namespace hypograph
