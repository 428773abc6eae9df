#include "hypograph/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace hypograph {

namespace {

std::string pair_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

SimpleGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                       std::vector<std::string> labels) {
  if (n < 1) throw GraphError("graph order must be at least 1, got " + std::to_string(n));
  if (n > kMaxOrder)
    throw GraphError("graph order " + std::to_string(n) + " exceeds the supported maximum " +
                     std::to_string(kMaxOrder));
  SimpleGraph g;
  g.order_ = n;
  g.adj_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphError("edge endpoint out of range: " + pair_str(u, v));
    if (u == v) throw GraphError("loop edge rejected: " + pair_str(u, v));
    g.adj_[u] |= std::uint64_t{1} << v;
    g.adj_[v] |= std::uint64_t{1} << u;
  }
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n)
      throw GraphError("label count " + std::to_string(labels.size()) +
                       " does not match order " + std::to_string(n));
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != n) throw GraphError("labels must be distinct");
    g.labels_ = std::move(labels);
  }
  return g;
}

int SimpleGraph::degree(int v) const {
  if (v < 0 || v >= order_)
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(order_));
  return std::popcount(adj_[v]);
}

int SimpleGraph::edge_count() const {
  int total = 0;
  for (int v = 0; v < order_; ++v) total += std::popcount(adj_[v]);
  return total / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order_; ++u)
    for (int v = u + 1; v < order_; ++v)
      if (edge(u, v)) out.emplace_back(u, v);
  return out;
}

std::string SimpleGraph::label(int v) const {
  if (!labels_.empty()) return labels_[v];
  return "v" + std::to_string(v + 1);
}

int degree(const SimpleGraph& g, int v) { return g.degree(v); }

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
  int n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> components;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      std::uint64_t nb = g.neighbor_mask(comp[i]);
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

DeletedGraph delete_vertex(const SimpleGraph& g, int v) {
  int n = g.order();
  if (v < 0 || v >= n)
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(n));
  if (n < 2) throw GraphError("cannot delete a vertex from a one-vertex graph");
  DeletedGraph result;
  result.old_to_new.assign(n, -1);
  result.new_to_old.reserve(n - 1);
  for (int u = 0; u < n; ++u) {
    if (u == v) continue;
    result.old_to_new[u] = static_cast<int>(result.new_to_old.size());
    result.new_to_old.push_back(u);
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    if (u == v) continue;
    for (int w = u + 1; w < n; ++w) {
      if (w == v || !g.edge(u, w)) continue;
      edges.emplace_back(result.old_to_new[u], result.old_to_new[w]);
    }
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (int u : result.new_to_old) labels.push_back(g.labels()[u]);
  }
  result.graph = make_graph(n - 1, edges, std::move(labels));
  return result;
}

bool VertexMap::is_injective() const {
  std::uint64_t used = 0;
  for (int w : images) {
    if (w < 0 || w >= target_order) return false;
    std::uint64_t bit = std::uint64_t{1} << w;
    if (used & bit) return false;
    used |= bit;
  }
  return static_cast<int>(images.size()) == source_order;
}

PartialInjection PartialInjection::from_forward(const std::vector<int>& fwd, int target_size) {
  PartialInjection p(static_cast<int>(fwd.size()), target_size);
  for (int v = 0; v < static_cast<int>(fwd.size()); ++v)
    if (fwd[v] != kBlank) p.set(v, fwd[v]);
  return p;
}

void PartialInjection::set(int v, int w) {
  if (v < 0 || v >= source_size() || w < 0 || w >= target_size())
    throw GraphError("partial map entry out of range: " + pair_str(v, w));
  if (fwd_[v] != kBlank || inv_[w] != kBlank)
    throw GraphError("partial map entry conflicts with existing assignment: " + pair_str(v, w));
  fwd_[v] = w;
  inv_[w] = v;
}

bool is_isomorphism(const SimpleGraph& g, const SimpleGraph& h, const VertexMap& rho) {
  if (rho.source_order != g.order() || rho.target_order != h.order()) return false;
  if (g.order() != h.order() || !rho.is_injective()) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.edge(u, v) != h.edge(rho(u), rho(v))) return false;
  return true;
}

namespace {

// Per-vertex invariant used to prune the isomorphism backtracking: degree
// plus the sorted multiset of neighbor degrees.
std::vector<std::pair<int, std::vector<int>>> vertex_signatures(const SimpleGraph& g) {
  int n = g.order();
  std::vector<std::pair<int, std::vector<int>>> sig(n);
  for (int v = 0; v < n; ++v) {
    sig[v].first = g.degree(v);
    std::uint64_t nb = g.neighbor_mask(v);
    while (nb) {
      int w = std::countr_zero(nb);
      nb &= nb - 1;
      sig[v].second.push_back(g.degree(w));
    }
    std::sort(sig[v].second.begin(), sig[v].second.end());
  }
  return sig;
}

struct IsoSearch {
  const SimpleGraph& g;
  const SimpleGraph& h;
  const std::function<bool(const VertexMap&)>& yield;
  int n;
  std::vector<std::uint64_t> candidates;  // candidates[u]: mask of admissible images
  std::vector<int> image;
  std::uint64_t used = 0;
  bool stopped = false;

  bool run() {
    std::vector<int> gdeg(n), hdeg(n);
    for (int v = 0; v < n; ++v) gdeg[v] = g.degree(v), hdeg[v] = h.degree(v);
    auto sorted_g = gdeg, sorted_h = hdeg;
    std::sort(sorted_g.begin(), sorted_g.end());
    std::sort(sorted_h.begin(), sorted_h.end());
    if (sorted_g != sorted_h) return true;

    auto sig_g = vertex_signatures(g);
    auto sig_h = vertex_signatures(h);
    candidates.assign(n, 0);
    for (int u = 0; u < n; ++u) {
      for (int w = 0; w < n; ++w)
        if (sig_g[u] == sig_h[w]) candidates[u] |= std::uint64_t{1} << w;
      if (candidates[u] == 0) return true;
    }
    image.assign(n, -1);
    extend(0);
    return !stopped;
  }

  void extend(int u) {
    if (stopped) return;
    if (u == n) {
      VertexMap rho{n, n, image};
      if (!yield(rho)) stopped = true;
      return;
    }
    std::uint64_t mask = candidates[u] & ~used;
    while (mask && !stopped) {
      int w = std::countr_zero(mask);
      mask &= mask - 1;
      bool ok = true;
      for (int prev = 0; prev < u; ++prev) {
        if (g.edge(prev, u) != h.edge(image[prev], w)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[u] = w;
      used |= std::uint64_t{1} << w;
      extend(u + 1);
      used &= ~(std::uint64_t{1} << w);
      image[u] = -1;
    }
  }
};

}  // namespace

void for_each_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                          const std::function<bool(const VertexMap&)>& yield) {
  if (g.order() != h.order()) return;
  if (g.edge_count() != h.edge_count()) return;
  IsoSearch search{g, h, yield, g.order(), {}, {}};
  search.run();
}

std::optional<VertexMap> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h) {
  std::optional<VertexMap> found;
  for_each_isomorphism(g, h, [&](const VertexMap& rho) {
    found = rho;
    return false;
  });
  return found;
}

std::vector<VertexMap> enumerate_isomorphisms(const SimpleGraph& g, const SimpleGraph& h,
                                              std::size_t limit) {
  if (limit < 1) throw GraphError("isomorphism enumeration limit must be at least 1");
  std::vector<VertexMap> out;
  for_each_isomorphism(g, h, [&](const VertexMap& rho) {
    out.push_back(rho);
    return out.size() < limit;
  });
  return out;
}

namespace {

// Stable vertex coloring: start from degrees, refine by sorted neighbor
// color multisets until fixpoint. Color ids are assigned by signature order,
// so isomorphic graphs end up with identical color sequences after sorting.
std::vector<int> refined_colors(const SimpleGraph& g) {
  int n = g.order();
  std::vector<int> color(n);
  {
    std::vector<int> degs(n);
    for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
    auto uniq = degs;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), degs[v]) -
                                  uniq.begin());
  }
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb_colors;
      std::uint64_t nb = g.neighbor_mask(v);
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        nb_colors.push_back(color[w]);
      }
      std::sort(nb_colors.begin(), nb_colors.end());
      sig[v].insert(sig[v].end(), nb_colors.begin(), nb_colors.end());
    }
    auto uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) -
                                 uniq.begin());
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

// Minimum-encoding search over vertex orderings consistent with the refined
// color sequence. Column j of an ordering packs adjacency bits to positions
// 0..j-1 (position 0 as the most significant bit); the encoding is the column
// list compared lexicographically. Restricting to color-sorted orderings is
// sound because the coloring is an isomorphism invariant.
struct CanonicalSearch {
  const SimpleGraph& g;
  int n;
  std::vector<int> required_color;            // color demanded at each position
  std::vector<std::vector<int>> by_color;     // vertices per color, ascending
  std::vector<int> perm;
  std::vector<std::uint64_t> current;
  std::vector<std::uint64_t> best;
  std::uint64_t used = 0;

  explicit CanonicalSearch(const SimpleGraph& graph) : g(graph), n(graph.order()) {
    auto color = refined_colors(g);
    int classes = 0;
    for (int c : color) classes = std::max(classes, c + 1);
    by_color.assign(classes, {});
    for (int v = 0; v < n; ++v) by_color[color[v]].push_back(v);
    required_color = color;
    std::sort(required_color.begin(), required_color.end());
    perm.assign(n, -1);
    current.assign(n, 0);
    best.assign(n, ~std::uint64_t{0});
  }

  std::uint64_t column_for(int pos, int v) const {
    std::uint64_t bits = 0;
    for (int i = 0; i < pos; ++i) bits = (bits << 1) | (g.edge(perm[i], v) ? 1u : 0u);
    return bits;
  }

  // Invariant on entry: current[0..pos-1] == best[0..pos-1]. Every partial
  // ordering extends to a full one, so once a column improves on best the
  // subtree below always rewrites the suffix with a complete encoding.
  void search(int pos) {
    if (pos == n) {
      best = current;
      return;
    }
    for (int v : by_color[required_color[pos]]) {
      std::uint64_t bit = std::uint64_t{1} << v;
      if (used & bit) continue;
      std::uint64_t col = column_for(pos, v);
      if (col > best[pos]) continue;
      if (col < best[pos]) {
        best[pos] = col;
        std::fill(best.begin() + pos + 1, best.end(), ~std::uint64_t{0});
      }
      perm[pos] = v;
      current[pos] = col;
      used |= bit;
      search(pos + 1);
      used &= ~bit;
      perm[pos] = -1;
    }
  }
};

}  // namespace

CanonicalKey canonical_key(const SimpleGraph& g) {
  int n = g.order();
  CanonicalKey key;
  key.bytes.push_back(static_cast<std::uint8_t>(n));
  if (n <= 1) return key;

  CanonicalSearch search(g);
  search.search(0);

  int total_bits = n * (n - 1) / 2;
  key.bytes.resize(1 + (total_bits + 7) / 8, 0);
  int bit_index = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      int bit = static_cast<int>((search.best[j] >> (j - 1 - i)) & 1u);
      if (bit) key.bytes[1 + bit_index / 8] |= static_cast<std::uint8_t>(0x80u >> (bit_index % 8));
      ++bit_index;
    }
  }
  return key;
}

std::string CanonicalKey::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

}  // namespace hypograph
