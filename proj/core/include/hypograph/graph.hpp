#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypograph {

// Largest supported vertex count; adjacency rows are single 64-bit masks.
inline constexpr int kMaxOrder = 64;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Adjacency is kept as one bitmask row per
/// vertex, symmetric and irreflexive by construction. Optional per-vertex
/// labels carry display names ("a1", "v3", ...); they take no part in
/// isomorphism or canonical keys.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  int order() const { return order_; }

  bool edge(int u, int v) const { return (adj_[u] >> v) & 1u; }

  std::uint64_t neighbor_mask(int v) const { return adj_[v]; }

  int degree(int v) const;  // throws GraphError when v is out of range

  int edge_count() const;

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Display name of a vertex: the stored label, or "v{i+1}".
  std::string label(int v) const;

  /// Structural equality on the same vertex numbering (labels included).
  bool operator==(const SimpleGraph& other) const = default;

 private:
  int order_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::string> labels_;

  friend SimpleGraph make_graph(int, const std::vector<std::pair<int, int>>&,
                                std::vector<std::string>);
};

/// Builds a graph from an unordered edge list. Duplicate pairs collapse;
/// loops and out-of-range endpoints are rejected with a diagnostic naming
/// the offending pair. Labels, when given, must be distinct and n of them.
SimpleGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                       std::vector<std::string> labels = {});

int degree(const SimpleGraph& g, int v);

/// Maximal connected vertex sets, each sorted, ordered by least vertex.
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);

/// Result of deleting a vertex: the compacted card plus both re-index maps
/// (old_to_new[v] == -1 for the deleted vertex).
struct DeletedGraph {
  SimpleGraph graph;
  std::vector<int> old_to_new;
  std::vector<int> new_to_old;
};

DeletedGraph delete_vertex(const SimpleGraph& g, int v);

/// Total injective map between two vertex index spaces; bijective when the
/// orders agree. images[v] is the image of source vertex v.
struct VertexMap {
  int source_order = 0;
  int target_order = 0;
  std::vector<int> images;

  int operator()(int v) const { return images[v]; }
  bool is_injective() const;
  bool is_bijection() const { return source_order == target_order && is_injective(); }

  bool operator==(const VertexMap&) const = default;
  auto operator<=>(const VertexMap& other) const { return images <=> other.images; }
};

/// Partial injective map between index spaces 0..m-1 and 0..k-1 with an
/// absorbing undefined value: apply(kBlank) == kBlank, and applying the map
/// (or its inverse) outside its domain yields kBlank.
class PartialInjection {
 public:
  static constexpr int kBlank = -1;

  PartialInjection() = default;
  PartialInjection(int source_size, int target_size)
      : fwd_(source_size, kBlank), inv_(target_size, kBlank) {}

  static PartialInjection from_forward(const std::vector<int>& fwd, int target_size);

  int source_size() const { return static_cast<int>(fwd_.size()); }
  int target_size() const { return static_cast<int>(inv_.size()); }

  void set(int v, int w);

  int apply(int v) const { return v == kBlank ? kBlank : fwd_[v]; }
  int apply_inv(int w) const { return w == kBlank ? kBlank : inv_[w]; }

  bool defined(int v) const { return v != kBlank && fwd_[v] != kBlank; }

  const std::vector<int>& forward() const { return fwd_; }

  bool operator==(const PartialInjection&) const = default;

 private:
  std::vector<int> fwd_;
  std::vector<int> inv_;
};

/// True iff rho is a bijection preserving and reflecting adjacency.
bool is_isomorphism(const SimpleGraph& g, const SimpleGraph& h, const VertexMap& rho);

/// Lexicographically least isomorphism g -> h (by image list), or nothing.
std::optional<VertexMap> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h);

/// Calls yield for every isomorphism g -> h in lexicographic order of the
/// image list; stops early when yield returns false. Automorphisms come out
/// when g and h coincide.
void for_each_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                          const std::function<bool(const VertexMap&)>& yield);

/// First `limit` isomorphisms in lexicographic order (limit >= 1).
std::vector<VertexMap> enumerate_isomorphisms(const SimpleGraph& g, const SimpleGraph& h,
                                              std::size_t limit);

/// Exact isomorphism-class identifier: key(G) == key(H) iff G and H are
/// isomorphic. Layout: one byte of order, then the minimum adjacency
/// bit string over admissible vertex orderings, packed MSB-first.
struct CanonicalKey {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;

  bool operator==(const CanonicalKey&) const = default;
  auto operator<=>(const CanonicalKey& other) const { return bytes <=> other.bytes; }
};

CanonicalKey canonical_key(const SimpleGraph& g);

}  // namespace hypograph
