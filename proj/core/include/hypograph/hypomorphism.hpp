#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hypograph/graph.hpp"

namespace hypograph {

/// Multiset of canonical card keys, one per vertex, kept sorted.
struct Deck {
  std::vector<CanonicalKey> cards;

  bool operator==(const Deck&) const = default;
};

/// Deck of a graph of order >= 2: keys of all vertex-deleted subgraphs.
Deck deck(const SimpleGraph& g);

bool decks_equal(const SimpleGraph& g, const SimpleGraph& h);

/// A bijection f together with a per-vertex family of card isomorphisms
/// phi[v]: G-v -> H-f(v). The phi maps are stored against original vertex
/// indices as partial injections, undefined exactly at v (and at f(v) on
/// the inverse side).
struct Hypomorphism {
  VertexMap f;
  std::vector<PartialInjection> phi;

  bool operator==(const Hypomorphism&) const = default;
};

/// Identity hypomorphism of a graph with itself.
Hypomorphism identity_hypomorphism(const SimpleGraph& g);

/// Enumerates hypomorphisms G -> H in a fixed deterministic order: candidate
/// bijections f (filtered by degree and card key, lexicographic by image
/// list), then for each f every combination of per-vertex card isomorphisms,
/// odometer style with vertex 0 as the most significant slot and each slot
/// in lexicographic order. Distinct phi families over the same f are
/// distinct hypomorphisms. Stops after `limit` yields or when the callback
/// returns false.
void for_each_hypomorphism(const SimpleGraph& g, const SimpleGraph& h, std::size_t limit,
                           const std::function<bool(const Hypomorphism&)>& yield);

std::vector<Hypomorphism> find_hypomorphisms(const SimpleGraph& g, const SimpleGraph& h,
                                             std::size_t limit = 1'000'000);

struct HypoViolation {
  enum class Kind { f_not_bijective, phi_not_isomorphism, degree_mismatch };
  Kind kind;
  int vertex = -1;   // the v whose phi_v or degree failed; -1 for f-level
  std::string detail;
};

struct HypoValidation {
  bool shape_ok = true;
  std::string shape_error;
  std::vector<HypoViolation> violations;

  bool valid() const { return shape_ok && violations.empty(); }
};

/// Checks a hypomorphism candidate against (g, h). Structural shape
/// mismatches (wrong orders, wrong map sizes) are reported as a distinct
/// error, not as violations.
HypoValidation validate_hypomorphism(const SimpleGraph& g, const SimpleGraph& h,
                                     const Hypomorphism& hy);

/// Hypomorphism JSON: {"f": [...], "phi": {"<v>": [images over V-{v} in
/// ascending source order], ...}} with 0-based vertex indices.
std::string hypomorphism_to_json(const Hypomorphism& hy);
Hypomorphism hypomorphism_from_json(const std::string& text);

}  // namespace hypograph
