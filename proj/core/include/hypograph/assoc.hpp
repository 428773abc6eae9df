#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypograph/graph.hpp"
#include "hypograph/hypomorphism.hpp"

namespace hypograph {

/// The directed graph associated with (G, H, f, {phi_v}): one vertex per
/// vertex of G, a normal arrow v1 -> v2 when [v1,v2] is a non-edge of G that
/// phi_{v1} maps onto an edge at f(v1), and a dashed arrow v1 -> v2 when
/// [f(v1),f(v2)] is a non-edge of H pulled back by phi_{v1} onto an edge at
/// v1. Carries its provenance.
struct AssociatedDigraph {
  int order = 0;
  std::vector<std::uint64_t> normal;  // out-neighbor masks
  std::vector<std::uint64_t> dashed;
  SimpleGraph g, h;
  Hypomorphism hy;

  bool has_normal(int a, int b) const { return (normal[a] >> b) & 1u; }
  bool has_dashed(int a, int b) const { return (dashed[a] >> b) & 1u; }
  int normal_out_degree(int v) const;
  int dashed_out_degree(int v) const;
};

/// Requires a valid hypomorphism; the validation report is propagated in the
/// error message otherwise.
AssociatedDigraph build_assoc(const SimpleGraph& g, const SimpleGraph& h, const Hypomorphism& hy);

struct ArrowBalanceEntry {
  int vertex;
  int normal_out;
  int dashed_out;
  bool equal;
};

std::vector<ArrowBalanceEntry> arrow_balance(const AssociatedDigraph& d);

/// Vertices with no outgoing normal arrows (equivalently none of either kind).
std::vector<int> extendable_vertices(const AssociatedDigraph& d);

struct ExtendResult {
  std::optional<VertexMap> iso;                       // set when v is extendable
  bool verified = false;                              // iso passed a direct check
  std::optional<std::pair<int, int>> blocking_arrow;  // a normal arrow from v otherwise
};

/// Extends phi_v by v -> f(v) when v has no outgoing normal arrows and
/// verifies the result is a full isomorphism; otherwise names a blocking
/// arrow.
ExtendResult extend_iso(const SimpleGraph& g, const SimpleGraph& h, const Hypomorphism& hy,
                        int v);
ExtendResult extend_iso(const AssociatedDigraph& d, int v);

/// Closed vertex sequence v_1..v_2k with normal arrows at odd positions and
/// dashed arrows at even positions (cyclically). Vertices may repeat.
struct AlternatingCycle {
  int k = 0;
  std::vector<int> vertices;  // size 2k

  bool operator==(const AlternatingCycle&) const = default;
};

bool is_alternating_cycle(const AssociatedDigraph& d, const AlternatingCycle& cycle);

struct CycleEnumeration {
  std::vector<AlternatingCycle> cycles;
  bool truncated = false;
};

/// All alternating cycles with half-length <= max_k, deduplicated up to even
/// cyclic rotation (alternation phase preserved), in deterministic order:
/// half-length ascending, then lexicographic on the canonical rotation.
CycleEnumeration find_alternating_cycles(const AssociatedDigraph& d, int max_k,
                                         std::size_t cap = 1'000'000);

/// One of the sequences of Definition-style map compositions. Entry i
/// (1-based, stored at entries[i-1]) is a vertex or kBlank. Entries at
/// indices congruent mod 2k form threads evolving under the cycle's closing
/// composition; a thread either blanks out or revisits its first value and
/// is then periodic forever.
struct TypeSequence {
  static constexpr int kBlank = PartialInjection::kBlank;

  std::vector<int> entries;
  bool periodic = false;
  int periodic_thread = -1;  // 1-based thread index when periodic
  int period = 0;
  int defined_count = 0;     // non-blank entries of the full infinite sequence
  int max_defined = 0;       // largest non-blank 1-based index
  bool suffix_form = false;  // defined exactly on 1..max_defined
};

struct SequenceTable {
  int k = 0;
  std::vector<TypeSequence> primed;    // primed[t], t = 0..k-1, values in V(H)
  std::vector<TypeSequence> unprimed;  // unprimed[t], values in V(G)
};

/// The aligned-vertex data a cycle classification actually consumes: the two
/// endpoint vertices with their f-images and card isomorphisms. Sufficient
/// for any half-length-1 cycle or mutual normal arrow pair.
struct PairMaps {
  int v1, v2;
  int fv1, fv2;
  PartialInjection phi1, phi2;  // phi at v1 resp. v2, original indices
};

SequenceTable type_sequences(const SimpleGraph& g, const SimpleGraph& h, const Hypomorphism& hy,
                             const AlternatingCycle& cycle);
SequenceTable type_sequences(const SimpleGraph& g, const SimpleGraph& h, const PairMaps& pair);

enum class CycleType { alpha, beta };

struct BetaWitness {
  enum class Kind {
    periodic_never_blank,  // some thread revisits a value and never blanks
    blank_structure,       // blanks are not a clean common suffix across sequences
    terminal_mismatch,     // common n0 exists but a terminal value is wrong
  };
  Kind kind;
  std::string detail;
};

struct CycleClassification {
  CycleType kind;
  int n0 = 0;  // alpha only
  SequenceTable table;
  std::optional<BetaWitness> witness;
};

CycleClassification classify_cycle(const SimpleGraph& g, const SimpleGraph& h,
                                   const Hypomorphism& hy, const AlternatingCycle& cycle);

/// Classification of the two-vertex cycle given mutual normal arrows
/// v1 -> v2 and v2 -> v1 (no dashed closing arrow required).
CycleClassification classify_pair(const SimpleGraph& g, const SimpleGraph& h,
                                  const Hypomorphism& hy, int v1, int v2);
CycleClassification classify_pair(const SimpleGraph& g, const SimpleGraph& h,
                                  const PairMaps& pair);

struct MutualPairReport {
  int v1, v2;  // v1 < v2
  CycleClassification forward;   // cycle (v1, v2)
  CycleClassification backward;  // cycle (v2, v1)
};

struct TrichotomyReport {
  bool clause_extendable = false;
  std::vector<int> extendable;
  std::optional<VertexMap> extended_witness;  // extension at the least extendable vertex

  bool clause_mutual_pair = false;
  std::vector<MutualPairReport> pairs;

  bool clause_all_beta = false;  // every enumerated cycle is beta-type
  std::size_t cycles_enumerated = 0;
  std::size_t alpha_cycles = 0;
  std::size_t beta_cycles = 0;
  int max_k = 0;
  bool truncated = false;

  bool any_clause() const { return clause_extendable || clause_mutual_pair || clause_all_beta; }
};

TrichotomyReport classify_trichotomy(const SimpleGraph& g, const SimpleGraph& h,
                                     const Hypomorphism& hy, int max_k,
                                     std::size_t cycle_cap = 1'000'000);

/// DOT export: normal arrows solid, dashed arrows dashed, vertices in
/// ascending index order; optional gray undirected overlay of E(G).
std::string assoc_to_dot(const AssociatedDigraph& d, bool overlay_g_edges = false,
                         const std::string& name = "Gt");

std::string assoc_to_json(const AssociatedDigraph& d);
std::string classification_to_json(const CycleClassification& c);
std::string trichotomy_to_json(const TrichotomyReport& r);

}  // namespace hypograph
