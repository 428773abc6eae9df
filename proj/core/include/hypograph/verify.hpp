#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypograph/abc.hpp"
#include "hypograph/graph.hpp"

namespace hypograph {

struct VerifyOptions {
  int max_n = 5;                    // 3..7
  std::size_t hypo_cap = 10'000;    // per ordered deck-equal pair
  int jobs = 1;
  std::size_t cycle_cap = 100'000;  // alternating cycles per digraph
};

struct Violation {
  std::string check;
  int n = 0;
  int g_index = -1;
  int h_index = -1;
  std::string detail;
  std::string witness;  // hypomorphism JSON reproducing the failure
};

struct PairCoverage {
  int n;
  int g_index, h_index;
  std::size_t hypos_checked;
  bool hypo_capped;
  bool cycles_truncated;
};

struct VerifyCounts {
  std::size_t graphs_enumerated = 0;
  std::size_t deck_equal_pairs = 0;
  std::size_t hypomorphisms_checked = 0;
  std::size_t clause_extendable = 0;
  std::size_t clause_mutual_pair = 0;
  std::size_t clause_all_beta = 0;
  std::size_t alpha_cycles = 0;
  std::size_t beta_cycles = 0;
  std::size_t alpha_pairs = 0;
  std::size_t structure_extractions = 0;
};

/// Outcome of an exhaustive desk-scale run: per-hypomorphism arrow balance,
/// extension equivalence, trichotomy, alpha-cycle reverse arrows, structure
/// extraction at alpha pairs, and the small-order reconstruction oracle.
/// Passing runs have an empty violation list; capped pairs are reported as
/// incomplete coverage, never silently.
struct VerificationReport {
  VerifyOptions scope;
  VerifyCounts counts;
  std::vector<PairCoverage> capped_pairs;
  std::vector<Violation> violations;
  double enumerate_ms = 0;
  double verify_ms = 0;

  bool pass() const { return violations.empty(); }
  std::string to_json(bool include_timing = true) const;
};

VerificationReport verify_exhaustive(const VerifyOptions& opts);

struct SweepOptions {
  int min_n = 3;
  int max_n = 9;
};

/// A spec where the parity counts agree yet A and A' are not isomorphic;
/// decks_equal records whether the pair could carry any hypomorphism at all.
struct SweepFinding {
  int n;
  std::vector<int> b_offsets, c_offsets;
  BetaGamma bg;
  bool decks_equal;
};

/// Sweep of every (B,C) pair at each order: the four A(n;B,C) reports must
/// hold with zero violations; notable findings are collected on the side.
struct SweepReport {
  SweepOptions scope;
  std::size_t specs_checked = 0;
  std::vector<Violation> violations;
  std::vector<SweepFinding> findings;
  double elapsed_ms = 0;

  bool pass() const { return violations.empty(); }
  std::string to_json(bool include_timing = true) const;
};

SweepReport sweep_abc(const SweepOptions& opts);

}  // namespace hypograph
