#pragma once

#include <array>
#include <string>
#include <vector>

#include "hypograph/assoc.hpp"
#include "hypograph/graph.hpp"
#include "hypograph/hypomorphism.hpp"

namespace hypograph {

/// Parameters of the offset-pattern graph A(n;B,C): vertices a_1..a_n, an
/// edge [a_i, a_{i+d}] for every odd i when d is in B and for every even i
/// when d is in C.
struct AbcSpec {
  int n = 0;
  std::vector<int> b_offsets;  // sorted, within 1..n-1
  std::vector<int> c_offsets;

  bool operator==(const AbcSpec&) const = default;
};

AbcSpec make_abc_spec(int n, std::vector<int> b_offsets, std::vector<int> c_offsets);

/// Edge rule of A(n;B,C) at 1-based positions i < j.
bool abc_edge(const AbcSpec& spec, int i, int j);

SimpleGraph build_abc(const AbcSpec& spec);

/// Subgraph of A(n;B,C) with positions p, p+2, p+4, ... removed; surviving
/// vertices keep their original "a{i}" labels.
struct BarAbcSpec {
  AbcSpec base;
  int p = 0;  // 1 <= p < n
};

SimpleGraph build_bar_abc(const BarAbcSpec& spec);

/// The parity counts beta/gamma: offsets d with n-d odd, and the complements
/// within |B| resp. |C|.
struct BetaGamma {
  int beta = 0;
  int beta_prime = 0;
  int gamma = 0;
  int gamma_prime = 0;

  bool operator==(const BetaGamma&) const = default;
};

BetaGamma beta_gamma(const AbcSpec& spec);

/// A = A(n;B,C) on labels a1..an, and A' = A(n;C,B) renumbered so that a'_i
/// is the (n-i+1)-th vertex of its own defining order, labels a'1..a'n.
std::pair<SimpleGraph, SimpleGraph> companion(const AbcSpec& spec);

struct CheckedMap {
  std::string name;
  PartialInjection map;
  bool pass = false;
  std::string failure;
};

/// The four shift/reflection isomorphisms between A and A': Psi (a_i ->
/// a_{i-2}), Psi' (a'_i -> a'_{i-2}), phi_1 (a_i -> a'_{n-i+2} on A-a_1) and
/// phi_2 (a_i -> a'_{n-i} on A-a_n), each verified to preserve and reflect
/// adjacency.
struct Lemma12Report {
  CheckedMap psi, psi_prime, phi1, phi2;
  bool all_pass = false;
};

Lemma12Report lemma12_check(const AbcSpec& spec);

/// (a) a_1..a_n Hamilton path of A; (b) the mirrored claim in A'; (c) 1 in B
/// and 1 in C. The three are equivalent.
struct HamiltonReport {
  bool a_path = false;
  bool a_prime_path = false;
  bool offsets_present = false;
  bool equivalent = false;
};

HamiltonReport hamilton_check(const AbcSpec& spec);

/// beta(A) = gamma(A) iff A and A' share edge count and the two boundary
/// degrees; also verifies the closed-form degrees deg a_1 = |B|,
/// deg a_n = beta + gamma', deg a'_n = |C|, deg a'_1 = gamma + beta'.
struct Lemma57Report {
  BetaGamma bg;
  bool parity_equal = false;  // beta == gamma
  int edges_a = 0, edges_a_prime = 0;
  int deg_a1 = 0, deg_an = 0, deg_ap1 = 0, deg_apn = 0;
  bool boundary_equal = false;
  bool equivalent = false;
  bool closed_forms_ok = false;
};

Lemma57Report lemma57_check(const AbcSpec& spec);

/// B0 = C0 iff the two reflections tau_0 (a_i -> a_{n-i+2} on A-a_1) and
/// tau_1 (a_i -> a_{n-i} on A-a_n) are automorphisms and a_i -> a'_i is an
/// isomorphism A -> A'.
struct Prop61Report {
  std::vector<int> b0, c0;
  bool b0_eq_c0 = false;
  bool tau0_pass = false;
  bool tau1_pass = false;
  bool phibar_pass = false;
  bool equivalent = false;
};

Prop61Report prop61_check(const AbcSpec& spec);

struct StructureFItem {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string witness;  // set when the item fails, or notes vacuity
};

/// The verified decomposition extracted at an alpha-type mutual normal
/// arrow pair: the orbit A realized as A(n;B,C), the moving part X and the
/// fixed part Y, with every structural item checked against the graphs.
struct StructureFReport {
  int n = 0;
  int n0 = 0;  // from the pair classification
  std::vector<int> a_vertices;        // a_1..a_n as vertices of G
  std::vector<int> a_prime_vertices;  // a'_1..a'_n as vertices of H
  std::vector<int> b_offsets, c_offsets;
  std::vector<int> x, y, x_prime, y_prime;
  bool dashed_forward = false;   // v1 -> v2 dashed arrow present
  bool dashed_backward = false;  // v2 -> v1 dashed arrow present
  std::vector<StructureFItem> items;  // the sixteen structure checks
  bool all_pass = false;
};

StructureFReport extract_structure_f(const SimpleGraph& g, const SimpleGraph& h,
                                     const Hypomorphism& hy, int v1, int v2);
StructureFReport extract_structure_f(const SimpleGraph& g, const SimpleGraph& h,
                                     const PairMaps& pair);

std::string structure_f_to_json(const StructureFReport& r);

/// DOT export of A(n;B,C) with B-layer edges solid and C-layer edges dashed.
std::string abc_to_dot(const AbcSpec& spec, const std::string& name = "A");

}  // namespace hypograph
