#include "hypograph/abc.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hypograph {

using nlohmann::json;

namespace {

constexpr int kBlank = PartialInjection::kBlank;

std::string offsets_str(const std::vector<int>& offsets) {
  std::string out = "{";
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(offsets[i]);
  }
  return out + "}";
}

std::vector<int> normalize_offsets(std::vector<int> offsets, int n, const char* which) {
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
  for (int d : offsets)
    if (d < 1 || d > n - 1)
      throw GraphError(std::string(which) + " offset " + std::to_string(d) +
                       " outside 1.." + std::to_string(n - 1));
  return offsets;
}

bool contains(const std::vector<int>& sorted, int d) {
  return std::binary_search(sorted.begin(), sorted.end(), d);
}

}  // namespace

AbcSpec make_abc_spec(int n, std::vector<int> b_offsets, std::vector<int> c_offsets) {
  if (n < 3) throw GraphError("A(n;B,C) requires n >= 3, got " + std::to_string(n));
  if (n > kMaxOrder) throw GraphError("n exceeds the supported maximum");
  AbcSpec spec;
  spec.n = n;
  spec.b_offsets = normalize_offsets(std::move(b_offsets), n, "B");
  spec.c_offsets = normalize_offsets(std::move(c_offsets), n, "C");
  return spec;
}

bool abc_edge(const AbcSpec& spec, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == j) return false;
  int d = j - i;
  return (i % 2 == 1) ? contains(spec.b_offsets, d) : contains(spec.c_offsets, d);
}

SimpleGraph build_abc(const AbcSpec& spec) {
  int n = spec.n;
  std::vector<std::pair<int, int>> edges;
  for (int b : spec.b_offsets)
    for (int i = 1; i + b <= n; i += 2) edges.emplace_back(i - 1, i - 1 + b);
  for (int c : spec.c_offsets)
    for (int i = 2; i + c <= n; i += 2) edges.emplace_back(i - 1, i - 1 + c);
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
  return make_graph(n, edges, std::move(labels));
}

SimpleGraph build_bar_abc(const BarAbcSpec& spec) {
  int n = spec.base.n;
  if (spec.p < 1 || spec.p >= n)
    throw GraphError("bar removal start p must satisfy 1 <= p < n, got " +
                     std::to_string(spec.p));
  SimpleGraph a = build_abc(spec.base);
  std::vector<bool> removed(n + 1, false);
  for (int i = spec.p; i <= n; i += 2) removed[i] = true;
  std::vector<int> keep;  // 1-based positions kept
  for (int i = 1; i <= n; ++i)
    if (!removed[i]) keep.push_back(i);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t u = 0; u < keep.size(); ++u)
    for (std::size_t v = u + 1; v < keep.size(); ++v)
      if (a.edge(keep[u] - 1, keep[v] - 1))
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  std::vector<std::string> labels;
  for (int i : keep) labels.push_back("a" + std::to_string(i));
  return make_graph(static_cast<int>(keep.size()), edges, std::move(labels));
}

BetaGamma beta_gamma(const AbcSpec& spec) {
  BetaGamma bg;
  for (int b : spec.b_offsets) ((spec.n - b) % 2 == 1 ? bg.beta : bg.beta_prime)++;
  for (int c : spec.c_offsets) ((spec.n - c) % 2 == 1 ? bg.gamma : bg.gamma_prime)++;
  return bg;
}

std::pair<SimpleGraph, SimpleGraph> companion(const AbcSpec& spec) {
  SimpleGraph a = build_abc(spec);
  AbcSpec swapped{spec.n, spec.c_offsets, spec.b_offsets};
  SimpleGraph raw = build_abc(swapped);  // b_1..b_n numbering
  int n = spec.n;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (raw.edge(n - 1 - i, n - 1 - j)) edges.emplace_back(i, j);
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("a'" + std::to_string(i));
  return {std::move(a), make_graph(n, edges, std::move(labels))};
}

namespace {

// Verifies that a partial map preserves and reflects adjacency between two
// graphs on every pair of its domain.
bool check_partial_iso(const SimpleGraph& from, const SimpleGraph& to,
                       const PartialInjection& map, std::string& failure) {
  for (int x = 0; x < from.order(); ++x) {
    if (!map.defined(x)) continue;
    for (int y = x + 1; y < from.order(); ++y) {
      if (!map.defined(y)) continue;
      if (from.edge(x, y) != to.edge(map.apply(x), map.apply(y))) {
        failure = "adjacency differs on pair (" + std::to_string(x) + "," + std::to_string(y) +
                  ")";
        return false;
      }
    }
  }
  return true;
}

CheckedMap checked(const std::string& name, const SimpleGraph& from, const SimpleGraph& to,
                   const PartialInjection& map) {
  CheckedMap c{name, map, false, {}};
  c.pass = check_partial_iso(from, to, map, c.failure);
  return c;
}

}  // namespace

Lemma12Report lemma12_check(const AbcSpec& spec) {
  auto [a, ap] = companion(spec);
  int n = spec.n;

  PartialInjection psi(n, n), psi_prime(n, n), phi1(n, n), phi2(n, n);
  for (int i = 3; i <= n; ++i) psi.set(i - 1, i - 3);
  for (int i = 3; i <= n; ++i) psi_prime.set(i - 1, i - 3);
  for (int i = 2; i <= n; ++i) phi1.set(i - 1, n - i + 1);
  for (int i = 1; i <= n - 1; ++i) phi2.set(i - 1, n - i - 1);

  Lemma12Report report;
  report.psi = checked("Psi", a, a, psi);
  report.psi_prime = checked("Psi'", ap, ap, psi_prime);
  report.phi1 = checked("phi_1", a, ap, phi1);
  report.phi2 = checked("phi_2", a, ap, phi2);
  report.all_pass =
      report.psi.pass && report.psi_prime.pass && report.phi1.pass && report.phi2.pass;
  return report;
}

HamiltonReport hamilton_check(const AbcSpec& spec) {
  auto [a, ap] = companion(spec);
  HamiltonReport r;
  r.a_path = true;
  r.a_prime_path = true;
  for (int i = 0; i + 1 < spec.n; ++i) {
    if (!a.edge(i, i + 1)) r.a_path = false;
    if (!ap.edge(i, i + 1)) r.a_prime_path = false;
  }
  r.offsets_present = contains(spec.b_offsets, 1) && contains(spec.c_offsets, 1);
  r.equivalent = (r.a_path == r.a_prime_path) && (r.a_prime_path == r.offsets_present);
  return r;
}

Lemma57Report lemma57_check(const AbcSpec& spec) {
  auto [a, ap] = companion(spec);
  int n = spec.n;
  Lemma57Report r;
  r.bg = beta_gamma(spec);
  r.parity_equal = r.bg.beta == r.bg.gamma;
  r.edges_a = a.edge_count();
  r.edges_a_prime = ap.edge_count();
  r.deg_a1 = a.degree(0);
  r.deg_an = a.degree(n - 1);
  r.deg_ap1 = ap.degree(0);
  r.deg_apn = ap.degree(n - 1);
  r.boundary_equal =
      r.edges_a == r.edges_a_prime && r.deg_a1 == r.deg_ap1 && r.deg_an == r.deg_apn;
  r.equivalent = r.parity_equal == r.boundary_equal;
  int size_b = static_cast<int>(spec.b_offsets.size());
  int size_c = static_cast<int>(spec.c_offsets.size());
  r.closed_forms_ok = r.deg_a1 == size_b && r.deg_an == r.bg.beta + r.bg.gamma_prime &&
                      r.deg_apn == size_c && r.deg_ap1 == r.bg.gamma + r.bg.beta_prime;
  return r;
}

Prop61Report prop61_check(const AbcSpec& spec) {
  auto [a, ap] = companion(spec);
  int n = spec.n;
  Prop61Report r;
  for (int b : spec.b_offsets)
    if ((n - b) % 2 == 1) r.b0.push_back(b);
  for (int c : spec.c_offsets)
    if ((n - c) % 2 == 1) r.c0.push_back(c);
  r.b0_eq_c0 = r.b0 == r.c0;

  PartialInjection tau0(n, n), tau1(n, n);
  for (int i = 2; i <= n; ++i) tau0.set(i - 1, n - i + 1);
  for (int i = 1; i <= n - 1; ++i) tau1.set(i - 1, n - i - 1);
  std::string ignored;
  r.tau0_pass = check_partial_iso(a, a, tau0, ignored);
  r.tau1_pass = check_partial_iso(a, a, tau1, ignored);

  std::vector<int> ident(n);
  for (int i = 0; i < n; ++i) ident[i] = i;
  r.phibar_pass = is_isomorphism(a, ap, VertexMap{n, n, ident});

  r.equivalent = r.b0_eq_c0 == (r.tau0_pass && r.tau1_pass && r.phibar_pass);
  return r;
}

namespace {

// Orbit classification of a vertex under a partial injection psi whose
// undefined points are exactly `targets`: hits a target (part of the orbit
// core), is fixed, or moves forever off the targets.
enum class OrbitClass { core, fixed, moving };

OrbitClass orbit_class(const PartialInjection& psi, std::uint64_t target_mask, int x) {
  if ((target_mask >> x) & 1u) return OrbitClass::core;
  if (psi.apply(x) == x) return OrbitClass::fixed;
  int y = x;
  while (true) {
    y = psi.apply(y);
    if (y == kBlank) return OrbitClass::core;  // stepped onto a target's undefined point
    if ((target_mask >> y) & 1u) return OrbitClass::core;
    if (y == x) return OrbitClass::moving;
  }
}

struct ItemSink {
  std::vector<StructureFItem>& items;

  void add(int id, const std::string& name, bool pass, std::string witness = {}) {
    items.push_back({id, name, pass, std::move(witness)});
  }
};

}  // namespace

StructureFReport extract_structure_f(const SimpleGraph& g, const SimpleGraph& h,
                                     const PairMaps& pair) {
  auto cls = classify_pair(g, h, pair);  // also enforces the mutual normal arrows
  if (cls.kind != CycleType::alpha) {
    throw GraphError("pair (" + std::to_string(pair.v1) + "," + std::to_string(pair.v2) +
                     ") is beta-type: " + (cls.witness ? cls.witness->detail : ""));
  }

  StructureFReport r;
  r.n0 = cls.n0;
  ItemSink sink{r.items};

  // The orbit sequence a_1 = v1, a_2 = phi1^{-1}(v2'), a_{m+2} = Psi^{-1}(a_m)
  // with Psi = phi2^{-1} o phi1.
  auto psi_inv = [&](int x) { return pair.phi1.apply_inv(pair.phi2.apply(x)); };
  std::vector<std::vector<int>> threads(2);
  threads[0].push_back(pair.v1);
  threads[1].push_back(pair.phi1.apply_inv(pair.fv2));
  for (auto& thread : threads) {
    while (thread.back() != kBlank) thread.push_back(psi_inv(thread.back()));
    thread.pop_back();  // drop the blank
  }
  std::vector<int> seq;
  for (std::size_t s = 0;; ++s) {
    bool any = false;
    for (int par = 0; par < 2; ++par) {
      if (s < threads[par].size()) {
        // a gap would mean the interleaving is not a prefix; noted below
        seq.push_back(threads[par][s]);
        any = true;
      }
    }
    if (!any) break;
  }
  bool prefix_ok = true;
  {
    std::size_t na = threads[0].size(), nb = threads[1].size();
    prefix_ok = (na == nb) || (na == nb + 1);
  }
  int n = static_cast<int>(seq.size());
  r.n = n;
  r.a_vertices = seq;

  sink.add(1, "orbit length n >= 3", n >= 3 && prefix_ok && n == cls.n0,
           !prefix_ok ? "defined orbit entries are not a prefix"
           : n != cls.n0
               ? "orbit length " + std::to_string(n) + " differs from n0 " + std::to_string(cls.n0)
           : n < 3 ? "orbit length " + std::to_string(n) : "");

  std::set<int> a_set(seq.begin(), seq.end());
  // Forward orbit decomposition of V(G) under Psi.
  std::vector<int> psi_fwd(g.order(), kBlank);
  for (int x = 0; x < g.order(); ++x) psi_fwd[x] = pair.phi2.apply_inv(pair.phi1.apply(x));
  PartialInjection psi = PartialInjection::from_forward(psi_fwd, g.order());
  std::uint64_t g_targets = 0;
  g_targets |= std::uint64_t{1} << pair.v1;
  int a2 = pair.phi1.apply_inv(pair.fv2);
  if (a2 != kBlank) g_targets |= std::uint64_t{1} << a2;
  std::set<int> orbit_core;
  for (int x = 0; x < g.order(); ++x) {
    switch (orbit_class(psi, g_targets, x)) {
      case OrbitClass::core:
        orbit_core.insert(x);
        break;
      case OrbitClass::fixed:
        r.y.push_back(x);
        break;
      case OrbitClass::moving:
        r.x.push_back(x);
        break;
    }
  }
  sink.add(2, "A is an n-vertex full subgraph",
           static_cast<int>(a_set.size()) == n && orbit_core == a_set,
           static_cast<int>(a_set.size()) != n ? "orbit sequence repeats a vertex"
           : orbit_core != a_set ? "Psi-orbit core differs from the orbit sequence"
                                 : "");

  // Mirrored data on the H side.
  std::vector<int> aprime(n, kBlank);
  aprime[0] = pair.fv1;
  for (int i = 2; i <= n; ++i) aprime[i - 1] = pair.phi1.apply(seq[n - i + 1]);
  r.a_prime_vertices = aprime;
  std::set<int> ap_set(aprime.begin(), aprime.end());

  std::vector<int> psip_fwd(h.order(), kBlank);
  for (int x = 0; x < h.order(); ++x) psip_fwd[x] = pair.phi2.apply(pair.phi1.apply_inv(x));
  PartialInjection psi_prime = PartialInjection::from_forward(psip_fwd, h.order());
  std::uint64_t h_targets = 0;
  h_targets |= std::uint64_t{1} << pair.fv1;
  int ap2 = pair.phi1.apply(pair.v2);
  if (ap2 != kBlank) h_targets |= std::uint64_t{1} << ap2;
  std::set<int> orbit_core_p;
  for (int x = 0; x < h.order(); ++x) {
    switch (orbit_class(psi_prime, h_targets, x)) {
      case OrbitClass::core:
        orbit_core_p.insert(x);
        break;
      case OrbitClass::fixed:
        r.y_prime.push_back(x);
        break;
      case OrbitClass::moving:
        r.x_prime.push_back(x);
        break;
    }
  }
  sink.add(3, "A' is an n-vertex full subgraph",
           ap_set.count(kBlank) == 0 && static_cast<int>(ap_set.size()) == n &&
               orbit_core_p == ap_set,
           "mirrored orbit is not an n-element set matching the Psi'-orbit core");

  bool endpoints = seq.front() == pair.v1 && seq.back() == pair.v2 &&
                   aprime.front() == pair.fv1 && aprime.back() == pair.fv2;
  sink.add(4, "endpoints are v1, v2, v1', v2'", endpoints,
           endpoints ? "" : "sequence endpoints do not land on the designated vertices");

  // Offset extraction: for each d, the odd-start and even-start pattern edges
  // must be uniformly present or uniformly absent.
  bool mixed = false;
  std::string mixed_witness;
  for (int d = 1; d <= n - 1 && !mixed; ++d) {
    for (int parity = 1; parity <= 2; ++parity) {
      int present = 0, total = 0;
      for (int i = parity; i + d <= n; i += 2) {
        ++total;
        if (g.edge(seq[i - 1], seq[i + d - 1])) ++present;
      }
      if (total == 0) continue;
      if (present == total) {
        (parity == 1 ? r.b_offsets : r.c_offsets).push_back(d);
      } else if (present != 0) {
        mixed = true;
        mixed_witness = "offset " + std::to_string(d) + " (" +
                        (parity == 1 ? "odd" : "even") + " starts) has " +
                        std::to_string(present) + "/" + std::to_string(total) +
                        " pattern edges";
        break;
      }
    }
  }

  bool item5 = !mixed && n >= 3;
  std::string item5_witness = mixed ? mixed_witness : "";
  if (item5) {
    AbcSpec extracted = make_abc_spec(n, r.b_offsets, r.c_offsets);
    for (int i = 1; i <= n && item5; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (g.edge(seq[i - 1], seq[j - 1]) != abc_edge(extracted, i, j)) {
          item5 = false;
          item5_witness = "A edge (" + std::to_string(i) + "," + std::to_string(j) +
                          ") breaks the offset pattern";
          break;
        }
        // A' follows A(n;C,B) under the reversed numbering a'_i = b_{n-i+1}.
        int rev_lo = n - j + 1;
        bool expected = (rev_lo % 2 == 1) ? contains(extracted.c_offsets, j - i)
                                          : contains(extracted.b_offsets, j - i);
        if (h.edge(aprime[i - 1], aprime[j - 1]) != expected) {
          item5 = false;
          item5_witness = "A' edge (" + std::to_string(i) + "," + std::to_string(j) +
                          ") breaks the swapped offset pattern";
          break;
        }
      }
    }
  }
  sink.add(5, "A = A(n;B,C) and A' = A(n;C,B)", item5, item5_witness);

  BetaGamma bg{};
  bool item6 = false;
  if (item5 && n >= 3) {
    AbcSpec extracted = make_abc_spec(n, r.b_offsets, r.c_offsets);
    bg = beta_gamma(extracted);
    item6 = contains(extracted.c_offsets, 1) && bg.beta == bg.gamma;
  }
  sink.add(6, "1 in C and beta = gamma", item6,
           item6 ? ""
                 : "C = " + offsets_str(r.c_offsets) + ", beta = " + std::to_string(bg.beta) +
                       ", gamma = " + std::to_string(bg.gamma));

  r.dashed_forward = !h.edge(pair.fv1, pair.fv2) && a2 != kBlank && g.edge(pair.v1, a2);
  int pre_v1 = pair.phi2.apply_inv(pair.fv1);
  r.dashed_backward =
      !h.edge(pair.fv2, pair.fv1) && pre_v1 != kBlank && g.edge(pair.v2, pre_v1);
  bool hamilton_applies = (n % 2 == 1) || (r.dashed_forward && r.dashed_backward);
  bool item7 = true;
  std::string item7_witness = "hypothesis not applicable";
  if (hamilton_applies) {
    item7_witness.clear();
    for (int i = 0; i + 1 < n; ++i) {
      if (!g.edge(seq[i], seq[i + 1])) {
        item7 = false;
        item7_witness = "a-sequence misses edge at position " + std::to_string(i + 1);
      }
      if (!h.edge(aprime[i], aprime[i + 1])) {
        item7 = false;
        item7_witness = "a'-sequence misses edge at position " + std::to_string(i + 1);
      }
    }
    if (item7 && !contains(r.b_offsets, 1)) {
      item7 = false;
      item7_witness = "1 not in extracted B";
    }
  }
  sink.add(7, "Hamilton path clause", item7, item7_witness);

  // Items 8/9: the shift isomorphisms on the whole of G and H.
  auto shift_check = [&](const SimpleGraph& side, const PartialInjection& shift,
                         const std::vector<int>& order_seq, std::string& witness) {
    for (int x = 0; x < side.order(); ++x) {
      if (!shift.defined(x)) continue;
      for (int y = x + 1; y < side.order(); ++y) {
        if (!shift.defined(y)) continue;
        if (side.edge(x, y) != side.edge(shift.apply(x), shift.apply(y))) {
          witness = "adjacency differs on (" + std::to_string(x) + "," + std::to_string(y) + ")";
          return false;
        }
      }
    }
    for (int i = 3; i <= static_cast<int>(order_seq.size()); ++i) {
      if (shift.apply(order_seq[i - 1]) != order_seq[i - 3]) {
        witness = "shift does not step the orbit sequence at position " + std::to_string(i);
        return false;
      }
    }
    return true;
  };
  std::string w8, w9;
  bool item8 = shift_check(g, psi, seq, w8);
  sink.add(8, "Psi shift isomorphism on G", item8, w8);
  bool item9 = shift_check(h, psi_prime, aprime, w9);
  sink.add(9, "Psi' shift isomorphism on H", item9, w9);

  auto set_of = [](const std::vector<int>& v) { return std::set<int>(v.begin(), v.end()); };
  std::set<int> xy = set_of(r.x);
  for (int v : r.y) xy.insert(v);
  std::set<int> xyp = set_of(r.x_prime);
  for (int v : r.y_prime) xyp.insert(v);

  bool item10 = true;
  for (int v : xy)
    if (!xy.count(psi.apply(v))) item10 = false;
  sink.add(10, "X u Y is Psi-invariant", item10,
           item10 ? "" : "Psi leaves the complement of A");
  bool item11 = true;
  for (int v : xyp)
    if (!xyp.count(psi_prime.apply(v))) item11 = false;
  sink.add(11, "X' u Y' is Psi'-invariant", item11,
           item11 ? "" : "Psi' leaves the complement of A'");

  // Restriction isomorphism checks for both card maps on X u Y, X and Y.
  auto restriction_ok = [&](const PartialInjection& phi, const std::set<int>& from,
                            const std::set<int>& onto, std::string& witness) {
    std::set<int> image;
    for (int v : from) {
      int w = phi.apply(v);
      if (w == kBlank || !onto.count(w)) {
        witness = "image of " + std::to_string(v) + " leaves the target set";
        return false;
      }
      image.insert(w);
    }
    if (image.size() != onto.size()) {
      witness = "restriction is not onto";
      return false;
    }
    for (int u : from)
      for (int v : from) {
        if (u >= v) continue;
        if (g.edge(u, v) != h.edge(phi.apply(u), phi.apply(v))) {
          witness = "adjacency differs on (" + std::to_string(u) + "," + std::to_string(v) + ")";
          return false;
        }
      }
    return true;
  };
  auto both_restrict = [&](const std::set<int>& from, const std::set<int>& onto,
                           std::string& witness) {
    return restriction_ok(pair.phi1, from, onto, witness) &&
           restriction_ok(pair.phi2, from, onto, witness);
  };
  std::string w12, w13, w14;
  sink.add(12, "X u Y ~ X' u Y' by phi_v1 and phi_v2", both_restrict(xy, xyp, w12), w12);
  sink.add(13, "X ~ X' by phi_v1 and phi_v2",
           both_restrict(set_of(r.x), set_of(r.x_prime), w13), w13);
  sink.add(14, "Y ~ Y' by phi_v1 and phi_v2",
           both_restrict(set_of(r.y), set_of(r.y_prime), w14), w14);

  bool item15 = true;
  for (int i = 2; i <= n; ++i)
    if (pair.phi1.apply(seq[i - 1]) != aprime[n - i + 1]) item15 = false;
  sink.add(15, "phi_v1 index formula", item15,
           item15 ? "" : "phi_v1 does not send a_i to a'_{n-i+2}");
  bool item16 = true;
  for (int i = 1; i <= n - 1; ++i)
    if (pair.phi2.apply(seq[i - 1]) != aprime[n - i - 1]) item16 = false;
  sink.add(16, "phi_v2 index formula", item16,
           item16 ? "" : "phi_v2 does not send a_i to a'_{n-i}");

  r.all_pass = true;
  for (const auto& item : r.items)
    if (!item.pass) r.all_pass = false;
  return r;
}

StructureFReport extract_structure_f(const SimpleGraph& g, const SimpleGraph& h,
                                     const Hypomorphism& hy, int v1, int v2) {
  int n = g.order();
  if (v1 < 0 || v1 >= n || v2 < 0 || v2 >= n || v1 == v2)
    throw GraphError("structure extraction needs two distinct in-range vertices");
  PairMaps pair{v1, v2, hy.f(v1), hy.f(v2), hy.phi[v1], hy.phi[v2]};
  return extract_structure_f(g, h, pair);
}

std::string structure_f_to_json(const StructureFReport& r) {
  json j;
  j["n"] = r.n;
  j["n0"] = r.n0;
  j["a_vertices"] = r.a_vertices;
  j["a_prime_vertices"] = r.a_prime_vertices;
  j["B"] = r.b_offsets;
  j["C"] = r.c_offsets;
  j["X"] = r.x;
  j["Y"] = r.y;
  j["X_prime"] = r.x_prime;
  j["Y_prime"] = r.y_prime;
  j["dashed_forward"] = r.dashed_forward;
  j["dashed_backward"] = r.dashed_backward;
  j["items"] = json::array();
  for (const auto& item : r.items) {
    json ij = {{"id", item.id}, {"name", item.name}, {"pass", item.pass}};
    if (!item.witness.empty()) ij["witness"] = item.witness;
    j["items"].push_back(ij);
  }
  j["all_pass"] = r.all_pass;
  return j.dump(2);
}

std::string abc_to_dot(const AbcSpec& spec, const std::string& name) {
  SimpleGraph a = build_abc(spec);
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < a.order(); ++v)
    out << "  n" << v << " [label=\"" << a.label(v) << "\"];\n";
  for (auto [u, v] : a.edges()) {
    bool b_layer = (u + 1) % 2 == 1;  // odd 1-based start
    out << "  n" << u << " -- n" << v;
    if (!b_layer) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hypograph
