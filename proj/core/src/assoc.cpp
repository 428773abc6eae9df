#include "hypograph/assoc.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hypograph {

using nlohmann::json;

namespace {

constexpr int kBlank = PartialInjection::kBlank;

bool normal_arrow(const SimpleGraph& g, const SimpleGraph& h, const Hypomorphism& hy, int a,
                  int b) {
  if (a == b) return false;
  return !g.edge(a, b) && h.edge(hy.f(a), hy.phi[a].apply(b));
}

bool dashed_arrow(const SimpleGraph& g, const SimpleGraph& h, const Hypomorphism& hy, int a,
                  int b) {
  if (a == b) return false;
  return !h.edge(hy.f(a), hy.f(b)) && g.edge(a, hy.phi[a].apply_inv(hy.f(b)));
}

}  // namespace

int AssociatedDigraph::normal_out_degree(int v) const { return std::popcount(normal[v]); }
int AssociatedDigraph::dashed_out_degree(int v) const { return std::popcount(dashed[v]); }

AssociatedDigraph build_assoc(const SimpleGraph& g, const SimpleGraph& h,
                              const Hypomorphism& hy) {
  auto validation = validate_hypomorphism(g, h, hy);
  if (!validation.valid()) {
    std::string msg = "invalid hypomorphism: ";
    if (!validation.shape_ok)
      msg += validation.shape_error;
    else
      msg += validation.violations.front().detail;
    throw GraphError(msg);
  }
  AssociatedDigraph d;
  d.order = g.order();
  d.g = g;
  d.h = h;
  d.hy = hy;
  d.normal.assign(d.order, 0);
  d.dashed.assign(d.order, 0);
  for (int a = 0; a < d.order; ++a) {
    for (int b = 0; b < d.order; ++b) {
      if (a == b) continue;
      if (normal_arrow(g, h, hy, a, b)) d.normal[a] |= std::uint64_t{1} << b;
      if (dashed_arrow(g, h, hy, a, b)) d.dashed[a] |= std::uint64_t{1} << b;
    }
  }
  return d;
}

std::vector<ArrowBalanceEntry> arrow_balance(const AssociatedDigraph& d) {
  std::vector<ArrowBalanceEntry> out;
  out.reserve(d.order);
  for (int v = 0; v < d.order; ++v) {
    int nd = d.normal_out_degree(v);
    int dd = d.dashed_out_degree(v);
    out.push_back({v, nd, dd, nd == dd});
  }
  return out;
}

std::vector<int> extendable_vertices(const AssociatedDigraph& d) {
  std::vector<int> out;
  for (int v = 0; v < d.order; ++v) {
    if (d.normal_out_degree(v) == 0) {
      if (d.dashed_out_degree(v) != 0)
        throw std::logic_error("arrow balance broken at vertex " + std::to_string(v));
      out.push_back(v);
    }
  }
  return out;
}

ExtendResult extend_iso(const SimpleGraph& g, const SimpleGraph& h, const Hypomorphism& hy,
                        int v) {
  int n = g.order();
  if (v < 0 || v >= n)
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(n));
  ExtendResult result;
  for (int w = 0; w < n; ++w) {
    if (normal_arrow(g, h, hy, v, w)) {
      result.blocking_arrow = {v, w};
      return result;
    }
  }
  VertexMap map{n, n, std::vector<int>(n)};
  for (int u = 0; u < n; ++u) map.images[u] = (u == v) ? hy.f(v) : hy.phi[v].apply(u);
  result.verified = is_isomorphism(g, h, map);
  result.iso = std::move(map);
  return result;
}

ExtendResult extend_iso(const AssociatedDigraph& d, int v) {
  return extend_iso(d.g, d.h, d.hy, v);
}

bool is_alternating_cycle(const AssociatedDigraph& d, const AlternatingCycle& cycle) {
  int twok = 2 * cycle.k;
  if (cycle.k < 1 || static_cast<int>(cycle.vertices.size()) != twok) return false;
  for (int i = 0; i < twok; ++i) {
    int a = cycle.vertices[i];
    int b = cycle.vertices[(i + 1) % twok];
    if (a < 0 || a >= d.order || b < 0 || b >= d.order) return false;
    bool ok = (i % 2 == 0) ? d.has_normal(a, b) : d.has_dashed(a, b);
    if (!ok) return false;
  }
  return true;
}

namespace {

// A cycle sequence is emitted only through its lexicographically least even
// rotation, so each cycle appears exactly once and in deterministic order.
bool is_canonical_rotation(const std::vector<int>& seq) {
  int twok = static_cast<int>(seq.size());
  std::vector<int> rotated(twok);
  for (int shift = 2; shift < twok; shift += 2) {
    for (int i = 0; i < twok; ++i) rotated[i] = seq[(i + shift) % twok];
    if (rotated < seq) return false;
  }
  return true;
}

struct CycleSearch {
  const AssociatedDigraph& d;
  int twok;
  std::size_t cap;
  std::vector<int> seq;
  std::vector<AlternatingCycle>& out;
  bool truncated = false;

  void extend(int pos) {
    if (truncated) return;
    if (pos == twok) {
      if (d.has_dashed(seq[twok - 1], seq[0]) && is_canonical_rotation(seq)) {
        if (out.size() >= cap) {
          truncated = true;
          return;
        }
        out.push_back({twok / 2, seq});
      }
      return;
    }
    std::uint64_t mask =
        (pos % 2 == 1) ? d.normal[seq[pos - 1]] : d.dashed[seq[pos - 1]];
    while (mask && !truncated) {
      int w = std::countr_zero(mask);
      mask &= mask - 1;
      seq[pos] = w;
      extend(pos + 1);
    }
  }
};

}  // namespace

CycleEnumeration find_alternating_cycles(const AssociatedDigraph& d, int max_k,
                                         std::size_t cap) {
  if (max_k < 1) throw GraphError("max_k must be at least 1");
  CycleEnumeration result;
  for (int k = 1; k <= max_k; ++k) {
    CycleSearch search{d, 2 * k, cap, std::vector<int>(2 * k, -1), result.cycles};
    for (int start = 0; start < d.order && !search.truncated; ++start) {
      search.seq[0] = start;
      search.extend(1);
    }
    if (search.truncated) {
      result.truncated = true;
      break;
    }
  }
  return result;
}

namespace {

// Cycle-aligned view of the maps the sequence machinery consumes: for each
// position j, the cycle vertex, its f-image and its card isomorphism.
struct CycleMaps {
  std::vector<int> vs;
  std::vector<int> f;
  std::vector<const PartialInjection*> phi;

  int size() const { return static_cast<int>(vs.size()); }

  CycleMaps rotated(int shift) const {
    CycleMaps out;
    int m = size();
    for (int i = 0; i < m; ++i) {
      int j = (i + shift) % m;
      out.vs.push_back(vs[j]);
      out.f.push_back(f[j]);
      out.phi.push_back(phi[j]);
    }
    return out;
  }
};

struct ChainStep {
  const PartialInjection* map;
  bool forward;
};

int apply_chain(const std::vector<ChainStep>& chain, int value) {
  for (const auto& step : chain) {
    if (value == kBlank) return kBlank;
    value = step.forward ? step.map->apply(value) : step.map->apply_inv(value);
  }
  return value;
}

PartialInjection compose_chain(const std::vector<ChainStep>& chain, int domain_size,
                               int target_size) {
  std::vector<int> fwd(domain_size, kBlank);
  for (int x = 0; x < domain_size; ++x) fwd[x] = apply_chain(chain, x);
  return PartialInjection::from_forward(fwd, target_size);
}

// Base entries 1..2k of the primed sequence: entry 1 is f(v_1); entry m is
// the prefix composition phi_{v1} o phi_{v2}^{-1} o ... (m-1 maps) applied to
// v_m (m even) or f(v_m) (m odd).
std::vector<int> base_primed(const CycleMaps& cm) {
  int twok = cm.size();
  std::vector<int> base(twok, kBlank);
  base[0] = cm.f[0];
  for (int m = 2; m <= twok; ++m) {
    std::vector<ChainStep> chain;
    for (int j = m - 1; j >= 1; --j) chain.push_back({cm.phi[j - 1], j % 2 == 1});
    int seed = (m % 2 == 0) ? cm.vs[m - 1] : cm.f[m - 1];
    base[m - 1] = apply_chain(chain, seed);
  }
  return base;
}

PartialInjection psi0_primed(const CycleMaps& cm, int g_order, int h_order) {
  int twok = cm.size();
  std::vector<ChainStep> chain;
  for (int j = twok; j >= 1; --j) chain.push_back({cm.phi[j - 1], j % 2 == 1});
  (void)g_order;
  return compose_chain(chain, h_order, h_order);
}

// Base entries of the unprimed sequence: entry 1 is v_2; entry m applies the
// prefix starting with phi_{v2}^{-1} to v_{m+1} (m odd) or f(v_{m+1}) (m
// even), indices cyclic.
std::vector<int> base_unprimed(const CycleMaps& cm) {
  int twok = cm.size();
  std::vector<int> base(twok, kBlank);
  base[0] = cm.vs[1];
  for (int m = 2; m <= twok; ++m) {
    std::vector<ChainStep> chain;
    for (int j = m - 1; j >= 1; --j) chain.push_back({cm.phi[j % twok], j % 2 == 0});
    int seed_pos = m % twok;
    int seed = (m % 2 == 1) ? cm.vs[seed_pos] : cm.f[seed_pos];
    base[m - 1] = apply_chain(chain, seed);
  }
  return base;
}

PartialInjection psi0_unprimed(const CycleMaps& cm, int g_order, int h_order) {
  int twok = cm.size();
  std::vector<ChainStep> chain;
  for (int j = twok; j >= 1; --j) chain.push_back({cm.phi[j % twok], j % 2 == 0});
  (void)h_order;
  return compose_chain(chain, g_order, g_order);
}

// Extends the 2k base entries along their threads: entry r, r+2k, r+4k, ...
// evolves under psi. A thread stops at its first blank, or at the first
// revisited value, which for a partial injection must be the thread's first
// value and certifies the thread never blanks.
TypeSequence extend_threads(const std::vector<int>& base, const PartialInjection& psi) {
  int twok = static_cast<int>(base.size());
  TypeSequence seq;
  std::vector<std::vector<int>> threads(twok);
  std::vector<int> defined_steps(twok, 0);

  for (int r = 0; r < twok; ++r) {
    int value = base[r];
    threads[r].push_back(value);
    if (value == kBlank) continue;
    std::uint64_t seen = std::uint64_t{1} << value;
    int steps = 1;
    while (true) {
      value = psi.apply(value);
      threads[r].push_back(value);
      if (value == kBlank) break;
      if (seen & (std::uint64_t{1} << value)) {
        if (!seq.periodic) {
          seq.periodic = true;
          seq.periodic_thread = r + 1;
          seq.period = steps;
        }
        break;
      }
      seen |= std::uint64_t{1} << value;
      ++steps;
    }
    defined_steps[r] = steps;
  }

  int horizon = 0;
  for (int r = 0; r < twok; ++r)
    horizon = std::max(horizon, static_cast<int>(threads[r].size() - 1) * twok + r + 1);
  seq.entries.assign(horizon, kBlank);
  for (int r = 0; r < twok; ++r) {
    const auto& th = threads[r];
    for (int s = 0; s < static_cast<int>(th.size()); ++s) seq.entries[s * twok + r] = th[s];
  }

  for (int r = 0; r < twok; ++r) {
    seq.defined_count += defined_steps[r];
    if (defined_steps[r] > 0)
      seq.max_defined = std::max(seq.max_defined, (defined_steps[r] - 1) * twok + r + 1);
  }
  seq.suffix_form = !seq.periodic && seq.defined_count == seq.max_defined;
  return seq;
}

SequenceTable compute_table(const SimpleGraph& g, const SimpleGraph& h, const CycleMaps& cm) {
  SequenceTable table;
  table.k = cm.size() / 2;
  for (int t = 0; t < table.k; ++t) {
    CycleMaps rot = cm.rotated(2 * t);
    table.primed.push_back(extend_threads(base_primed(rot), psi0_primed(rot, g.order(), h.order())));
    table.unprimed.push_back(
        extend_threads(base_unprimed(rot), psi0_unprimed(rot, g.order(), h.order())));
  }
  return table;
}

CycleMaps cycle_maps_from(const Hypomorphism& hy, const std::vector<int>& vertices) {
  CycleMaps cm;
  for (int v : vertices) {
    cm.vs.push_back(v);
    cm.f.push_back(hy.f(v));
    cm.phi.push_back(&hy.phi[v]);
  }
  return cm;
}

CycleMaps cycle_maps_from(const PairMaps& pair) {
  CycleMaps cm;
  cm.vs = {pair.v1, pair.v2};
  cm.f = {pair.fv1, pair.fv2};
  cm.phi = {&pair.phi1, &pair.phi2};
  return cm;
}

std::string seq_name(bool primed, int t) {
  return (primed ? "primed[" : "unprimed[") + std::to_string(t) + "]";
}

CycleClassification classify_table(SequenceTable table, const CycleMaps& cm) {
  CycleClassification result;
  result.table = std::move(table);
  const SequenceTable& tab = result.table;
  int k = tab.k;
  int twok = 2 * k;

  auto beta = [&](BetaWitness::Kind kind, std::string detail) {
    result.kind = CycleType::beta;
    result.witness = BetaWitness{kind, std::move(detail)};
  };

  for (int t = 0; t < k; ++t) {
    for (bool primed : {true, false}) {
      const TypeSequence& s = primed ? tab.primed[t] : tab.unprimed[t];
      if (s.periodic) {
        beta(BetaWitness::Kind::periodic_never_blank,
             seq_name(primed, t) + " thread " + std::to_string(s.periodic_thread) +
                 " revisits its first value with period " + std::to_string(s.period));
        return result;
      }
      if (!s.suffix_form) {
        beta(BetaWitness::Kind::blank_structure,
             seq_name(primed, t) + " has " + std::to_string(s.defined_count) +
                 " defined entries but the last defined index is " +
                 std::to_string(s.max_defined) + "; blanks are not a clean suffix");
        return result;
      }
    }
  }

  int n0 = tab.primed[0].max_defined;
  for (int t = 0; t < k; ++t) {
    for (bool primed : {true, false}) {
      const TypeSequence& s = primed ? tab.primed[t] : tab.unprimed[t];
      if (s.max_defined != n0) {
        beta(BetaWitness::Kind::blank_structure,
             "no common n0: primed[0] blanks after " + std::to_string(n0) + " while " +
                 seq_name(primed, t) + " blanks after " + std::to_string(s.max_defined));
        return result;
      }
    }
  }

  for (int t = 0; t < k; ++t) {
    int expected_primed = cm.f[(2 * t - 1 + twok) % twok];
    int actual_primed = tab.primed[t].entries[n0 - 1];
    if (actual_primed != expected_primed) {
      beta(BetaWitness::Kind::terminal_mismatch,
           seq_name(true, t) + " ends at vertex " + std::to_string(actual_primed) +
               " instead of " + std::to_string(expected_primed));
      return result;
    }
    int expected_unprimed = cm.vs[2 * t];
    int actual_unprimed = tab.unprimed[t].entries[n0 - 1];
    if (actual_unprimed != expected_unprimed) {
      beta(BetaWitness::Kind::terminal_mismatch,
           seq_name(false, t) + " ends at vertex " + std::to_string(actual_unprimed) +
               " instead of " + std::to_string(expected_unprimed));
      return result;
    }
  }

  result.kind = CycleType::alpha;
  result.n0 = n0;
  return result;
}

void require_cycle(const SimpleGraph& g, const SimpleGraph& h, const Hypomorphism& hy,
                   const AlternatingCycle& cycle) {
  int twok = 2 * cycle.k;
  if (cycle.k < 1 || static_cast<int>(cycle.vertices.size()) != twok)
    throw GraphError("malformed alternating cycle");
  for (int i = 0; i < twok; ++i) {
    int a = cycle.vertices[i];
    int b = cycle.vertices[(i + 1) % twok];
    bool ok = (i % 2 == 0) ? normal_arrow(g, h, hy, a, b) : dashed_arrow(g, h, hy, a, b);
    if (!ok)
      throw GraphError("sequence positions " + std::to_string(i + 1) + "," +
                       std::to_string(i + 2) + " are not joined by the required arrow");
  }
}

}  // namespace

SequenceTable type_sequences(const SimpleGraph& g, const SimpleGraph& h, const Hypomorphism& hy,
                             const AlternatingCycle& cycle) {
  require_cycle(g, h, hy, cycle);
  return compute_table(g, h, cycle_maps_from(hy, cycle.vertices));
}

SequenceTable type_sequences(const SimpleGraph& g, const SimpleGraph& h, const PairMaps& pair) {
  return compute_table(g, h, cycle_maps_from(pair));
}

CycleClassification classify_cycle(const SimpleGraph& g, const SimpleGraph& h,
                                   const Hypomorphism& hy, const AlternatingCycle& cycle) {
  require_cycle(g, h, hy, cycle);
  CycleMaps cm = cycle_maps_from(hy, cycle.vertices);
  return classify_table(compute_table(g, h, cm), cm);
}

CycleClassification classify_pair(const SimpleGraph& g, const SimpleGraph& h,
                                  const Hypomorphism& hy, int v1, int v2) {
  if (!normal_arrow(g, h, hy, v1, v2) || !normal_arrow(g, h, hy, v2, v1))
    throw GraphError("pair (" + std::to_string(v1) + "," + std::to_string(v2) +
                     ") does not carry mutual normal arrows");
  CycleMaps cm = cycle_maps_from(hy, {v1, v2});
  return classify_table(compute_table(g, h, cm), cm);
}

CycleClassification classify_pair(const SimpleGraph& g, const SimpleGraph& h,
                                  const PairMaps& pair) {
  bool fwd = !g.edge(pair.v1, pair.v2) && h.edge(pair.fv1, pair.phi1.apply(pair.v2));
  bool bwd = !g.edge(pair.v2, pair.v1) && h.edge(pair.fv2, pair.phi2.apply(pair.v1));
  if (!fwd || !bwd)
    throw GraphError("pair (" + std::to_string(pair.v1) + "," + std::to_string(pair.v2) +
                     ") does not carry mutual normal arrows");
  CycleMaps cm = cycle_maps_from(pair);
  return classify_table(compute_table(g, h, cm), cm);
}

TrichotomyReport classify_trichotomy(const SimpleGraph& g, const SimpleGraph& h,
                                     const Hypomorphism& hy, int max_k, std::size_t cycle_cap) {
  AssociatedDigraph d = build_assoc(g, h, hy);
  TrichotomyReport r;
  r.max_k = max_k;

  r.extendable = extendable_vertices(d);
  r.clause_extendable = !r.extendable.empty();
  if (r.clause_extendable) {
    auto ext = extend_iso(d, r.extendable.front());
    if (ext.iso && ext.verified) r.extended_witness = *ext.iso;
  }

  for (int a = 0; a < d.order; ++a) {
    for (int b = a + 1; b < d.order; ++b) {
      if (d.has_normal(a, b) && d.has_normal(b, a)) {
        r.pairs.push_back({a, b, classify_pair(g, h, hy, a, b), classify_pair(g, h, hy, b, a)});
      }
    }
  }
  r.clause_mutual_pair = !r.pairs.empty();

  auto enumeration = find_alternating_cycles(d, max_k, cycle_cap);
  r.truncated = enumeration.truncated;
  r.cycles_enumerated = enumeration.cycles.size();
  for (const auto& cycle : enumeration.cycles) {
    auto c = classify_cycle(g, h, hy, cycle);
    if (c.kind == CycleType::alpha)
      ++r.alpha_cycles;
    else
      ++r.beta_cycles;
  }
  r.clause_all_beta = r.alpha_cycles == 0;

  if (!r.any_clause()) throw std::logic_error("trichotomy failed: no clause holds");
  return r;
}

std::string assoc_to_dot(const AssociatedDigraph& d, bool overlay_g_edges,
                         const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int v = 0; v < d.order; ++v)
    out << "  n" << v << " [label=\"" << d.g.label(v) << "\"];\n";
  for (int a = 0; a < d.order; ++a)
    for (int b = 0; b < d.order; ++b)
      if (d.has_normal(a, b)) out << "  n" << a << " -> n" << b << ";\n";
  for (int a = 0; a < d.order; ++a)
    for (int b = 0; b < d.order; ++b)
      if (d.has_dashed(a, b)) out << "  n" << a << " -> n" << b << " [style=dashed];\n";
  if (overlay_g_edges) {
    for (auto [u, v] : d.g.edges())
      out << "  n" << u << " -> n" << v << " [dir=none, color=gray];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

json sequence_json(const TypeSequence& s) {
  json j;
  j["entries"] = json::array();
  for (int v : s.entries) {
    if (v == kBlank)
      j["entries"].push_back(nullptr);
    else
      j["entries"].push_back(v);
  }
  j["periodic"] = s.periodic;
  if (s.periodic) {
    j["periodic_thread"] = s.periodic_thread;
    j["period"] = s.period;
  }
  j["defined_count"] = s.defined_count;
  j["max_defined"] = s.max_defined;
  j["suffix_form"] = s.suffix_form;
  return j;
}

json table_json(const SequenceTable& t) {
  json j;
  j["k"] = t.k;
  j["primed"] = json::array();
  j["unprimed"] = json::array();
  for (const auto& s : t.primed) j["primed"].push_back(sequence_json(s));
  for (const auto& s : t.unprimed) j["unprimed"].push_back(sequence_json(s));
  return j;
}

const char* witness_kind_name(BetaWitness::Kind kind) {
  switch (kind) {
    case BetaWitness::Kind::periodic_never_blank:
      return "periodic_never_blank";
    case BetaWitness::Kind::blank_structure:
      return "blank_structure";
    case BetaWitness::Kind::terminal_mismatch:
      return "terminal_mismatch";
  }
  return "?";
}

json classification_json(const CycleClassification& c) {
  json j;
  j["type"] = c.kind == CycleType::alpha ? "alpha" : "beta";
  if (c.kind == CycleType::alpha) j["n0"] = c.n0;
  if (c.witness) {
    j["witness"] = {{"kind", witness_kind_name(c.witness->kind)},
                    {"detail", c.witness->detail}};
  }
  j["table"] = table_json(c.table);
  return j;
}

}  // namespace

std::string assoc_to_json(const AssociatedDigraph& d) {
  json j;
  j["order"] = d.order;
  j["normal"] = json::array();
  j["dashed"] = json::array();
  for (int a = 0; a < d.order; ++a)
    for (int b = 0; b < d.order; ++b) {
      if (d.has_normal(a, b)) j["normal"].push_back({a, b});
      if (d.has_dashed(a, b)) j["dashed"].push_back({a, b});
    }
  j["balance"] = json::array();
  for (const auto& e : arrow_balance(d)) {
    j["balance"].push_back({{"vertex", e.vertex},
                            {"normal_out", e.normal_out},
                            {"dashed_out", e.dashed_out},
                            {"equal", e.equal}});
  }
  return j.dump(2);
}

std::string classification_to_json(const CycleClassification& c) {
  return classification_json(c).dump(2);
}

std::string trichotomy_to_json(const TrichotomyReport& r) {
  json j;
  j["clauses"] = {{"extendable_vertex", r.clause_extendable},
                  {"mutual_normal_pair", r.clause_mutual_pair},
                  {"all_cycles_beta", r.clause_all_beta}};
  j["extendable"] = r.extendable;
  if (r.extended_witness) j["extended_witness"] = r.extended_witness->images;
  j["pairs"] = json::array();
  for (const auto& p : r.pairs) {
    j["pairs"].push_back({{"v1", p.v1},
                          {"v2", p.v2},
                          {"forward", classification_json(p.forward)},
                          {"backward", classification_json(p.backward)}});
  }
  j["cycles"] = {{"enumerated", r.cycles_enumerated},
                 {"alpha", r.alpha_cycles},
                 {"beta", r.beta_cycles},
                 {"max_k", r.max_k},
                 {"truncated", r.truncated}};
  return j.dump(2);
}

}  // namespace hypograph
