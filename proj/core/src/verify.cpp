#include "hypograph/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "hypograph/assoc.hpp"
#include "hypograph/enumerate.hpp"
#include "hypograph/hypomorphism.hpp"
#include "json.hpp"

namespace hypograph {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct PairTask {
  int n;
  int g_index, h_index;
  const SimpleGraph* g;
  const SimpleGraph* h;
};

struct PairResult {
  VerifyCounts counts;
  std::vector<Violation> violations;
  std::vector<PairCoverage> capped;
};

void check_hypomorphism(const PairTask& task, const Hypomorphism& hy,
                        const VerifyOptions& opts, PairResult& out, bool& cycles_truncated) {
  const SimpleGraph& g = *task.g;
  const SimpleGraph& h = *task.h;
  int n = g.order();
  auto violation = [&](const std::string& check, const std::string& detail) {
    out.violations.push_back(
        {check, task.n, task.g_index, task.h_index, detail, hypomorphism_to_json(hy)});
  };

  auto validation = validate_hypomorphism(g, h, hy);
  if (!validation.valid()) {
    violation("hypomorphism-validation",
              validation.shape_ok ? validation.violations.front().detail
                                  : validation.shape_error);
    return;
  }

  AssociatedDigraph d = build_assoc(g, h, hy);

  // Per-arrow non-edge conditions, re-derived from the graphs.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (d.has_normal(a, b) && g.edge(a, b))
        violation("arrow-nonedge", "normal arrow on an edge of G at (" + std::to_string(a) +
                                       "," + std::to_string(b) + ")");
      if (d.has_dashed(a, b) && h.edge(hy.f(a), hy.f(b)))
        violation("arrow-nonedge", "dashed arrow on an edge of H at (" + std::to_string(a) +
                                       "," + std::to_string(b) + ")");
    }
  }

  for (const auto& entry : arrow_balance(d)) {
    if (!entry.equal)
      violation("arrow-balance",
                "vertex " + std::to_string(entry.vertex) + " has " +
                    std::to_string(entry.normal_out) + " normal but " +
                    std::to_string(entry.dashed_out) + " dashed out-arrows");
  }

  // Extension equivalence, both directions, via a direct isomorphism test
  // independent of the arrow bookkeeping.
  for (int v = 0; v < n; ++v) {
    VertexMap candidate{n, n, std::vector<int>(n)};
    for (int u = 0; u < n; ++u) candidate.images[u] = (u == v) ? hy.f(v) : hy.phi[v].apply(u);
    bool ext_ok = is_isomorphism(g, h, candidate);
    bool no_arrows = d.normal_out_degree(v) == 0;
    if (ext_ok != no_arrows)
      violation("extension-equivalence",
                "vertex " + std::to_string(v) + ": extension " +
                    (ext_ok ? "succeeds" : "fails") + " but normal out-degree is " +
                    std::to_string(d.normal_out_degree(v)));
    auto ext = extend_iso(d, v);
    if (no_arrows != ext.iso.has_value() || (ext.iso.has_value() && !ext.verified))
      violation("extension-equivalence",
                "extend_iso disagrees with the arrow criterion at vertex " + std::to_string(v));
  }

  bool clause_i = !extendable_vertices(d).empty();
  if (clause_i) ++out.counts.clause_extendable;

  // Mutual normal arrow pairs, each orientation classified; alpha ones must
  // satisfy the full structure extraction.
  bool clause_ii = false;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!d.has_normal(a, b) || !d.has_normal(b, a)) continue;
      clause_ii = true;
      for (auto [v1, v2] : {std::pair{a, b}, std::pair{b, a}}) {
        auto cls = classify_pair(g, h, hy, v1, v2);
        if (cls.kind != CycleType::alpha) continue;
        ++out.counts.alpha_pairs;
        auto report = extract_structure_f(g, h, hy, v1, v2);
        ++out.counts.structure_extractions;
        if (!report.all_pass) {
          for (const auto& item : report.items)
            if (!item.pass)
              violation("structure-f", "pair (" + std::to_string(v1) + "," +
                                           std::to_string(v2) + ") item " +
                                           std::to_string(item.id) + " [" + item.name +
                                           "]: " + item.witness);
        }
      }
    }
  }
  if (clause_ii) ++out.counts.clause_mutual_pair;

  auto enumeration = find_alternating_cycles(d, n, opts.cycle_cap);
  if (enumeration.truncated) cycles_truncated = true;
  std::size_t alpha_here = 0;
  for (const auto& cycle : enumeration.cycles) {
    auto cls = classify_cycle(g, h, hy, cycle);
    if (cls.kind == CycleType::alpha) {
      ++out.counts.alpha_cycles;
      ++alpha_here;
      int twok = 2 * cycle.k;
      for (int i = 0; i < twok; i += 2) {
        int odd = cycle.vertices[i];          // v_{2i-1}
        int even = cycle.vertices[i + 1];     // v_{2i}
        int next = cycle.vertices[(i + 2) % twok];
        if (!d.has_normal(even, odd))
          violation("alpha-reverse-arrows",
                    "alpha cycle lacks reverse normal arrow " + std::to_string(even) + "->" +
                        std::to_string(odd));
        if (!d.has_dashed(next, even))
          violation("alpha-reverse-arrows",
                    "alpha cycle lacks reverse dashed arrow " + std::to_string(next) + "->" +
                        std::to_string(even));
      }
      for (const auto& seqs : {cls.table.primed, cls.table.unprimed}) {
        for (const auto& s : seqs) {
          std::vector<int> prefix(s.entries.begin(), s.entries.begin() + cls.n0);
          std::sort(prefix.begin(), prefix.end());
          if (std::adjacent_find(prefix.begin(), prefix.end()) != prefix.end())
            violation("alpha-distinct", "alpha table entries 1..n0 repeat a vertex");
        }
      }
    } else {
      ++out.counts.beta_cycles;
    }
  }
  bool clause_iii = alpha_here == 0;
  if (clause_iii) ++out.counts.clause_all_beta;

  if (!clause_i && !enumeration.truncated && enumeration.cycles.empty())
    violation("cycle-existence",
              "no extendable vertex yet no alternating cycle with k <= " + std::to_string(n));

  if (!clause_i && !clause_ii && !clause_iii)
    violation("trichotomy", "no clause of the trichotomy holds");
}

PairResult process_pair(const PairTask& task, const VerifyOptions& opts) {
  PairResult result;
  std::size_t checked = 0;
  bool capped = false;
  bool cycles_truncated = false;
  for_each_hypomorphism(*task.g, *task.h, opts.hypo_cap, [&](const Hypomorphism& hy) {
    ++checked;
    check_hypomorphism(task, hy, opts, result, cycles_truncated);
    return true;
  });
  capped = checked >= opts.hypo_cap;
  result.counts.hypomorphisms_checked = checked;

  if (checked == 0)
    result.violations.push_back({"hypomorphism-exists", task.n, task.g_index, task.h_index,
                                 "deck-equal pair admits no hypomorphism", ""});

  // Reconstruction oracle: a deck-equal pair of class representatives must
  // be the same class.
  if (task.g_index != task.h_index && !find_isomorphism(*task.g, *task.h))
    result.violations.push_back({"reconstruction", task.n, task.g_index, task.h_index,
                                 "deck-equal representatives are not isomorphic", ""});

  if (capped || cycles_truncated)
    result.capped.push_back(
        {task.n, task.g_index, task.h_index, checked, capped, cycles_truncated});
  return result;
}

void merge_counts(VerifyCounts& into, const VerifyCounts& from) {
  into.hypomorphisms_checked += from.hypomorphisms_checked;
  into.clause_extendable += from.clause_extendable;
  into.clause_mutual_pair += from.clause_mutual_pair;
  into.clause_all_beta += from.clause_all_beta;
  into.alpha_cycles += from.alpha_cycles;
  into.beta_cycles += from.beta_cycles;
  into.alpha_pairs += from.alpha_pairs;
  into.structure_extractions += from.structure_extractions;
}

}  // namespace

VerificationReport verify_exhaustive(const VerifyOptions& opts) {
  if (opts.max_n < 3 || opts.max_n > 7)
    throw GraphError("verify supports max_n in 3..7, got " + std::to_string(opts.max_n));
  if (opts.jobs < 1) throw GraphError("jobs must be at least 1");

  VerificationReport report;
  report.scope = opts;

  auto t0 = Clock::now();
  std::vector<std::vector<SimpleGraph>> reps_by_n(opts.max_n + 1);
  std::vector<std::vector<Deck>> decks_by_n(opts.max_n + 1);
  for (int n = 3; n <= opts.max_n; ++n) {
    reps_by_n[n] = enumerate_graphs(n);
    report.counts.graphs_enumerated += reps_by_n[n].size();
    for (const auto& g : reps_by_n[n]) decks_by_n[n].push_back(deck(g));
  }

  std::vector<PairTask> tasks;
  for (int n = 3; n <= opts.max_n; ++n) {
    const auto& reps = reps_by_n[n];
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j)
        if (decks_by_n[n][i] == decks_by_n[n][j])
          tasks.push_back({n, static_cast<int>(i), static_cast<int>(j), &reps[i], &reps[j]});
  }
  report.counts.deck_equal_pairs = tasks.size();
  report.enumerate_ms = ms_since(t0);

  auto t1 = Clock::now();
  std::vector<PairResult> results(tasks.size());
  if (opts.jobs == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = process_pair(tasks[i], opts);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        results[i] = process_pair(tasks[i], opts);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < opts.jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& r : results) {
    merge_counts(report.counts, r.counts);
    report.violations.insert(report.violations.end(), r.violations.begin(), r.violations.end());
    report.capped_pairs.insert(report.capped_pairs.end(), r.capped.begin(), r.capped.end());
  }
  report.verify_ms = ms_since(t1);
  return report;
}

namespace {

json violation_json(const Violation& v) {
  json j = {{"check", v.check}, {"n", v.n}, {"detail", v.detail}};
  if (v.g_index >= 0) j["g_index"] = v.g_index;
  if (v.h_index >= 0) j["h_index"] = v.h_index;
  if (!v.witness.empty()) j["witness"] = json::parse(v.witness);
  return j;
}

}  // namespace

std::string VerificationReport::to_json(bool include_timing) const {
  json j;
  j["scope"] = {{"max_n", scope.max_n},
                {"hypo_cap", scope.hypo_cap},
                {"jobs", scope.jobs},
                {"cycle_cap", scope.cycle_cap}};
  j["counts"] = {{"graphs_enumerated", counts.graphs_enumerated},
                 {"deck_equal_pairs", counts.deck_equal_pairs},
                 {"hypomorphisms_checked", counts.hypomorphisms_checked},
                 {"clause_extendable", counts.clause_extendable},
                 {"clause_mutual_pair", counts.clause_mutual_pair},
                 {"clause_all_beta", counts.clause_all_beta},
                 {"alpha_cycles", counts.alpha_cycles},
                 {"beta_cycles", counts.beta_cycles},
                 {"alpha_pairs", counts.alpha_pairs},
                 {"structure_extractions", counts.structure_extractions}};
  j["incomplete_coverage"] = json::array();
  for (const auto& c : capped_pairs)
    j["incomplete_coverage"].push_back({{"n", c.n},
                                        {"g_index", c.g_index},
                                        {"h_index", c.h_index},
                                        {"hypos_checked", c.hypos_checked},
                                        {"hypo_capped", c.hypo_capped},
                                        {"cycles_truncated", c.cycles_truncated}});
  j["violations"] = json::array();
  for (const auto& v : violations) j["violations"].push_back(violation_json(v));
  j["pass"] = pass();
  if (include_timing)
    j["timing"] = {{"enumerate_ms", enumerate_ms}, {"verify_ms", verify_ms}};
  return j.dump(2);
}

SweepReport sweep_abc(const SweepOptions& opts) {
  if (opts.min_n < 3 || opts.max_n > 9 || opts.min_n > opts.max_n)
    throw GraphError("sweep supports 3 <= min_n <= max_n <= 9");

  SweepReport report;
  report.scope = opts;
  auto t0 = Clock::now();

  for (int n = opts.min_n; n <= opts.max_n; ++n) {
    int offset_count = n - 1;
    std::uint32_t subsets = 1u << offset_count;
    for (std::uint32_t bmask = 0; bmask < subsets; ++bmask) {
      std::vector<int> b;
      for (int d = 1; d <= offset_count; ++d)
        if ((bmask >> (d - 1)) & 1u) b.push_back(d);
      for (std::uint32_t cmask = 0; cmask < subsets; ++cmask) {
        std::vector<int> c;
        for (int d = 1; d <= offset_count; ++d)
          if ((cmask >> (d - 1)) & 1u) c.push_back(d);
        AbcSpec spec = make_abc_spec(n, b, c);
        ++report.specs_checked;

        auto spec_str = [&]() {
          std::string s = "(" + std::to_string(n) + ";{";
          for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
          s += "},{";
          for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
          return s + "})";
        };
        auto fail = [&](const std::string& check, const std::string& detail) {
          report.violations.push_back({check, n, -1, -1, spec_str() + ": " + detail, ""});
        };

        auto l12 = lemma12_check(spec);
        if (!l12.all_pass) {
          for (const auto* m : {&l12.psi, &l12.psi_prime, &l12.phi1, &l12.phi2})
            if (!m->pass) fail("lemma-shift-maps", m->name + " " + m->failure);
        }
        auto ham = hamilton_check(spec);
        if (!ham.equivalent) fail("hamilton-equivalence", "clauses disagree");
        auto l57 = lemma57_check(spec);
        if (!l57.equivalent) fail("parity-boundary-equivalence", "clauses disagree");
        if (!l57.closed_forms_ok) fail("degree-closed-forms", "closed forms broken");
        auto p61 = prop61_check(spec);
        if (!p61.equivalent) fail("symmetry-equivalence", "clauses disagree");

        BetaGamma bg = beta_gamma(spec);
        if (bg.beta == bg.gamma) {
          auto [a, ap] = companion(spec);
          if (!find_isomorphism(a, ap)) {
            report.findings.push_back({n, b, c, bg, decks_equal(a, ap)});
            if (decks_equal(a, ap))
              fail("star-pair-nonisomorphic",
                   "deck-equal companion pair is not isomorphic");
          }
        }
      }
    }
  }
  report.elapsed_ms = ms_since(t0);
  return report;
}

std::string SweepReport::to_json(bool include_timing) const {
  json j;
  j["scope"] = {{"min_n", scope.min_n}, {"max_n", scope.max_n}};
  j["specs_checked"] = specs_checked;
  j["violations"] = json::array();
  for (const auto& v : violations) j["violations"].push_back(violation_json(v));
  j["findings"] = json::array();
  for (const auto& f : findings)
    j["findings"].push_back({{"n", f.n},
                             {"B", f.b_offsets},
                             {"C", f.c_offsets},
                             {"beta", f.bg.beta},
                             {"gamma", f.bg.gamma},
                             {"decks_equal", f.decks_equal}});
  j["pass"] = pass();
  if (include_timing) j["timing"] = {{"elapsed_ms", elapsed_ms}};
  return j.dump(2);
}

}  // namespace hypograph
