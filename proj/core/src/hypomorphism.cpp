#include "hypograph/hypomorphism.hpp"

#include <algorithm>
#include <bit>

#include "json.hpp"

namespace hypograph {

using nlohmann::json;

Deck deck(const SimpleGraph& g) {
  if (g.order() < 2) throw GraphError("deck requires order at least 2");
  Deck d;
  d.cards.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) d.cards.push_back(canonical_key(delete_vertex(g, v).graph));
  std::sort(d.cards.begin(), d.cards.end());
  return d;
}

bool decks_equal(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() != h.order()) return false;
  return deck(g) == deck(h);
}

Hypomorphism identity_hypomorphism(const SimpleGraph& g) {
  int n = g.order();
  Hypomorphism hy;
  hy.f.source_order = hy.f.target_order = n;
  hy.f.images.resize(n);
  for (int v = 0; v < n; ++v) hy.f.images[v] = v;
  hy.phi.reserve(n);
  for (int v = 0; v < n; ++v) {
    PartialInjection p(n, n);
    for (int u = 0; u < n; ++u)
      if (u != v) p.set(u, u);
    hy.phi.push_back(std::move(p));
  }
  return hy;
}

namespace {

// Lifts an isomorphism between two compacted cards back to original vertex
// indices; the result is undefined exactly at the deleted source vertex.
PartialInjection lift_card_iso(const DeletedGraph& gcard, const DeletedGraph& hcard,
                               const VertexMap& compact) {
  PartialInjection p(static_cast<int>(gcard.old_to_new.size()),
                     static_cast<int>(hcard.old_to_new.size()));
  for (int u = 0; u < p.source_size(); ++u) {
    int cu = gcard.old_to_new[u];
    if (cu < 0) continue;
    p.set(u, hcard.new_to_old[compact(cu)]);
  }
  return p;
}

struct FSearch {
  int n;
  const std::vector<std::uint64_t>& candidates;
  std::vector<int> image;
  std::uint64_t used = 0;
  const std::function<bool(const std::vector<int>&)>& emit;
  bool stopped = false;

  void extend(int v) {
    if (stopped) return;
    if (v == n) {
      if (!emit(image)) stopped = true;
      return;
    }
    std::uint64_t mask = candidates[v] & ~used;
    while (mask && !stopped) {
      int w = std::countr_zero(mask);
      mask &= mask - 1;
      image[v] = w;
      used |= std::uint64_t{1} << w;
      extend(v + 1);
      used &= ~(std::uint64_t{1} << w);
    }
  }
};

}  // namespace

void for_each_hypomorphism(const SimpleGraph& g, const SimpleGraph& h, std::size_t limit,
                           const std::function<bool(const Hypomorphism&)>& yield) {
  int n = g.order();
  if (n != h.order())
    throw GraphError("hypomorphism search requires equal orders, got " + std::to_string(n) +
                     " and " + std::to_string(h.order()));
  if (n < 3) throw GraphError("hypomorphism search requires order at least 3");
  if (limit < 1) throw GraphError("hypomorphism limit must be at least 1");

  std::vector<DeletedGraph> gcards, hcards;
  std::vector<CanonicalKey> gkeys, hkeys;
  for (int v = 0; v < n; ++v) {
    gcards.push_back(delete_vertex(g, v));
    hcards.push_back(delete_vertex(h, v));
    gkeys.push_back(canonical_key(gcards.back().graph));
    hkeys.push_back(canonical_key(hcards.back().graph));
  }

  // f candidates: degree preserved and equal card keys.
  std::vector<std::uint64_t> candidates(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w)
      if (g.degree(v) == h.degree(w) && gkeys[v] == hkeys[w])
        candidates[v] |= std::uint64_t{1} << w;
    if (candidates[v] == 0) return;
  }

  std::size_t yielded = 0;
  bool stop = false;
  std::function<bool(const std::vector<int>&)> emit = [&](const std::vector<int>& f_images) {
    // Independent phi choices per vertex, given f.
    std::vector<std::vector<PartialInjection>> choices(n);
    for (int v = 0; v < n; ++v) {
      const auto& gc = gcards[v];
      const auto& hc = hcards[f_images[v]];
      for_each_isomorphism(gc.graph, hc.graph, [&](const VertexMap& compact) {
        choices[v].push_back(lift_card_iso(gc, hc, compact));
        return true;
      });
      if (choices[v].empty()) return true;  // no phi_v for this f; next f
    }
    Hypomorphism hy;
    hy.f = VertexMap{n, n, f_images};
    std::vector<std::size_t> index(n, 0);
    while (true) {
      hy.phi.clear();
      for (int v = 0; v < n; ++v) hy.phi.push_back(choices[v][index[v]]);
      ++yielded;
      if (!yield(hy) || yielded >= limit) {
        stop = true;
        return false;
      }
      int slot = n - 1;
      while (slot >= 0 && ++index[slot] == choices[slot].size()) index[slot--] = 0;
      if (slot < 0) break;
    }
    return true;
  };

  FSearch search{n, candidates, std::vector<int>(n, -1), 0, emit};
  search.extend(0);
  (void)stop;
}

std::vector<Hypomorphism> find_hypomorphisms(const SimpleGraph& g, const SimpleGraph& h,
                                             std::size_t limit) {
  std::vector<Hypomorphism> out;
  for_each_hypomorphism(g, h, limit, [&](const Hypomorphism& hy) {
    out.push_back(hy);
    return true;
  });
  return out;
}

HypoValidation validate_hypomorphism(const SimpleGraph& g, const SimpleGraph& h,
                                     const Hypomorphism& hy) {
  HypoValidation result;
  int n = g.order();
  if (h.order() != n) {
    result.shape_ok = false;
    result.shape_error = "graph orders differ";
    return result;
  }
  if (hy.f.source_order != n || hy.f.target_order != n ||
      static_cast<int>(hy.f.images.size()) != n) {
    result.shape_ok = false;
    result.shape_error = "f does not have the shape of a map on " + std::to_string(n) +
                         " vertices";
    return result;
  }
  if (static_cast<int>(hy.phi.size()) != n) {
    result.shape_ok = false;
    result.shape_error = "phi family has " + std::to_string(hy.phi.size()) +
                         " entries, expected " + std::to_string(n);
    return result;
  }
  for (int v = 0; v < n; ++v) {
    if (hy.phi[v].source_size() != n || hy.phi[v].target_size() != n) {
      result.shape_ok = false;
      result.shape_error = "phi[" + std::to_string(v) + "] is not over " + std::to_string(n) +
                           " vertices";
      return result;
    }
  }

  if (!hy.f.is_bijection()) {
    result.violations.push_back(
        {HypoViolation::Kind::f_not_bijective, -1, "f is not a bijection"});
  }

  for (int v = 0; v < n; ++v) {
    int fv = hy.f.images[v];
    bool fv_ok = fv >= 0 && fv < n;
    const PartialInjection& phi = hy.phi[v];

    bool domain_ok = !phi.defined(v);
    for (int u = 0; u < n && domain_ok; ++u)
      if (u != v && !phi.defined(u)) domain_ok = false;
    if (fv_ok && phi.apply_inv(fv) != PartialInjection::kBlank) domain_ok = false;
    if (!domain_ok) {
      result.violations.push_back({HypoViolation::Kind::phi_not_isomorphism, v,
                                   "phi[" + std::to_string(v) +
                                       "] is not a bijection from V-{v} onto V'-{f(v)}"});
      continue;
    }

    bool iso_ok = true;
    for (int u = 0; u < n && iso_ok; ++u) {
      if (u == v) continue;
      for (int w = u + 1; w < n; ++w) {
        if (w == v) continue;
        if (g.edge(u, w) != h.edge(phi.apply(u), phi.apply(w))) {
          result.violations.push_back(
              {HypoViolation::Kind::phi_not_isomorphism, v,
               "phi[" + std::to_string(v) + "] breaks adjacency on pair (" + std::to_string(u) +
                   "," + std::to_string(w) + ")"});
          iso_ok = false;
          break;
        }
      }
    }

    if (fv_ok && g.degree(v) != h.degree(fv)) {
      result.violations.push_back({HypoViolation::Kind::degree_mismatch, v,
                                   "deg(" + std::to_string(v) + ")=" +
                                       std::to_string(g.degree(v)) + " but deg(f(v))=" +
                                       std::to_string(h.degree(fv))});
    }
  }
  return result;
}

std::string hypomorphism_to_json(const Hypomorphism& hy) {
  json j;
  j["f"] = hy.f.images;
  json phi = json::object();
  int n = hy.f.source_order;
  for (int v = 0; v < n; ++v) {
    std::vector<int> images;
    for (int u = 0; u < n; ++u)
      if (u != v) images.push_back(hy.phi[v].apply(u));
    phi[std::to_string(v)] = images;
  }
  j["phi"] = phi;
  return j.dump(2);
}

Hypomorphism hypomorphism_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GraphError(std::string("invalid hypomorphism JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("f") || !j["f"].is_array())
    throw GraphError("hypomorphism JSON needs an array field \"f\"");
  Hypomorphism hy;
  int n = static_cast<int>(j["f"].size());
  hy.f.source_order = hy.f.target_order = n;
  for (const auto& x : j["f"]) {
    if (!x.is_number_integer()) throw GraphError("hypomorphism JSON: f entries must be integers");
    hy.f.images.push_back(x.get<int>());
  }
  if (!j.contains("phi") || !j["phi"].is_object())
    throw GraphError("hypomorphism JSON needs an object field \"phi\"");
  hy.phi.assign(n, PartialInjection(n, n));
  for (int v = 0; v < n; ++v) {
    auto it = j["phi"].find(std::to_string(v));
    if (it == j["phi"].end() || !it->is_array() || static_cast<int>(it->size()) != n - 1)
      throw GraphError("hypomorphism JSON: phi[\"" + std::to_string(v) + "\"] must list " +
                       std::to_string(n - 1) + " images");
    int idx = 0;
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      const auto& x = (*it)[idx++];
      if (!x.is_number_integer())
        throw GraphError("hypomorphism JSON: phi entries must be integers");
      hy.phi[v].set(u, x.get<int>());
    }
  }
  return hy;
}

}  // namespace hypograph
