#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pathdiv/digraph.hpp"

namespace pathdiv {

// Knobs for the synthetic topology generator.
struct syn_config {
  std::uint32_t as_count = 45;
  double provider_ratio = 0.3;     // fraction of ASs eligible to sell transit
  double peer_probability = 0.05;  // chance of a peering link per eligible pair
  std::uint64_t seed = 0;
};

// Relationship-labelled topology plus the three emitted files. The
// relationship tables let tests check valley-freeness independently of the
// emitted text.
struct syn_dataset {
  std::string roster_text;
  std::string policy_text;
  std::string routes_text;
  std::vector<as_number> as_numbers;                            // ascending
  std::vector<std::pair<as_number, as_number>> provider_links;  // (provider, customer)
  std::vector<std::pair<as_number, as_number>> peer_links;      // lower AS first
};

namespace detail {

// All randomness comes from one mt19937_64 stream consumed in a fixed
// order, so a config (seed included) pins the byte-exact output:
//   1. AS numbers: draws of 1 + (next() mod 65535), rejecting repeats,
//      until as_count distinct values exist; draw order is tier order
//      (earlier = closer to the core).
//   2. Per AS i = 1..n-1, tier order: one provider uniform over the
//      eligible earlier tiers via next() mod k; then a coin
//      (next() >> 11) * 2^-53 < 0.5 for a second provider, redrawn until
//      it differs from the first.
//   3. Per unordered pair in tier order with no provider link between
//      them: peer coin (next() >> 11) * 2^-53 < peer_probability.
struct syn_topology {
  std::vector<as_number> by_tier;  // creation order
  std::vector<std::vector<std::size_t>> providers_of;
  std::vector<std::vector<std::size_t>> customers_of;
  std::vector<std::vector<std::size_t>> peers_of;
};

inline syn_topology build_topology(const syn_config& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const auto next_unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const std::size_t n = cfg.as_count;

  syn_topology topo;
  topo.providers_of.resize(n);
  topo.customers_of.resize(n);
  topo.peers_of.resize(n);

  std::set<std::uint32_t> used;
  while (topo.by_tier.size() < n) {
    const std::uint32_t value = 1 + static_cast<std::uint32_t>(rng() % 65535);
    if (used.insert(value).second) topo.by_tier.push_back(as_number(value));
  }

  const std::size_t transit_count = std::max<std::size_t>(
      1, std::min<std::size_t>(n, static_cast<std::size_t>(cfg.provider_ratio * n + 0.5)));

  const auto attach = [&topo](std::size_t provider, std::size_t customer) {
    topo.providers_of[customer].push_back(provider);
    topo.customers_of[provider].push_back(customer);
  };
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t eligible = std::min(i, transit_count);
    const std::size_t first = rng() % eligible;
    attach(first, i);
    if (eligible >= 2 && next_unit() < 0.5) {
      std::size_t second = rng() % eligible;
      while (second == first) second = rng() % eligible;
      attach(second, i);
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& pi = topo.providers_of[i];
      const auto& pj = topo.providers_of[j];
      const bool related = std::find(pi.begin(), pi.end(), j) != pi.end() ||
                           std::find(pj.begin(), pj.end(), i) != pj.end();
      if (related) continue;
      if (next_unit() < cfg.peer_probability) {
        topo.peers_of[i].push_back(j);
        topo.peers_of[j].push_back(i);
      }
    }
  return topo;
}

enum class rel : int { customer = 0, peer = 1, provider = 2, none = 3 };

inline rel relationship(const syn_topology& topo, std::size_t of, std::size_t other) {
  const auto has = [](const std::vector<std::size_t>& xs, std::size_t v) {
    return std::find(xs.begin(), xs.end(), v) != xs.end();
  };
  if (has(topo.customers_of[of], other)) return rel::customer;
  if (has(topo.peers_of[of], other)) return rel::peer;
  if (has(topo.providers_of[of], other)) return rel::provider;
  return rel::none;
}

// Best-response propagation of one origin's announcement until a fixed
// point. Preference at each AS: routes via customers over peers over
// providers, then shortest path, then lowest next-hop AS. Export follows
// the customer/provider/peer economics: own routes and customer-learned
// routes go to everybody, the rest only to customers. Acyclic hierarchy
// plus this preference makes the iteration converge.
inline std::vector<std::vector<std::size_t>> propagate_origin(
    const syn_topology& topo, std::size_t origin) {
  const std::size_t n = topo.by_tier.size();
  std::vector<std::vector<std::size_t>> best(n);
  best[origin] = {origin};

  std::vector<std::size_t> sweep_order(n);
  for (std::size_t i = 0; i < n; ++i) sweep_order[i] = i;
  std::sort(sweep_order.begin(), sweep_order.end(), [&](std::size_t a, std::size_t b) {
    return topo.by_tier[a] < topo.by_tier[b];
  });

  const auto exports_to = [&](std::size_t from, std::size_t to) {
    if (relationship(topo, from, to) == rel::customer) return true;  // down: anything
    if (from == origin) return true;                                 // own route
    const std::vector<std::size_t>& path = best[from];
    return path.size() >= 2 && relationship(topo, from, path[1]) == rel::customer;
  };

  bool changed = true;
  std::size_t sweeps = 0;
  while (changed) {
    if (++sweeps > 4 * n + 16)
      throw std::logic_error("route propagation failed to converge");
    changed = false;
    for (std::size_t v : sweep_order) {
      if (v == origin) continue;
      std::vector<std::size_t> chosen;
      int chosen_rank = 0;
      const auto consider = [&](std::size_t u) {
        const std::vector<std::size_t>& via = best[u];
        if (via.empty() || !exports_to(u, v)) return;
        if (std::find(via.begin(), via.end(), v) != via.end()) return;
        const int rank = static_cast<int>(relationship(topo, v, u));
        if (!chosen.empty()) {
          if (rank > chosen_rank) return;
          if (rank == chosen_rank) {
            if (via.size() + 1 > chosen.size()) return;
            if (via.size() + 1 == chosen.size() && topo.by_tier[u] >= topo.by_tier[chosen[1]])
              return;
          }
        }
        chosen.assign(1, v);
        chosen.insert(chosen.end(), via.begin(), via.end());
        chosen_rank = rank;
      };
      for (std::size_t u : topo.customers_of[v]) consider(u);
      for (std::size_t u : topo.peers_of[v]) consider(u);
      for (std::size_t u : topo.providers_of[v]) consider(u);
      if (chosen != best[v]) {
        best[v] = std::move(chosen);
        changed = true;
      }
    }
  }
  return best;
}

}  // namespace detail

// Build a random customer/provider hierarchy plus peer links and emit a
// roster file, a policy file granting both directions of every adjacency,
// and a routes file with one simulated AS_PATH per (collector, origin)
// pair. Identical configs yield byte-identical outputs.
inline syn_dataset generate(const syn_config& cfg) {
  if (cfg.as_count < 2) throw std::invalid_argument("as_count must be at least 2");
  if (cfg.as_count > 32768) throw std::invalid_argument("as_count too large");
  if (!(cfg.provider_ratio > 0.0 && cfg.provider_ratio < 1.0))
    throw std::invalid_argument("provider_ratio must be inside (0, 1)");
  if (!(cfg.peer_probability >= 0.0 && cfg.peer_probability < 1.0))
    throw std::invalid_argument("peer_probability must be inside [0, 1)");

  const detail::syn_topology topo = detail::build_topology(cfg);
  const std::size_t n = topo.by_tier.size();

  syn_dataset out;
  out.as_numbers = topo.by_tier;
  std::sort(out.as_numbers.begin(), out.as_numbers.end());
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t p : topo.providers_of[c])
      out.provider_links.push_back({topo.by_tier[p], topo.by_tier[c]});
  std::sort(out.provider_links.begin(), out.provider_links.end());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : topo.peers_of[i])
      if (i < j)
        out.peer_links.push_back({std::min(topo.by_tier[i], topo.by_tier[j]),
                                  std::max(topo.by_tier[i], topo.by_tier[j])});
  std::sort(out.peer_links.begin(), out.peer_links.end());

  const std::string header_note =
      " (" + std::to_string(n) + " ASs, seed " + std::to_string(cfg.seed) + ")\n";

  out.roster_text = "# synthetic AS roster" + header_note;
  for (as_number v : out.as_numbers)
    out.roster_text += std::to_string(v.value()) + "\n";

  // Both directions of every adjacency are declared: this is the
  // destination-agnostic projection of the per-route economics, and it is
  // deliberately looser than what propagation realizes.
  std::vector<std::pair<as_number, as_number>> granted;
  for (const auto& [provider, customer] : out.provider_links) {
    granted.push_back({provider, customer});
    granted.push_back({customer, provider});
  }
  for (const auto& [a, b] : out.peer_links) {
    granted.push_back({a, b});
    granted.push_back({b, a});
  }
  std::sort(granted.begin(), granted.end());
  out.policy_text = "# synthetic policy declarations" + header_note;
  for (const auto& [from, to] : granted) {
    out.policy_text += std::to_string(from.value()) + " export " +
                       std::to_string(to.value()) + "\n";
    out.policy_text += std::to_string(to.value()) + " import " +
                       std::to_string(from.value()) + "\n";
  }

  std::vector<std::size_t> by_as(n);
  for (std::size_t i = 0; i < n; ++i) by_as[i] = i;
  std::sort(by_as.begin(), by_as.end(), [&](std::size_t a, std::size_t b) {
    return topo.by_tier[a] < topo.by_tier[b];
  });

  out.routes_text = "# synthetic table snapshots" + header_note;
  for (std::size_t origin : by_as) {
    const auto best = detail::propagate_origin(topo, origin);
    for (std::size_t collector : by_as) {
      if (collector == origin || best[collector].empty()) continue;
      std::string line;
      for (std::size_t hop : best[collector]) {
        if (!line.empty()) line += " ";
        line += std::to_string(topo.by_tier[hop].value());
      }
      out.routes_text += line + "\n";
    }
  }
  return out;
}

}  // namespace pathdiv
