#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "pathdiv/digraph.hpp"
#include "pathdiv/disjoint.hpp"
#include "pathdiv/errors.hpp"
#include "pathdiv/ingest.hpp"

namespace pathdiv {

// Ordered-pair table over the roster: entry (source, origin) counts the
// arc-disjoint paths source may use to reach origin. Defined for all
// ordered pairs with source != origin.
class adp_matrix {
public:
  explicit adp_matrix(std::vector<as_number> roster) : roster_(std::move(roster)) {
    std::sort(roster_.begin(), roster_.end());
    roster_.erase(std::unique(roster_.begin(), roster_.end()), roster_.end());
    if (roster_.size() < 2)
      throw graph_error("matrix roster needs at least 2 members");
    cells_.assign(roster_.size() * roster_.size(), 0);
  }

  const std::vector<as_number>& roster() const noexcept { return roster_; }

  std::size_t at(as_number source, as_number origin) const {
    return cells_[offset(source, origin)];
  }

  void set(as_number source, as_number origin, std::size_t value) {
    cells_[offset(source, origin)] = value;
  }

  std::size_t pair_count() const noexcept {
    return roster_.size() * (roster_.size() - 1);
  }

private:
  std::size_t offset(as_number source, as_number origin) const {
    if (source == origin)
      throw graph_error("matrix diagonal is undefined at " + as_label(source));
    return index_of(source) * roster_.size() + index_of(origin);
  }

  std::size_t index_of(as_number v) const {
    const auto it = std::lower_bound(roster_.begin(), roster_.end(), v);
    if (it == roster_.end() || *it != v)
      throw graph_error(as_label(v) + " is not a roster member");
    return static_cast<std::size_t>(it - roster_.begin());
  }

  std::vector<as_number> roster_;
  std::vector<std::size_t> cells_;
};

// Per-origin summary over the other roster members. The average keeps its
// exact numerator/denominator so rendering can round precisely.
struct diversity_stats {
  as_number origin;
  std::uint64_t sum = 0;
  std::size_t count = 0;
  std::size_t min = 0;
  std::size_t max = 0;

  double avg() const noexcept {
    return count == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(count);
  }
};

// Frequency of each disjoint-path count over all ordered pairs.
struct histogram {
  std::map<std::size_t, std::size_t> counts;
};

namespace detail {

template <typename Metric>
adp_matrix compute_pair_matrix(const digraph_map& digraphs, unsigned threads,
                               Metric metric) {
  std::vector<as_number> roster;
  roster.reserve(digraphs.size());
  for (const auto& [origin, ad] : digraphs) {
    roster.push_back(origin);
    for (const auto& entry : digraphs)
      if (!ad.graph().has_vertex(entry.first))
        throw graph_error("inconsistent roster: digraph of " + as_label(origin) +
                          " lacks vertex " + as_label(entry.first));
  }
  adp_matrix matrix(roster);
  const std::size_t n = roster.size();

  // One column per origin; columns are independent, so workers pull whole
  // columns and write disjoint slots of the buffer.
  std::vector<std::size_t> buffer(n * n, 0);
  const auto fill_column = [&](std::size_t col) {
    const as_number origin = roster[col];
    const digraph reach_graph = converse(digraphs.at(origin).graph());
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col) continue;
      buffer[row * n + col] = metric(reach_graph, roster[row], origin);
    }
  };

  if (threads <= 1) {
    for (std::size_t col = 0; col < n; ++col) fill_column(col);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(n));
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t col = next.fetch_add(1); col < n; col = next.fetch_add(1))
          fill_column(col);
      });
    for (std::thread& t : pool) t.join();
  }

  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t col = 0; col < n; ++col)
      if (row != col) matrix.set(roster[row], roster[col], buffer[row * n + col]);
  return matrix;
}

}  // namespace detail

// Entry (j, i) = adp from j to i in the destination digraph of i.
inline adp_matrix compute_adp_matrix(const digraph_map& digraphs,
                                     unsigned threads = 1) {
  return detail::compute_pair_matrix(
      digraphs, threads,
      [](const digraph& g, as_number s, as_number t) { return adp(g, s, t); });
}

// Same table shape with internally-disjoint counts.
inline adp_matrix compute_idp_matrix(const digraph_map& digraphs,
                                     unsigned threads = 1) {
  return detail::compute_pair_matrix(
      digraphs, threads,
      [](const digraph& g, as_number s, as_number t) { return idp(g, s, t); });
}

// Mean/min/max over the column of the given origin; unreachable pairs
// count as zero.
inline diversity_stats compute_stats(const adp_matrix& m, as_number origin) {
  if (!std::binary_search(m.roster().begin(), m.roster().end(), origin))
    throw graph_error(as_label(origin) + " is not a roster member");
  diversity_stats stats{origin, 0, 0, 0, 0};
  bool first = true;
  for (as_number source : m.roster()) {
    if (source == origin) continue;
    const std::size_t value = m.at(source, origin);
    stats.sum += value;
    ++stats.count;
    stats.min = first ? value : std::min(stats.min, value);
    stats.max = first ? value : std::max(stats.max, value);
    first = false;
  }
  return stats;
}

inline histogram compute_histogram(const adp_matrix& m) {
  histogram h;
  for (as_number source : m.roster())
    for (as_number origin : m.roster())
      if (source != origin) ++h.counts[m.at(source, origin)];
  return h;
}

inline std::size_t histogram_total(const histogram& h) {
  std::size_t total = 0;
  for (const auto& [value, count] : h.counts) total += count;
  return total;
}

// Ordered pairs with more than one arc-disjoint path: the headline count
// of diversity a single-path selection cannot use.
inline std::size_t diversity_excess(const histogram& h) {
  std::size_t total = 0;
  for (const auto& [value, count] : h.counts)
    if (value >= 2) total += count;
  return total;
}

namespace detail {

// Exactly two decimals, round-half-up, via integer arithmetic:
// floor(sum/count * 100 + 1/2) = floor((200*sum + count) / (2*count)).
inline std::string format_avg(std::uint64_t sum, std::uint64_t count) {
  const std::uint64_t cents = count == 0 ? 0 : (200 * sum + count) / (2 * count);
  std::string frac = std::to_string(cents % 100);
  if (frac.size() == 1) frac = "0" + frac;
  return std::to_string(cents / 100) + "." + frac;
}

}  // namespace detail

inline std::string write_stats_csv(const std::vector<diversity_stats>& rows) {
  std::string out = "as,avg,min,max\n";
  for (const diversity_stats& row : rows) {
    out += std::to_string(row.origin.value()) + ",";
    out += detail::format_avg(row.sum, row.count) + ",";
    out += std::to_string(row.min) + ",";
    out += std::to_string(row.max) + "\n";
  }
  return out;
}

// Header row names origins, one data row per source AS, both ascending;
// diagonal cells stay empty.
inline std::string write_matrix_csv(const adp_matrix& m) {
  std::string out;
  for (as_number origin : m.roster()) out += "," + std::to_string(origin.value());
  out += "\n";
  for (as_number source : m.roster()) {
    out += std::to_string(source.value());
    for (as_number origin : m.roster()) {
      out += ",";
      if (source != origin) out += std::to_string(m.at(source, origin));
    }
    out += "\n";
  }
  return out;
}

// Rows ascending by value; zero-count gaps between the lowest and highest
// observed values are filled in.
inline std::string write_histogram_csv(const histogram& h) {
  std::string out = "adp,count\n";
  if (h.counts.empty()) return out;
  const std::size_t lo = h.counts.begin()->first;
  const std::size_t hi = h.counts.rbegin()->first;
  for (std::size_t value = lo; value <= hi; ++value) {
    const auto it = h.counts.find(value);
    const std::size_t count = it == h.counts.end() ? 0 : it->second;
    out += std::to_string(value) + "," + std::to_string(count) + "\n";
  }
  return out;
}

// Adjacency matrix in the same CSV layout; cells are 0/1.
inline std::string write_adjacency_csv(const adjacency_matrix& m) {
  std::string out;
  for (as_number v : m.vertices) out += "," + std::to_string(v.value());
  out += "\n";
  for (std::size_t r = 0; r < m.vertices.size(); ++r) {
    out += std::to_string(m.vertices[r].value());
    for (std::size_t c = 0; c < m.vertices.size(); ++c)
      out += "," + std::to_string(m.cells[r][c]);
    out += "\n";
  }
  return out;
}

}  // namespace pathdiv
