#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathdiv/digraph.hpp"
#include "pathdiv/errors.hpp"

namespace pathdiv {

// One routing-table line in AS_PATH reading order: collector-adjacent AS
// first, origin AS last. Consecutive duplicates (AS prepending) are already
// collapsed by the parser.
struct route_record {
  std::vector<as_number> path;
  bool operator==(const route_record&) const = default;
};

enum class policy_kind { imports, exports };

// "<subject> import <peer>": subject accepts announcements from peer;
// "<subject> export <peer>": subject sends announcements to peer.
struct policy_rule {
  as_number subject;
  policy_kind kind;
  as_number peer;
  bool operator==(const policy_rule&) const = default;
};

// One trace line: monitor-side AS first, destination AS last.
struct trace_record {
  std::vector<as_number> hops;
  bool operator==(const trace_record&) const = default;
};

// The fixed set of ASs under analysis.
struct roster {
  std::set<as_number> members;
  bool contains(as_number v) const { return members.count(v) != 0; }
};

struct parsed_routes {
  std::vector<route_record> records;
  std::size_t dropped_loops = 0;  // lines still repeating an AS after collapsing
};

struct parsed_traces {
  std::vector<trace_record> records;
  std::size_t dropped_loops = 0;
};

using digraph_map = std::map<as_number, announcement_digraph>;

namespace detail {

struct text_line {
  std::string_view body;
  std::size_t number;  // 1-based
};

// Non-comment, non-blank lines with their line numbers. A line whose first
// non-blank character is '#' is a comment; a trailing '\r' is ignored.
inline std::vector<text_line> content_lines(std::string_view text) {
  std::vector<text_line> lines;
  std::size_t start = 0;
  std::size_t number = 1;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#')
      lines.push_back({line, number});
    if (nl == std::string_view::npos) break;
    start = nl + 1;
    ++number;
  }
  return lines;
}

struct token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<token> split_tokens(std::string_view line) {
  std::vector<token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    tokens.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return tokens;
}

inline as_number parse_as_token(const token& tok, std::size_t line) {
  std::uint64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw parse_error("expected AS number, got '" + std::string(tok.text) + "'",
                      line, tok.column);
  if (value == 0 || value > 0xFFFFFFFFull)
    throw parse_error("AS number out of range: " + std::string(tok.text), line,
                      tok.column);
  return as_number(static_cast<std::uint32_t>(value));
}

// Parse one path line, collapsing consecutive duplicates. Second member of
// the result reports whether the collapsed path still repeats an AS.
inline std::pair<std::vector<as_number>, bool> parse_path_line(const text_line& line) {
  std::vector<as_number> path;
  for (const token& tok : split_tokens(line.body)) {
    const as_number v = parse_as_token(tok, line.number);
    if (path.empty() || path.back() != v) path.push_back(v);
  }
  const std::set<as_number> distinct(path.begin(), path.end());
  return {std::move(path), distinct.size() != path.size()};
}

// Arc (u -> v) for every consecutive pair of the propagation-order walk
// with both endpoints on the roster; an off-roster AS breaks the chain.
inline void add_propagation_arcs(std::vector<arc>& arcs,
                                 const std::vector<as_number>& propagation,
                                 const roster& ros) {
  for (std::size_t i = 0; i + 1 < propagation.size(); ++i)
    if (ros.contains(propagation[i]) && ros.contains(propagation[i + 1]))
      arcs.push_back({propagation[i], propagation[i + 1]});
}

// One announcement digraph per roster member, each spanning the whole
// roster (members without arcs stay isolated).
inline digraph_map assemble_digraphs(
    const std::map<as_number, std::vector<arc>>& arcs_by_origin, const roster& ros) {
  const std::vector<as_number> vertices(ros.members.begin(), ros.members.end());
  digraph_map result;
  for (as_number origin : ros.members) {
    const auto it = arcs_by_origin.find(origin);
    digraph g = it == arcs_by_origin.end() ? digraph(vertices, {})
                                           : digraph(vertices, it->second);
    result.emplace(origin, announcement_digraph(origin, std::move(g)));
  }
  return result;
}

}  // namespace detail

// Roster file: one AS number per non-comment line; duplicates collapse.
inline roster parse_roster(std::string_view text) {
  roster result;
  for (const detail::text_line& line : detail::content_lines(text)) {
    const auto tokens = detail::split_tokens(line.body);
    if (tokens.size() != 1)
      throw parse_error("expected one AS number per line", line.number,
                        tokens[1].column);
    result.members.insert(detail::parse_as_token(tokens[0], line.number));
  }
  if (result.members.size() < 2)
    throw format_error("roster needs at least 2 members, got " +
                       std::to_string(result.members.size()));
  return result;
}

// Routing-table file: one AS_PATH per line, origin rightmost. Lines that
// still repeat an AS after prepending collapse are dropped and tallied,
// not fatal.
inline parsed_routes parse_routes(std::string_view text) {
  parsed_routes result;
  for (const detail::text_line& line : detail::content_lines(text)) {
    auto [path, loopy] = detail::parse_path_line(line);
    if (loopy)
      ++result.dropped_loops;
    else
      result.records.push_back({std::move(path)});
  }
  return result;
}

// Policy file: "<as> import <as>" or "<as> export <as>" per line.
inline std::vector<policy_rule> parse_policies(std::string_view text) {
  std::vector<policy_rule> rules;
  for (const detail::text_line& line : detail::content_lines(text)) {
    const auto tokens = detail::split_tokens(line.body);
    if (tokens.size() != 3)
      throw parse_error("expected '<as> import <as>' or '<as> export <as>'",
                        line.number);
    const as_number subject = detail::parse_as_token(tokens[0], line.number);
    policy_kind kind;
    if (tokens[1].text == "import")
      kind = policy_kind::imports;
    else if (tokens[1].text == "export")
      kind = policy_kind::exports;
    else
      throw parse_error("unknown policy keyword '" + std::string(tokens[1].text) + "'",
                        line.number, tokens[1].column);
    const as_number peer = detail::parse_as_token(tokens[2], line.number);
    if (subject == peer)
      throw parse_error("self-policy for " + as_label(subject), line.number);
    rules.push_back({subject, kind, peer});
  }
  return rules;
}

// Trace file: same grammar as routes; destination rightmost.
inline parsed_traces parse_traces(std::string_view text) {
  parsed_traces result;
  for (const detail::text_line& line : detail::content_lines(text)) {
    auto [hops, loopy] = detail::parse_path_line(line);
    if (loopy)
      ++result.dropped_loops;
    else
      result.records.push_back({std::move(hops)});
  }
  return result;
}

// Announcement digraphs from table snapshots. Each path whose origin (the
// rightmost AS) is on the roster is reversed into propagation order and
// contributes its roster-contiguous arcs to that origin's digraph.
inline digraph_map routes_to_digraphs(const std::vector<route_record>& records,
                                      const roster& ros) {
  std::map<as_number, std::vector<arc>> arcs_by_origin;
  for (const route_record& rec : records) {
    if (rec.path.empty()) continue;
    const as_number origin = rec.path.back();
    if (!ros.contains(origin)) continue;
    std::vector<as_number> propagation(rec.path.rbegin(), rec.path.rend());
    detail::add_propagation_arcs(arcs_by_origin[origin], propagation, ros);
  }
  return detail::assemble_digraphs(arcs_by_origin, ros);
}

// Announcement digraphs from declared policies. An arc a -> b is permitted
// only when a declares the export and b the matching import; a permitted
// arc carries origin o's announcement only when that announcement can reach
// the arc's tail.
inline digraph_map policies_to_digraphs(const std::vector<policy_rule>& rules,
                                        const roster& ros) {
  std::set<std::pair<as_number, as_number>> exports;
  std::set<std::pair<as_number, as_number>> imports;
  for (const policy_rule& rule : rules) {
    if (rule.kind == policy_kind::exports)
      exports.insert({rule.subject, rule.peer});
    else
      imports.insert({rule.subject, rule.peer});
  }
  std::vector<arc> permitted;
  for (const auto& [from, to] : exports)
    if (ros.contains(from) && ros.contains(to) && imports.count({to, from}))
      permitted.push_back({from, to});

  const std::vector<as_number> vertices(ros.members.begin(), ros.members.end());
  const digraph policy_graph(vertices, permitted);
  digraph_map result;
  for (as_number origin : ros.members) {
    const std::set<as_number> reach = reachable_from(policy_graph, origin);
    std::vector<arc> arcs;
    for (const arc& a : policy_graph.arcs())
      if (reach.count(a.tail)) arcs.push_back(a);
    result.emplace(origin, announcement_digraph(origin, digraph(vertices, std::move(arcs))));
  }
  return result;
}

// Announcement digraphs from traces. A trace toward destination d walks
// the destination digraph of d, so its reverse is a propagation path in
// d's announcement digraph; the chain-break rule matches routes.
inline digraph_map traces_to_digraphs(const std::vector<trace_record>& records,
                                      const roster& ros) {
  std::map<as_number, std::vector<arc>> arcs_by_origin;
  for (const trace_record& rec : records) {
    if (rec.hops.empty()) continue;
    const as_number destination = rec.hops.back();
    if (!ros.contains(destination)) continue;
    std::vector<as_number> propagation(rec.hops.rbegin(), rec.hops.rend());
    detail::add_propagation_arcs(arcs_by_origin[destination], propagation, ros);
  }
  return detail::assemble_digraphs(arcs_by_origin, ros);
}

// Union of every source's view, per origin. Sources missing an origin
// contribute nothing to it; the result is keyed over the union of keys.
inline digraph_map merge_sources(const std::vector<digraph_map>& maps) {
  digraph_map result;
  for (const digraph_map& m : maps)
    for (const auto& [origin, ad] : m) {
      auto it = result.find(origin);
      if (it == result.end())
        result.emplace(origin, ad);
      else
        it->second = announcement_digraph(
            origin, graph_union(it->second.graph(), ad.graph()));
    }
  return result;
}

}  // namespace pathdiv
