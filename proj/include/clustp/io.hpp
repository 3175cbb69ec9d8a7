#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "clustp/error.hpp"
#include "clustp/instance.hpp"
#include "clustp/report.hpp"
#include "clustp/solution.hpp"

// Text formats. Instances use a TSPLIB-flavoured keyword/section layout so
// third-party clustered data converts with a few lines of scripting:
//
//   NAME: <string>
//   TYPE: CLUSTP
//   DIMENSION: <n>
//   CLUSTERS: <k>
//   SOURCE_VERTEX: <1-based vertex id>
//   EDGE_WEIGHT_TYPE: EUC_2D | EXPLICIT
//   NODE_COORD_SECTION            (EUC_2D: n lines "<id> <x> <y>")
//   EDGE_WEIGHT_SECTION           (EXPLICIT: n-1 upper-triangle rows,
//                                  row i holds w(i,i+1)..w(i,n); INF allowed)
//   CLUSTER_SECTION               (k lines "<cluster-id> <v> <v> ... -1")
//   EOF
//
// Ids are 1-based on disk and 0-based in memory. All text is UTF-8 with LF
// line endings and '.' as the decimal separator.

namespace clustp {

// Shortest decimal form that parses back to the identical double; "INF"
// for the missing-edge sentinel.
inline std::string format_double(double v) {
  if (v == kInfiniteWeight) return "INF";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

namespace detail {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  int line_no = 0;

  // next nonempty line, stripped of surrounding whitespace and a trailing CR
  bool next(std::string_view& out) {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
      while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
        line.remove_prefix(1);
      if (!line.empty()) {
        out = line;
        return true;
      }
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError,
                "line " + std::to_string(line_no) + ": " + what);
  }
};

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long long parse_int(std::string_view tok, const LineReader& reader) {
  long long value = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(reader.line_no) +
                                            ": expected integer, got '" +
                                            std::string(tok) + "'");
  return value;
}

inline double parse_weight(std::string_view tok, const LineReader& reader) {
  if (tok == "INF") return kInfiniteWeight;
  double value = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(reader.line_no) +
                                            ": expected number, got '" +
                                            std::string(tok) + "'");
  return value;
}

}  // namespace detail

inline ClusteredInstance parse_instance(std::string_view text) {
  detail::LineReader reader{text};
  std::string name;
  long long n = -1, k = -1, source = -1;
  std::string weight_type;
  bool have_name = false, have_type = false, have_weight_type = false;

  std::string_view line;
  // keyword header, then sections in fixed order
  for (;;) {
    if (!reader.next(line)) throw Error(ErrorCode::MissingSection, "NODE_COORD_SECTION");
    if (line == "NODE_COORD_SECTION" || line == "EDGE_WEIGHT_SECTION") break;
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) reader.fail("expected 'KEY: value'");
    std::string_view key = line.substr(0, colon);
    std::string_view value = line.substr(colon + 1);
    while (!key.empty() && key.back() == ' ') key.remove_suffix(1);
    while (!value.empty() && value.front() == ' ') value.remove_prefix(1);
    if (key == "NAME") {
      name = std::string(value);
      have_name = true;
    } else if (key == "TYPE") {
      if (value != "CLUSTP") reader.fail("TYPE must be CLUSTP");
      have_type = true;
    } else if (key == "DIMENSION") {
      n = detail::parse_int(value, reader);
    } else if (key == "CLUSTERS") {
      k = detail::parse_int(value, reader);
    } else if (key == "SOURCE_VERTEX") {
      source = detail::parse_int(value, reader);
    } else if (key == "EDGE_WEIGHT_TYPE") {
      if (value != "EUC_2D" && value != "EXPLICIT")
        reader.fail("EDGE_WEIGHT_TYPE must be EUC_2D or EXPLICIT");
      weight_type = std::string(value);
      have_weight_type = true;
    } else if (key == "COMMENT") {
      // ignored
    } else {
      reader.fail("unknown keyword '" + std::string(key) + "'");
    }
  }

  if (!have_name) throw Error(ErrorCode::MissingSection, "NAME");
  if (!have_type) throw Error(ErrorCode::MissingSection, "TYPE");
  if (n < 0) throw Error(ErrorCode::MissingSection, "DIMENSION");
  if (k < 0) throw Error(ErrorCode::MissingSection, "CLUSTERS");
  if (source < 0) throw Error(ErrorCode::MissingSection, "SOURCE_VERTEX");
  if (!have_weight_type) throw Error(ErrorCode::MissingSection, "EDGE_WEIGHT_TYPE");

  const bool euclidean = weight_type == "EUC_2D";
  if (euclidean && line != "NODE_COORD_SECTION")
    reader.fail("EUC_2D instance needs NODE_COORD_SECTION");
  if (!euclidean && line != "EDGE_WEIGHT_SECTION")
    reader.fail("EXPLICIT instance needs EDGE_WEIGHT_SECTION");

  std::vector<Point2> coords;
  std::vector<std::vector<double>> weights;
  if (euclidean) {
    coords.resize(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (long long i = 0; i < n; ++i) {
      if (!reader.next(line)) reader.fail("unexpected end in NODE_COORD_SECTION");
      const auto toks = detail::split_ws(line);
      if (toks.size() != 3) reader.fail("expected '<id> <x> <y>'");
      const long long id = detail::parse_int(toks[0], reader);
      if (id < 1 || id > n) reader.fail("vertex id out of range");
      if (seen[static_cast<std::size_t>(id - 1)]) reader.fail("duplicate vertex id");
      seen[static_cast<std::size_t>(id - 1)] = 1;
      coords[static_cast<std::size_t>(id - 1)] = {detail::parse_weight(toks[1], reader),
                                                  detail::parse_weight(toks[2], reader)};
    }
  } else {
    weights.assign(static_cast<std::size_t>(n),
                   std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (long long i = 0; i + 1 < n; ++i) {
      if (!reader.next(line)) reader.fail("unexpected end in EDGE_WEIGHT_SECTION");
      const auto toks = detail::split_ws(line);
      if (static_cast<long long>(toks.size()) != n - i - 1)
        reader.fail("row " + std::to_string(i + 1) + " needs " + std::to_string(n - i - 1) +
                    " entries");
      for (long long j = i + 1; j < n; ++j) {
        const double w = detail::parse_weight(toks[static_cast<std::size_t>(j - i - 1)], reader);
        weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = w;
        weights[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = w;
      }
    }
  }

  if (!reader.next(line) || line != "CLUSTER_SECTION")
    throw Error(ErrorCode::MissingSection, "CLUSTER_SECTION");
  std::vector<std::vector<Vertex>> clusters(static_cast<std::size_t>(k));
  std::vector<char> cluster_seen(static_cast<std::size_t>(k), 0);
  for (long long c = 0; c < k; ++c) {
    if (!reader.next(line)) reader.fail("unexpected end in CLUSTER_SECTION");
    const auto toks = detail::split_ws(line);
    if (toks.size() < 3 || toks.back() != "-1")
      reader.fail("expected '<cluster-id> <v> ... -1'");
    const long long cid = detail::parse_int(toks[0], reader);
    if (cid < 1 || cid > k) reader.fail("cluster id out of range");
    if (cluster_seen[static_cast<std::size_t>(cid - 1)]) reader.fail("duplicate cluster id");
    cluster_seen[static_cast<std::size_t>(cid - 1)] = 1;
    auto& members = clusters[static_cast<std::size_t>(cid - 1)];
    for (std::size_t t = 1; t + 1 < toks.size(); ++t) {
      const long long v = detail::parse_int(toks[t], reader);
      if (v < 1 || v > n) reader.fail("cluster member out of range");
      members.push_back(static_cast<Vertex>(v - 1));
    }
  }

  if (!reader.next(line) || line != "EOF") throw Error(ErrorCode::MissingSection, "EOF");

  if (euclidean)
    return build_instance(name, std::move(coords), std::move(clusters),
                          static_cast<Vertex>(source - 1));
  return build_instance(name, std::move(weights), std::move(clusters),
                        static_cast<Vertex>(source - 1));
}

inline std::string write_instance(const ClusteredInstance& inst) {
  std::string out;
  out += "NAME: " + inst.name() + "\n";
  out += "TYPE: CLUSTP\n";
  out += "DIMENSION: " + std::to_string(inst.num_vertices()) + "\n";
  out += "CLUSTERS: " + std::to_string(inst.num_clusters()) + "\n";
  out += "SOURCE_VERTEX: " + std::to_string(inst.source() + 1) + "\n";
  if (inst.weight_kind() == WeightKind::Euclidean2D) {
    out += "EDGE_WEIGHT_TYPE: EUC_2D\n";
    out += "NODE_COORD_SECTION\n";
    for (int v = 0; v < inst.num_vertices(); ++v)
      out += std::to_string(v + 1) + " " +
             format_double(inst.coords()[static_cast<std::size_t>(v)].x) + " " +
             format_double(inst.coords()[static_cast<std::size_t>(v)].y) + "\n";
  } else {
    out += "EDGE_WEIGHT_TYPE: EXPLICIT\n";
    out += "EDGE_WEIGHT_SECTION\n";
    for (int i = 0; i + 1 < inst.num_vertices(); ++i) {
      for (int j = i + 1; j < inst.num_vertices(); ++j) {
        if (j > i + 1) out += ' ';
        out += format_double(
            inst.weights()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
      out += '\n';
    }
  }
  out += "CLUSTER_SECTION\n";
  for (int c = 0; c < inst.num_clusters(); ++c) {
    out += std::to_string(c + 1);
    for (Vertex v : inst.cluster(c)) out += " " + std::to_string(v + 1);
    out += " -1\n";
  }
  out += "EOF\n";
  return out;
}

inline std::string write_solution(const SolutionTree& tree, double cost) {
  std::string out;
  out += "NAME: " + tree.instance_name + "\n";
  out += "TYPE: CLUSTP_SOLUTION\n";
  out += "DIMENSION: " + std::to_string(tree.edges.size() + 1) + "\n";
  out += "COST: " + format_double(cost) + "\n";
  out += "LOCAL_ROOTS_SECTION\n";
  for (std::size_t c = 0; c < tree.local_roots.size(); ++c)
    out += std::to_string(c + 1) + " " + std::to_string(tree.local_roots[c] + 1) + "\n";
  out += "INTER_EDGE_SECTION\n";
  for (const EdgeRef& e : tree.inter_cluster_edges)
    out += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  out += "EDGE_SECTION\n";
  for (const EdgeRef& e : tree.edges)
    out += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  out += "EOF\n";
  return out;
}

inline SolutionTree parse_solution(std::string_view text) {
  detail::LineReader reader{text};
  SolutionTree tree;
  long long n = -1;
  bool have_name = false, have_type = false, have_cost = false;
  double cost = 0.0;

  std::string_view line;
  for (;;) {
    if (!reader.next(line)) throw Error(ErrorCode::MissingSection, "LOCAL_ROOTS_SECTION");
    if (line == "LOCAL_ROOTS_SECTION") break;
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) reader.fail("expected 'KEY: value'");
    std::string_view key = line.substr(0, colon);
    std::string_view value = line.substr(colon + 1);
    while (!key.empty() && key.back() == ' ') key.remove_suffix(1);
    while (!value.empty() && value.front() == ' ') value.remove_prefix(1);
    if (key == "NAME") {
      tree.instance_name = std::string(value);
      have_name = true;
    } else if (key == "TYPE") {
      if (value != "CLUSTP_SOLUTION") reader.fail("TYPE must be CLUSTP_SOLUTION");
      have_type = true;
    } else if (key == "DIMENSION") {
      n = detail::parse_int(value, reader);
    } else if (key == "COST") {
      cost = detail::parse_weight(value, reader);
      have_cost = true;
    } else {
      reader.fail("unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!have_name) throw Error(ErrorCode::MissingSection, "NAME");
  if (!have_type) throw Error(ErrorCode::MissingSection, "TYPE");
  if (n < 1) throw Error(ErrorCode::MissingSection, "DIMENSION");
  if (!have_cost) throw Error(ErrorCode::MissingSection, "COST");
  tree.cost_cache = cost;

  for (;;) {
    if (!reader.next(line)) throw Error(ErrorCode::MissingSection, "INTER_EDGE_SECTION");
    if (line == "INTER_EDGE_SECTION") break;
    const auto toks = detail::split_ws(line);
    if (toks.size() != 2) reader.fail("expected '<cluster-id> <vertex>'");
    const long long cid = detail::parse_int(toks[0], reader);
    const long long v = detail::parse_int(toks[1], reader);
    if (cid != static_cast<long long>(tree.local_roots.size()) + 1)
      reader.fail("cluster ids must run 1..k in order");
    if (v < 1 || v > n) reader.fail("vertex id out of range");
    tree.local_roots.push_back(static_cast<Vertex>(v - 1));
  }

  const auto parse_edge_lines = [&](std::string_view terminator,
                                    std::vector<EdgeRef>& into) {
    for (;;) {
      if (!reader.next(line))
        throw Error(ErrorCode::MissingSection, std::string(terminator));
      if (line == terminator) return;
      const auto toks = detail::split_ws(line);
      if (toks.size() != 2) reader.fail("expected '<u> <v>'");
      const long long u = detail::parse_int(toks[0], reader);
      const long long v = detail::parse_int(toks[1], reader);
      if (u < 1 || u > n || v < 1 || v > n) reader.fail("vertex id out of range");
      into.push_back(EdgeRef{static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    }
  };
  parse_edge_lines("EDGE_SECTION", tree.inter_cluster_edges);
  parse_edge_lines("EOF", tree.edges);

  if (static_cast<long long>(tree.edges.size()) != n - 1)
    throw Error(ErrorCode::SyntaxError,
                "EDGE_SECTION holds " + std::to_string(tree.edges.size()) +
                    " edges, DIMENSION implies " + std::to_string(n - 1));
  return tree;
}

inline std::string write_results_csv(std::span<const TrialReport> reports) {
  std::string out = "instance,gamma,runs,best_found,average,seconds_per_run,master_seed\n";
  for (const TrialReport& r : reports) {
    out += r.instance + "," + format_double(r.gamma) + "," + std::to_string(r.runs) + "," +
           format_double(r.best_found) + "," + format_double(r.average) + "," +
           format_fixed(r.seconds_per_run, 2) + "," + std::to_string(r.master_seed) + "\n";
  }
  return out;
}

inline std::vector<ResultsRow> parse_results_csv(std::string_view text) {
  detail::LineReader reader{text};
  std::string_view line;
  if (!reader.next(line) ||
      line != "instance,gamma,runs,best_found,average,seconds_per_run,master_seed")
    throw Error(ErrorCode::SyntaxError, "bad results CSV header");
  std::vector<ResultsRow> rows;
  while (reader.next(line)) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i)
      if (i == line.size() || line[i] == ',') {
        fields.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    if (fields.size() != 7) reader.fail("expected 7 comma-separated fields");
    ResultsRow row;
    row.instance = std::string(fields[0]);
    row.gamma = detail::parse_weight(fields[1], reader);
    row.runs = static_cast<int>(detail::parse_int(fields[2], reader));
    row.best_found = detail::parse_weight(fields[3], reader);
    row.average = detail::parse_weight(fields[4], reader);
    row.seconds_per_run = detail::parse_weight(fields[5], reader);
    row.master_seed = static_cast<std::uint64_t>(detail::parse_int(fields[6], reader));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace clustp
