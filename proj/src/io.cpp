#include "nearbound/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "nearbound/errors.hpp"

namespace nearbound::io {
namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(std::move(t));
  return out;
}

std::uint64_t parse_id(const std::string& tok, std::size_t line) {
  std::uint64_t v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  return v;
}

ParsedGraph parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = tokens(line);
    if (t.empty() || t[0] == "c") continue;
    if (t[0] == "p") {
      if (have_header) throw ParseError(lineno, "duplicate problem line");
      if (t.size() != 4 || (t[1] != "edge" && t[1] != "col"))
        throw ParseError(lineno, "malformed problem line, expected 'p edge N M'");
      n = parse_id(t[2], lineno);
      parse_id(t[3], lineno);
      if (n > std::numeric_limits<Vertex>::max()) throw ParseError(lineno, "too many vertices");
      have_header = true;
    } else if (t[0] == "e") {
      if (!have_header) throw ParseError(lineno, "edge before problem line");
      if (t.size() != 3) throw ParseError(lineno, "malformed edge line, expected 'e u v'");
      const auto u = parse_id(t[1], lineno), v = parse_id(t[2], lineno);
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(lineno, "edge references vertex outside 1.." + std::to_string(n));
      if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw ParseError(lineno, "unknown line type '" + t[0] + "'");
    }
  }
  if (!have_header) throw ParseError(lineno, "missing problem line");
  ParsedGraph out{Graph::from_edges(n, edges), {}};
  out.external_ids.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) out.external_ids[i] = i + 1;
  return out;
}

ParsedGraph parse_edgelist(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::uint64_t> ids;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto t = tokens(line);
    if (t.empty()) continue;
    if (t.size() > 2) throw ParseError(lineno, "expected 'u v' or a single vertex id");
    const auto u = parse_id(t[0], lineno);
    ids.push_back(u);
    if (t.size() == 2) {
      const auto v = parse_id(t[1], lineno);
      if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
      ids.push_back(v);
      raw.emplace_back(u, v);
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::unordered_map<std::uint64_t, Vertex> dense;
  for (std::size_t i = 0; i < ids.size(); ++i) dense.emplace(ids[i], static_cast<Vertex>(i));
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v] : raw) edges.emplace_back(dense.at(u), dense.at(v));
  return ParsedGraph{Graph::from_edges(ids.size(), edges), std::move(ids)};
}

}  // namespace

ParsedGraph parse_graph(std::istream& in, Format format) {
  return format == Format::Dimacs ? parse_dimacs(in) : parse_edgelist(in);
}

ParsedGraph parse_graph_file(const std::filesystem::path& path, Format format) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return parse_graph(in, format);
}

Format detect_format(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".col" || ext == ".clq" || ext == ".dimacs") return Format::Dimacs;
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  for (std::string line; std::getline(in, line);) {
    const auto t = tokens(line);
    if (t.empty() || t[0] == "c" || t[0][0] == '#') continue;
    return t[0] == "p" ? Format::Dimacs : Format::Edgelist;
  }
  return Format::Edgelist;
}

Format format_from_string(const std::string& name) {
  if (name == "dimacs") return Format::Dimacs;
  if (name == "edgelist") return Format::Edgelist;
  throw InputError("unknown graph format '" + name + "'");
}

std::string to_string(Format f) { return f == Format::Dimacs ? "dimacs" : "edgelist"; }

void write_graph(std::ostream& out, const Graph& g, Format format, std::span<const std::uint64_t> external_ids) {
  const auto edges = g.edges();
  if (format == Format::Dimacs) {
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return;
  }
  if (!external_ids.empty() && external_ids.size() != g.order())
    throw InputError("external id list does not match graph order");
  auto id = [&](Vertex v) { return external_ids.empty() ? std::uint64_t{v} : external_ids[v]; };
  out << "# n=" << g.order() << " m=" << g.size() << '\n';
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.neighbors(v).none()) out << id(v) << '\n';
  for (const auto& [u, v] : edges) out << id(u) << ' ' << id(v) << '\n';
}

void write_graph_file(const std::filesystem::path& path, const Graph& g, Format format,
                      std::span<const std::uint64_t> external_ids) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  write_graph(out, g, format, external_ids);
}

}  // namespace nearbound::io
