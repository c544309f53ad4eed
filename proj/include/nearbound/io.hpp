#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nearbound/graph.hpp"

namespace nearbound::io {

enum class Format { Dimacs, Edgelist };

struct ParsedGraph {
  Graph graph;
  /// dense id -> id used in the file (1-based for DIMACS)
  std::vector<std::uint64_t> external_ids;
};

/// DIMACS: `c` comments, one `p edge N M` header (`p col` accepted), `e u v`
/// with 1-based ids. Edgelist: `u v` per line, or a lone `v` declaring a
/// vertex; arbitrary non-negative ids relabelled in ascending order; `#`
/// starts a comment. Duplicate edges collapse; self-loops are rejected.
ParsedGraph parse_graph(std::istream& in, Format format);
ParsedGraph parse_graph_file(const std::filesystem::path& path, Format format);

/// .col/.clq/.dimacs are DIMACS; otherwise sniff for a `p` header line.
Format detect_format(const std::filesystem::path& path);
Format format_from_string(const std::string& name);
std::string to_string(Format f);

/// Edgelist output uses `external_ids` when given and lists isolated vertices
/// on their own line; DIMACS output always uses 1..n.
void write_graph(std::ostream& out, const Graph& g, Format format, std::span<const std::uint64_t> external_ids = {});
void write_graph_file(const std::filesystem::path& path, const Graph& g, Format format,
                      std::span<const std::uint64_t> external_ids = {});

}  // namespace nearbound::io
