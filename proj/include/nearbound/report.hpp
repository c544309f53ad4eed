#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "json.hpp"
#include "nearbound/bounds.hpp"
#include "nearbound/extremal.hpp"
#include "nearbound/kernel.hpp"
#include "nearbound/oracle.hpp"
#include "nearbound/pipeline.hpp"

namespace nearbound {

using json = nlohmann::json;

/// Vertex relabelling applied on output: dense id -> external id. Empty means identity.
using IdMap = std::span<const std::uint64_t>;

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json bounds_to_json(const BoundsReport& b);
BoundsReport bounds_from_json(const json& j);

/// `removed` and `mapping` are relabelled; kernel edges stay in kernel-local ids.
json kernel_to_json(const KernelResult& k, IdMap ids = {});
KernelResult kernel_from_json(const json& j);

json decision_to_json(const Decision& d, IdMap ids = {});
Decision decision_from_json(const json& j);

json extremal_to_json(const extremal::ExtremalAnalysis& a, IdMap ids = {});
extremal::ExtremalAnalysis extremal_from_json(const json& j);

json exact_to_json(const oracle::ExactResult& r, IdMap ids = {});
oracle::ExactResult exact_from_json(const json& j);

struct InputDescriptor {
  std::string path;
  std::string format;
  std::size_t n = 0;
  std::size_t m = 0;
  friend bool operator==(const InputDescriptor&, const InputDescriptor&) = default;
};

/// Envelope printed by every CLI command.
struct RunReport {
  InputDescriptor input;
  std::string command;
  json parameters = json::object();
  json result = json::object();
  double wall_time_ms = 0.0;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

json report_to_json(const RunReport& r);
RunReport report_from_json(const json& j);

}  // namespace nearbound
