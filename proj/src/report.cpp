#include "nearbound/report.hpp"

#include "nearbound/errors.hpp"

namespace nearbound {
namespace {

std::uint64_t relabel(IdMap ids, Vertex v) { return ids.empty() ? std::uint64_t{v} : ids[v]; }

json relabel_set(IdMap ids, const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(relabel(ids, v));
  return out;
}

std::vector<Vertex> set_from(const json& j) { return j.get<std::vector<Vertex>>(); }

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"m", g.size()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  return Graph::from_edges(j.at("n").get<std::size_t>(), edges);
}

json bounds_to_json(const BoundsReport& b) {
  return {{"p", b.p}, {"p1", b.p1}, {"p2", b.p2 ? json(*b.p2) : json(nullptr)}, {"wp_complement", b.wp_complement}};
}

BoundsReport bounds_from_json(const json& j) {
  BoundsReport b;
  b.p = j.at("p").get<std::size_t>();
  b.p1 = j.at("p1").get<std::size_t>();
  if (!j.at("p2").is_null()) b.p2 = j.at("p2").get<std::size_t>();
  b.wp_complement = j.at("wp_complement").get<std::size_t>();
  return b;
}

json kernel_to_json(const KernelResult& k, IdMap ids) {
  return {{"p", k.p},
          {"k", k.k},
          {"threshold", k.threshold},
          {"n0", k.n0},
          {"budget_t", k.budget_t},
          {"trivially_yes", k.trivially_yes},
          {"removed", relabel_set(ids, k.removed)},
          {"mapping", relabel_set(ids, k.mapping)},
          {"kernel", graph_to_json(k.kernel)}};
}

KernelResult kernel_from_json(const json& j) {
  KernelResult k;
  k.p = j.at("p").get<std::size_t>();
  k.k = j.at("k").get<std::size_t>();
  k.threshold = j.at("threshold").get<std::size_t>();
  k.n0 = j.at("n0").get<std::size_t>();
  k.budget_t = j.at("budget_t").get<std::int64_t>();
  k.trivially_yes = j.at("trivially_yes").get<bool>();
  k.removed = set_from(j.at("removed"));
  k.mapping = set_from(j.at("mapping"));
  k.kernel = graph_from_json(j.at("kernel"));
  return k;
}

json decision_to_json(const Decision& d, IdMap ids) {
  json cert = std::visit(
      [&](const auto& c) -> json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, BoundCertificate>)
          return {{"type", "bound"}, {"bound", c.bound}, {"value", c.value}};
        else if constexpr (std::is_same_v<T, KernelSizeCertificate>)
          return {{"type", "kernel_size"}, {"n0", c.n0}};
        else if constexpr (std::is_same_v<T, IndependentSetCertificate>)
          return {{"type", "independent_set"}, {"vertices", relabel_set(ids, c.vertices)}};
        else
          return {{"type", "exhausted_search"}, {"budget_t", c.budget_t}, {"nodes_explored", c.nodes_explored}};
      },
      d.certificate);
  return {{"answer", to_string(d.answer)},
          {"resolved_at", to_string(d.resolved_at)},
          {"p", d.p},
          {"k", d.k},
          {"target", d.p - d.k},
          {"certificate", std::move(cert)},
          {"bounds", bounds_to_json(d.bounds)},
          {"kernel", d.kernel ? kernel_to_json(*d.kernel, ids) : json(nullptr)}};
}

Decision decision_from_json(const json& j) {
  Decision d;
  d.answer = answer_from_string(j.at("answer").get<std::string>());
  d.resolved_at = resolved_at_from_string(j.at("resolved_at").get<std::string>());
  d.p = j.at("p").get<std::size_t>();
  d.k = j.at("k").get<std::size_t>();
  const json& c = j.at("certificate");
  const auto type = c.at("type").get<std::string>();
  if (type == "bound")
    d.certificate = BoundCertificate{c.at("bound").get<std::string>(), c.at("value").get<std::size_t>()};
  else if (type == "kernel_size")
    d.certificate = KernelSizeCertificate{c.at("n0").get<std::size_t>()};
  else if (type == "independent_set")
    d.certificate = IndependentSetCertificate{set_from(c.at("vertices"))};
  else if (type == "exhausted_search")
    d.certificate =
        ExhaustedSearchCertificate{c.at("budget_t").get<std::int64_t>(), c.at("nodes_explored").get<std::uint64_t>()};
  else
    throw InputError("unknown certificate type '" + type + "'");
  d.bounds = bounds_from_json(j.at("bounds"));
  if (!j.at("kernel").is_null()) d.kernel = kernel_from_json(j.at("kernel"));
  return d;
}

json extremal_to_json(const extremal::ExtremalAnalysis& a, IdMap ids) {
  return {{"p", a.p},
          {"k", a.k},
          {"i_set", relabel_set(ids, a.i_set)},
          {"r_set", relabel_set(ids, a.r_set)},
          {"r", a.r},
          {"e_star", a.e_star},
          {"r_edge_count", a.r_edge_count},
          {"family_tag", extremal::to_string(a.family_tag)}};
}

extremal::ExtremalAnalysis extremal_from_json(const json& j) {
  extremal::ExtremalAnalysis a;
  a.p = j.at("p").get<std::size_t>();
  a.k = j.at("k").get<std::size_t>();
  a.i_set = set_from(j.at("i_set"));
  a.r_set = set_from(j.at("r_set"));
  a.r = j.at("r").get<std::size_t>();
  a.e_star = j.at("e_star").get<std::size_t>();
  a.r_edge_count = j.at("r_edge_count").get<std::size_t>();
  a.family_tag = extremal::tag_from_string(j.at("family_tag").get<std::string>());
  return a;
}

json exact_to_json(const oracle::ExactResult& r, IdMap ids) {
  return {{"value", r.value}, {"witness", relabel_set(ids, r.witness)}};
}

oracle::ExactResult exact_from_json(const json& j) {
  return {j.at("value").get<std::size_t>(), set_from(j.at("witness"))};
}

json report_to_json(const RunReport& r) {
  return {{"input", {{"path", r.input.path}, {"format", r.input.format}, {"n", r.input.n}, {"m", r.input.m}}},
          {"command", r.command},
          {"parameters", r.parameters},
          {"result", r.result},
          {"wall_time_ms", r.wall_time_ms}};
}

RunReport report_from_json(const json& j) {
  RunReport r;
  const json& in = j.at("input");
  r.input = {in.at("path").get<std::string>(), in.at("format").get<std::string>(), in.at("n").get<std::size_t>(),
             in.at("m").get<std::size_t>()};
  r.command = j.at("command").get<std::string>();
  r.parameters = j.at("parameters");
  r.result = j.at("result");
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  return r;
}

}  // namespace nearbound
