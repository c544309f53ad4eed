// nearbound: command-line front end. JSON reports go to stdout, errors to
// stderr as {"error": {...}}. Exit codes: 0 success / YES, 1 NO (decide), 2 error.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nearbound/bounds.hpp"
#include "nearbound/errors.hpp"
#include "nearbound/extremal.hpp"
#include "nearbound/io.hpp"
#include "nearbound/kernel.hpp"
#include "nearbound/oracle.hpp"
#include "nearbound/pipeline.hpp"
#include "nearbound/report.hpp"

namespace fs = std::filesystem;
using namespace nearbound;

namespace {

constexpr int kExitError = 2;

struct InputArgs {
  std::string path;
  std::string format = "auto";
};

void add_input(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("input", in.path, "Graph file")->required();
  cmd->add_option("--format", in.format, "dimacs, edgelist or auto")
      ->check(CLI::IsMember({"auto", "dimacs", "edgelist"}));
}

struct Loaded {
  io::ParsedGraph parsed;
  InputDescriptor descriptor;
};

Loaded load(const InputArgs& in) {
  if (!fs::exists(in.path)) throw InputError("no such file '" + in.path + "'");
  const io::Format f = in.format == "auto" ? io::detect_format(in.path) : io::format_from_string(in.format);
  Loaded l{io::parse_graph_file(in.path, f), {}};
  l.descriptor = {in.path, io::to_string(f), l.parsed.graph.order(), l.parsed.graph.size()};
  return l;
}

io::Format output_format(const std::string& requested, const fs::path& out) {
  if (requested != "auto") return io::format_from_string(requested);
  const auto ext = out.extension().string();
  return (ext == ".col" || ext == ".clq" || ext == ".dimacs") ? io::Format::Dimacs : io::Format::Edgelist;
}

void emit(RunReport report, std::chrono::steady_clock::time_point start) {
  report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << report_to_json(report).dump(2) << '\n';
}

int fail(const std::string& kind, const std::string& message, std::optional<std::size_t> line = std::nullopt) {
  json err = {{"kind", kind}, {"message", message}};
  if (line) err["line"] = *line;
  std::cerr << json{{"error", err}}.dump() << '\n';
  return kExitError;
}

std::size_t to_size(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || s[0] == '-') throw InputError("expected a non-negative integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

Graph build_family(const std::string& name, const std::vector<std::string>& args, std::optional<std::uint64_t> seed);

// "name:a,b" -> build_family(name, {a, b})
Graph build_nested(const std::string& spec, std::optional<std::uint64_t> seed) {
  const auto colon = spec.find(':');
  std::vector<std::string> args;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    for (std::string a; std::getline(ss, a, ',');) args.push_back(a);
  }
  return build_family(spec.substr(0, colon), args, seed);
}

Graph build_family(const std::string& name, const std::vector<std::string>& args, std::optional<std::uint64_t> seed) {
  static const std::map<std::string, std::size_t> arity = {
      {"empty", 1}, {"complete", 1}, {"cycle", 1}, {"path", 1},          {"h_np", 2},
      {"gnp", 2},   {"join", 2},     {"union", 2}, {"disjoint_union", 2}};
  const auto it = arity.find(name);
  if (it == arity.end()) throw InputError("unknown family '" + name + "'");
  if (args.size() != it->second)
    throw InputError("family '" + name + "' takes " + std::to_string(it->second) + " argument(s), got " +
                     std::to_string(args.size()));

  if (name == "empty") return gen::empty(to_size(args[0]));
  if (name == "complete") return gen::complete(to_size(args[0]));
  if (name == "cycle") return gen::cycle(to_size(args[0]));
  if (name == "path") return gen::path(to_size(args[0]));
  if (name == "h_np") return gen::h_np(to_size(args[0]), to_size(args[1]));
  if (name == "gnp") {
    if (!seed) throw InputError("family 'gnp' needs --seed");
    double prob = 0;
    try {
      prob = std::stod(args[1]);
    } catch (const std::exception&) {
      throw InputError("bad probability '" + args[1] + "'");
    }
    return gen::gnp(to_size(args[0]), prob, *seed);
  }
  if (name == "join") return gen::join(build_nested(args[0], seed), build_nested(args[1], seed));
  return gen::disjoint_union(build_nested(args[0], seed), build_nested(args[1], seed));
}

extremal::Member member_from_string(const std::string& s) {
  if (s == "lower") return extremal::Member::Lower;
  if (s == "upper") return extremal::Member::Upper;
  return extremal::Member::Random;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide alpha(G) <= p - k near the size-based upper bound, with kernels and certificates"};
  app.require_subcommand(1);

  // bounds
  InputArgs bounds_in;
  bool with_p2 = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "Upper bounds p, p1, p2 and the Welsh–Powell complement bound");
  add_input(bounds_cmd, bounds_in);
  bounds_cmd->add_flag("--p2", with_p2, "Also compute the neighbourhood-union bound p2");

  // decide
  InputArgs decide_in;
  std::size_t decide_k = 0;
  bool skip_bounds = false, all_k = false;
  std::uint64_t node_budget = VcOptions{}.node_budget;
  auto* decide_cmd = app.add_subcommand("decide", "Answer alpha(G) <= p - k with a certificate (exit 0 YES, 1 NO)");
  add_input(decide_cmd, decide_in);
  auto* k_opt = decide_cmd->add_option("--k", decide_k, "Distance below the bound p");
  decide_cmd->add_flag("--skip-bound-steps", skip_bounds, "Go straight to kernel + vertex cover");
  decide_cmd->add_flag("--all-k", all_k, "Decide every admissible k (0..floor((p-1)/2))");
  decide_cmd->add_option("--node-budget", node_budget, "Search node limit for the vertex-cover engine");

  // kernel
  InputArgs kernel_in;
  std::size_t kernel_k = 0;
  std::string emit_path;
  auto* kernel_cmd = app.add_subcommand("kernel", "Build the kernel G_{p,k}");
  add_input(kernel_cmd, kernel_in);
  kernel_cmd->add_option("--k", kernel_k, "Distance below the bound p")->required();
  kernel_cmd->add_option("--emit", emit_path, "Write the kernel graph (edgelist, original ids)");

  // oracle
  InputArgs oracle_in;
  bool want_alpha = false, want_vc = false;
  std::size_t cap = oracle::kDefaultCap;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact alpha / minimum vertex cover by brute force");
  add_input(oracle_cmd, oracle_in);
  oracle_cmd->add_flag("--alpha", want_alpha, "Independence number");
  oracle_cmd->add_flag("--vc", want_vc, "Minimum vertex cover");
  oracle_cmd->add_option("--cap", cap, "Largest order accepted (<= 64)");

  // gen
  std::string family, gen_out, gen_format = "auto";
  std::vector<std::string> family_args;
  std::optional<std::uint64_t> gen_seed;
  auto* gen_cmd = app.add_subcommand("gen", "Write a graph from a named family");
  gen_cmd->add_option("--family", family, "empty, complete, cycle, path, h_np, gnp, join, union")->required();
  gen_cmd->add_option("--args", family_args, "Family arguments; join/union take specs like complete:3");
  gen_cmd->add_option("--seed", gen_seed, "RNG seed (required for gnp)");
  gen_cmd->add_option("--out", gen_out, "Output path")->required();
  gen_cmd->add_option("--format", gen_format, "dimacs, edgelist or auto (by extension)")
      ->check(CLI::IsMember({"auto", "dimacs", "edgelist"}));

  // extremal
  auto* ext_cmd = app.add_subcommand("extremal", "Extremal kernel families for k = 1, 2, 3");
  ext_cmd->require_subcommand(1);
  std::string tag_name, member = "lower", ext_out, ext_format = "auto";
  std::size_t ext_p = 0, ext_k = 0;
  std::uint64_t ext_seed = 0;
  auto* ext_gen = ext_cmd->add_subcommand("generate", "Write a member of a family sandwich");
  ext_gen->add_option("--tag", tag_name, "k1_a ... k3_d3")->required();
  ext_gen->add_option("--p", ext_p, "Bound p")->required();
  ext_gen->add_option("--member", member, "lower, upper or random")
      ->check(CLI::IsMember({"lower", "upper", "random"}));
  ext_gen->add_option("--seed", ext_seed, "Seed for random members");
  ext_gen->add_option("--out", ext_out, "Output path")->required();
  ext_gen->add_option("--format", ext_format, "dimacs, edgelist or auto")
      ->check(CLI::IsMember({"auto", "dimacs", "edgelist"}));

  InputArgs classify_in;
  auto* ext_classify = ext_cmd->add_subcommand("classify", "Match a kernel with alpha = p - k + 1 to a family");
  add_input(ext_classify, classify_in);
  ext_classify->add_option("--p", ext_p, "Bound p")->required();
  ext_classify->add_option("--k", ext_k, "k in {1, 2, 3}")->required();

  auto* ext_enum = ext_cmd->add_subcommand("enumerate", "Classify every small graph with alpha = p at k = 1");
  ext_enum->add_option("--p", ext_p, "3 <= p <= 6")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what());
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    RunReport report;
    if (*bounds_cmd) {
      const auto in = load(bounds_in);
      report.input = in.descriptor;
      report.command = "bounds";
      report.parameters = {{"p2", with_p2}};
      report.result = bounds_to_json(bounds_report(in.parsed.graph, with_p2));
      emit(std::move(report), start);
      return 0;
    }
    if (*decide_cmd) {
      if (!all_k && k_opt->count() == 0) throw InputError("decide needs --k or --all-k");
      const auto in = load(decide_in);
      DecideOptions opts;
      opts.skip_bound_steps = skip_bounds;
      opts.vc.node_budget = node_budget;
      report.input = in.descriptor;
      report.command = "decide";
      report.parameters = {{"skip_bound_steps", skip_bounds}, {"node_budget", node_budget}};
      const auto& ids = in.parsed.external_ids;
      if (all_k) {
        report.parameters["all_k"] = true;
        json list = json::array();
        for (const auto& [k, d] : decide_many(in.parsed.graph, opts)) list.push_back(decision_to_json(d, ids));
        report.result = {{"decisions", std::move(list)}};
        emit(std::move(report), start);
        return 0;
      }
      report.parameters["k"] = decide_k;
      const Decision d = decide(in.parsed.graph, decide_k, opts);
      report.result = decision_to_json(d, ids);
      emit(std::move(report), start);
      return d.answer == Answer::Yes ? 0 : 1;
    }
    if (*kernel_cmd) {
      const auto in = load(kernel_in);
      const KernelResult kr = kernelize(in.parsed.graph, kernel_k);
      const auto& ids = in.parsed.external_ids;
      report.input = in.descriptor;
      report.command = "kernel";
      report.parameters = {{"k", kernel_k}};
      report.result = kernel_to_json(kr, ids);
      if (!emit_path.empty()) {
        std::vector<std::uint64_t> kept;
        for (Vertex v : kr.mapping) kept.push_back(ids[v]);
        io::write_graph_file(emit_path, kr.kernel, io::Format::Edgelist, kept);
        report.parameters["emit"] = emit_path;
      }
      emit(std::move(report), start);
      return 0;
    }
    if (*oracle_cmd) {
      const auto in = load(oracle_in);
      if (!want_alpha && !want_vc) want_alpha = want_vc = true;
      const auto& ids = in.parsed.external_ids;
      report.input = in.descriptor;
      report.command = "oracle";
      report.parameters = {{"cap", cap}};
      if (want_alpha) report.result["alpha"] = exact_to_json(oracle::exact_alpha(in.parsed.graph, cap), ids);
      if (want_vc) report.result["min_vertex_cover"] = exact_to_json(oracle::exact_min_vc(in.parsed.graph, cap), ids);
      emit(std::move(report), start);
      return 0;
    }
    if (*gen_cmd) {
      const Graph g = build_family(family, family_args, gen_seed);
      const io::Format f = output_format(gen_format, gen_out);
      io::write_graph_file(gen_out, g, f);
      report.command = "gen";
      report.parameters = {{"family", family}, {"args", family_args}, {"out", gen_out}, {"format", io::to_string(f)}};
      report.parameters["seed"] = gen_seed ? json(*gen_seed) : json(nullptr);
      report.result = {{"n", g.order()}, {"m", g.size()}};
      emit(std::move(report), start);
      return 0;
    }
    if (*ext_gen) {
      const auto tag = extremal::tag_from_string(tag_name);
      const Graph g = extremal::generate_extremal(tag, ext_p, member_from_string(member), ext_seed);
      const io::Format f = output_format(ext_format, ext_out);
      io::write_graph_file(ext_out, g, f);
      report.command = "extremal generate";
      report.parameters = {{"tag", tag_name}, {"p", ext_p}, {"member", member}, {"seed", ext_seed}, {"out", ext_out}};
      report.result = {{"n", g.order()}, {"m", g.size()}, {"alpha_target", ext_p - extremal::tag_k(tag) + 1}};
      emit(std::move(report), start);
      return 0;
    }
    if (*ext_classify) {
      const auto in = load(classify_in);
      report.input = in.descriptor;
      report.command = "extremal classify";
      report.parameters = {{"p", ext_p}, {"k", ext_k}};
      const auto a = extremal::classify_extremal(in.parsed.graph, ext_p, ext_k);
      report.result = extremal_to_json(a, in.parsed.external_ids);
      report.result["e_star_budget"] = extremal::e_star_budget(static_cast<std::int64_t>(ext_p),
                                                               static_cast<std::int64_t>(ext_k));
      const auto range = extremal::r_range(ext_p, ext_k);
      report.result["r_range"] = {range.lo, range.hi};
      emit(std::move(report), start);
      return 0;
    }
    if (*ext_enum) {
      const auto s = extremal::enumerate_k1(ext_p);
      report.command = "extremal enumerate";
      report.parameters = {{"p", ext_p}, {"k", 1}};
      report.result = {{"graphs_scanned", s.graphs_scanned},
                       {"candidates", s.candidates},
                       {"self_kernels", s.self_kernels},
                       {"by_tag", s.by_tag}};
      emit(std::move(report), start);
      return 0;
    }
  } catch (const ParseError& e) {
    return fail(e.kind(), e.what(), e.line());
  } catch (const Error& e) {
    return fail(e.kind(), e.what());
  } catch (const std::exception& e) {
    return fail("internal", e.what());
  }
  return fail("usage", "no command given");
}
