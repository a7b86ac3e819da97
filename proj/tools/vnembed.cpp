// Command-line front end: generate, transform, solve, validate, export and
// benchmark embedding instances.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "vne/bench.hpp"
#include "vne/generators.hpp"
#include "vne/io.hpp"
#include "vne/lp_export.hpp"
#include "vne/oracle.hpp"
#include "vne/solver.hpp"
#include "vne/transform.hpp"
#include "vne/validate.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw vne::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw vne::Error("cannot write " + path);
  out << text;
}

void append_stats_row(const std::string& path, const std::string& instance,
                      const vne::SolveResult& result) {
  bool fresh = !std::filesystem::exists(path);
  std::ofstream out(path, std::ios::app);
  if (!out) throw vne::Error("cannot write " + path);
  if (fresh)
    out << "instance,r,s,s_transformed,table_entries,inner_iterations,wall_ms,status,cost\n";
  out << instance << "," << result.stats.request_nodes << "," << result.stats.substrate_nodes
      << "," << result.stats.transformed_nodes << "," << result.stats.table_entries << ","
      << result.stats.inner_iterations << "," << result.stats.wall_ms << ","
      << to_string(result.status) << ","
      << (result.status == vne::SolveStatus::Optimal ? result.cost.to_decimal() : "") << "\n";
}

std::string instance_with_request(const vne::Substrate& substrate, const vne::Request& request) {
  vne::Instance inst;
  inst.tau = substrate.tau;
  inst.substrate = substrate;
  inst.request = request;
  return vne::serialize_instance(inst);
}

int report_solution(const vne::Instance& inst, const vne::SolveResult& result,
                    const std::string& out_path, const std::string& stats_path,
                    const std::string& instance_path, bool quiet) {
  if (!stats_path.empty()) append_stats_row(stats_path, instance_path, result);
  if (result.status == vne::SolveStatus::Infeasible) {
    if (!quiet) std::cerr << "Infeasible\n";
    return 4;
  }
  write_output(out_path, vne::serialize_mapping(inst, result.mapping, result.cost));
  if (!quiet)
    std::cerr << "Optimal cost " << result.cost.to_decimal() << " in " << result.stats.wall_ms
              << " ms\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minimum-cost virtual network embedding on tree substrates"};
  app.require_subcommand(1);
  bool quiet = false;
  bool json_errors = false;
  app.add_flag("--quiet", quiet, "Suppress informational output");
  app.add_flag("--json-errors", json_errors, "Emit errors as JSON on stderr");

  int exit_code = 0;

  // Let --quiet / --json-errors appear after the subcommand too.
  app.fallthrough();

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  gen->fallthrough();

  auto* gen_ft = gen->add_subcommand("fat-tree", "Fat-tree substrate (empty request)");
  int ft_ports = 4;
  std::uint64_t ft_seed = 1;
  std::string ft_out;
  gen_ft->add_option("--ports", ft_ports, "Switch port count f (even, 4..16)")->required();
  gen_ft->add_option("--seed", ft_seed, "Generator seed");
  gen_ft->add_option("--out", ft_out, "Output file (default stdout)");
  gen_ft->callback([&] {
    vne::Substrate s = vne::gen_fat_tree(ft_ports, ft_seed);
    write_output(ft_out, instance_with_request(s, vne::Request{}));
  });

  auto* gen_req = gen->add_subcommand("request", "Erdos-Renyi request");
  std::size_t rq_nodes = 5;
  double rq_prob = 0.5;
  std::uint64_t rq_seed = 1;
  int rq_resample = 1000;
  std::string rq_into, rq_out;
  gen_req->add_option("--nodes", rq_nodes, "Request node count")->required();
  gen_req->add_option("--prob", rq_prob, "Connection probability in (0,1]")->required();
  gen_req->add_option("--seed", rq_seed, "Generator seed");
  gen_req->add_option("--max-resample", rq_resample, "Resample budget for connectivity");
  gen_req->add_option("--into", rq_into, "Instance file whose request is replaced");
  gen_req->add_option("--out", rq_out, "Output file (default stdout)");
  gen_req->callback([&] {
    vne::Request r = vne::gen_er_request(rq_nodes, rq_prob, rq_seed, rq_resample);
    vne::Instance inst;
    if (!rq_into.empty()) {
      inst = vne::parse_instance(read_file(rq_into));
      if (inst.tau != r.tau) throw vne::Error("--into instance has a different tau");
      inst.request = r;
    } else {
      inst.tau = r.tau;
      inst.substrate.tau = r.tau;
      inst.request = r;
    }
    write_output(rq_out, vne::serialize_instance(inst));
  });

  auto* gen_part = gen->add_subcommand("partition", "Two-node equal-split gadget");
  std::string part_set, part_out;
  gen_part->add_option("--set", part_set, "Comma-separated positive integers")->required();
  gen_part->add_option("--out", part_out, "Output file (default stdout)");
  gen_part->callback([&] {
    std::vector<std::int64_t> elements;
    std::stringstream ss(part_set);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      elements.push_back(std::stoll(item));
    }
    write_output(part_out, vne::serialize_instance(vne::gen_partition_gadget(elements)));
  });

  auto* gen_suite = gen->add_subcommand("bench-suite", "Materialize a bench grid to files");
  std::string suite_config, suite_dir;
  gen_suite->add_option("--config", suite_config, "Bench config JSON")->required();
  gen_suite->add_option("--out-dir", suite_dir, "Target directory")->required();
  gen_suite->callback([&] {
    vne::BenchConfig config = vne::parse_bench_config(read_file(suite_config));
    std::filesystem::create_directories(suite_dir);
    for (const auto& cell : config.grid)
      for (std::uint64_t seed : cell.seeds) {
        vne::Substrate s = vne::gen_fat_tree(cell.f, seed);
        vne::Request r = vne::gen_er_request(cell.r, cell.p, seed, config.max_resample);
        char name[128];
        std::snprintf(name, sizeof name, "f%d_r%zu_p%g_s%llu.json", cell.f, cell.r, cell.p,
                      static_cast<unsigned long long>(seed));
        write_output((std::filesystem::path(suite_dir) / name).string(),
                     instance_with_request(s, r));
      }
  });

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "Solve with the subset dynamic program");
  std::string sv_instance, sv_out, sv_root, sv_stats;
  bool sv_sparse = false;
  solve->add_option("--instance", sv_instance, "Instance file")->required();
  solve->add_option("--out", sv_out, "Mapping output file (default stdout)");
  solve->add_option("--root", sv_root, "Substrate node to root the tree at");
  solve->add_flag("--sparse", sv_sparse, "Store only finite table entries");
  solve->add_option("--stats", sv_stats, "Append a stats CSV row to this file");
  solve->callback([&] {
    vne::Instance inst = vne::parse_instance(read_file(sv_instance));
    vne::SolveOptions options;
    options.sparse = sv_sparse;
    if (!sv_root.empty()) options.root = sv_root;
    vne::SolveResult result = vne::dp_solve(inst.substrate, inst.request, options);
    exit_code = report_solution(inst, result, sv_out, sv_stats, sv_instance, quiet);
  });

  // ---- oracle ----
  auto* oracle = app.add_subcommand("oracle", "Solve by exhaustive enumeration");
  std::string or_instance, or_out, or_root, or_stats;
  bool or_sparse = false;
  oracle->add_option("--instance", or_instance, "Instance file")->required();
  oracle->add_option("--out", or_out, "Mapping output file (default stdout)");
  oracle->add_option("--root", or_root, "Accepted for flag parity; the oracle never roots");
  oracle->add_flag("--sparse", or_sparse, "Accepted for flag parity; unused");
  oracle->add_option("--stats", or_stats, "Append a stats CSV row to this file");
  oracle->callback([&] {
    vne::Instance inst = vne::parse_instance(read_file(or_instance));
    vne::SolveResult result = vne::brute_force(inst.substrate, inst.request);
    exit_code = report_solution(inst, result, or_out, or_stats, or_instance, quiet);
  });

  // ---- validate ----
  auto* validate = app.add_subcommand("validate", "Check a mapping against an instance");
  std::string va_instance, va_mapping;
  bool va_json = false;
  validate->add_option("--instance", va_instance, "Instance file")->required();
  validate->add_option("--mapping", va_mapping, "Mapping file")->required();
  validate->add_flag("--json", va_json, "Machine-readable report");
  validate->callback([&] {
    vne::Instance inst = vne::parse_instance(read_file(va_instance));
    vne::MappingDocument doc = vne::parse_mapping(read_file(va_mapping), inst);
    vne::ValidationReport valid = vne::check_valid(inst.substrate, inst.request, doc.mapping);
    vne::ValidationReport feasible =
        vne::check_feasible(inst.substrate, inst.request, doc.mapping);
    vne::Cost cost = vne::mapping_cost(inst.substrate, inst.request, doc.mapping);
    if (va_json) {
      nlohmann::ordered_json out;
      out["valid"] = valid.ok;
      out["feasible"] = feasible.ok;
      out["cost"] = cost.to_decimal();
      out["declared_cost"] = doc.cost.to_decimal();
      nlohmann::ordered_json violations = nlohmann::ordered_json::array();
      for (const vne::Violation& v : feasible.violations)
        violations.push_back({{"kind", vne::to_string(v.kind)},
                              {"element", v.element},
                              {"target", v.target},
                              {"detail", v.detail}});
      out["violations"] = violations;
      std::cout << out.dump(2) << "\n";
    } else {
      for (const vne::Violation& v : feasible.violations)
        std::cout << vne::to_string(v.kind) << " " << v.element
                  << (v.target.empty() ? "" : " on " + v.target) << ": " << v.detail << "\n";
      if (feasible.ok) std::cout << "ok, cost " << cost.to_decimal() << "\n";
      if (doc.cost != cost && !quiet)
        std::cerr << "note: declared cost " << doc.cost.to_decimal()
                  << " differs from recomputed " << cost.to_decimal() << "\n";
    }
    exit_code = valid.ok ? (feasible.ok ? 0 : 3) : 2;
  });

  // ---- transform ----
  auto* transform = app.add_subcommand("transform", "Apply substrate rewrites");
  std::string tf_instance, tf_out, tf_trace, tf_root;
  std::string tf_steps = "bidirectionalize,leafify,binarize,pad";
  transform->add_option("--instance", tf_instance, "Instance file")->required();
  transform->add_option("--out", tf_out, "Transformed instance output (default stdout)");
  transform->add_option("--trace", tf_trace, "Write the rewrite trace to this file");
  transform->add_option("--root", tf_root, "Substrate node to root the tree at");
  transform->add_option("--steps", tf_steps,
                        "Comma list of bidirectionalize,leafify,binarize,pad");
  transform->callback([&] {
    vne::Instance inst = vne::parse_instance(read_file(tf_instance));
    int root = tf_root.empty() ? 0 : inst.substrate.require_node(tf_root);
    std::vector<vne::TransformTrace> traces;
    std::stringstream ss(tf_steps);
    std::string step;
    while (std::getline(ss, step, ',')) {
      vne::TransformResult result;
      if (step == "bidirectionalize") result = vne::bidirectionalize(inst.substrate);
      else if (step == "leafify") result = vne::leafify(inst.substrate, root);
      else if (step == "binarize") result = vne::binarize(inst.substrate, root);
      else if (step == "pad") result = vne::pad_full_binary(inst.substrate, root);
      else throw vne::Error("unknown transform step \"" + step + "\"");
      inst.substrate = std::move(result.substrate);
      traces.push_back(std::move(result.trace));
    }
    write_output(tf_out, vne::serialize_instance(inst));
    if (!tf_trace.empty()) write_output(tf_trace, vne::serialize_trace(traces));
  });

  // ---- export-lp ----
  auto* export_lp = app.add_subcommand("export-lp", "Emit the MCF integer program");
  std::string lp_instance, lp_out;
  export_lp->add_option("--instance", lp_instance, "Instance file")->required();
  export_lp->add_option("--out", lp_out, "LP output file (default stdout)");
  export_lp->callback([&] {
    vne::Instance inst = vne::parse_instance(read_file(lp_instance));
    write_output(lp_out, vne::export_lp(inst.substrate, inst.request));
  });

  // ---- bench ----
  auto* bench = app.add_subcommand("bench", "Run a fat-tree/ER grid and emit CSV");
  std::string be_config, be_out;
  bench->add_option("--config", be_config, "Bench config JSON")->required();
  bench->add_option("--out", be_out, "CSV output file (default stdout)");
  bench->callback([&] {
    vne::BenchConfig config = vne::parse_bench_config(read_file(be_config));
    if (be_out.empty() || be_out == "-") {
      vne::run_bench(config, std::cout);
    } else {
      std::ofstream out(be_out, std::ios::binary);
      if (!out) throw vne::Error("cannot write " + be_out);
      vne::run_bench(config, out);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    if (json_errors)
      std::cerr << nlohmann::json{{"error", e.what()}}.dump() << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
