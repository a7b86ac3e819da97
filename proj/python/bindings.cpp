// Python bindings: thin string-in/string-out wrappers over the C++ core so
// the module stays free of ownership subtleties.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vne/bench.hpp"
#include "vne/generators.hpp"
#include "vne/io.hpp"
#include "vne/lp_export.hpp"
#include "vne/oracle.hpp"
#include "vne/solver.hpp"
#include "vne/transform.hpp"
#include "vne/validate.hpp"

namespace py = pybind11;

namespace {

py::dict result_to_dict(const vne::Instance& inst, const vne::SolveResult& result) {
  py::dict out;
  out["status"] = std::string(vne::to_string(result.status));
  if (result.status == vne::SolveStatus::Optimal) {
    out["cost"] = result.cost.to_decimal();
    out["mapping"] = vne::serialize_mapping(inst, result.mapping, result.cost);
  }
  py::dict stats;
  stats["request_nodes"] = result.stats.request_nodes;
  stats["substrate_nodes"] = result.stats.substrate_nodes;
  stats["transformed_nodes"] = result.stats.transformed_nodes;
  stats["table_entries"] = result.stats.table_entries;
  stats["inner_iterations"] = result.stats.inner_iterations;
  stats["wall_ms"] = result.stats.wall_ms;
  out["stats"] = stats;
  return out;
}

py::dict solve_text(const std::string& instance_text, std::optional<std::string> root,
                    bool sparse, std::optional<std::int64_t> timeout_ms) {
  vne::Instance inst = vne::parse_instance(instance_text);
  vne::SolveOptions options;
  options.root = std::move(root);
  options.sparse = sparse;
  if (timeout_ms) options.timeout = std::chrono::milliseconds(*timeout_ms);
  return result_to_dict(inst, vne::dp_solve(inst.substrate, inst.request, options));
}

py::dict oracle_text(const std::string& instance_text) {
  vne::Instance inst = vne::parse_instance(instance_text);
  return result_to_dict(inst, vne::brute_force(inst.substrate, inst.request));
}

py::dict validate_text(const std::string& instance_text, const std::string& mapping_text) {
  vne::Instance inst = vne::parse_instance(instance_text);
  vne::MappingDocument doc = vne::parse_mapping(mapping_text, inst);
  vne::ValidationReport valid = vne::check_valid(inst.substrate, inst.request, doc.mapping);
  vne::ValidationReport feasible = vne::check_feasible(inst.substrate, inst.request, doc.mapping);
  py::dict out;
  out["valid"] = valid.ok;
  out["feasible"] = feasible.ok;
  out["cost"] = vne::mapping_cost(inst.substrate, inst.request, doc.mapping).to_decimal();
  py::list violations;
  for (const vne::Violation& v : feasible.violations) {
    py::dict item;
    item["kind"] = std::string(vne::to_string(v.kind));
    item["element"] = v.element;
    item["target"] = v.target;
    item["detail"] = v.detail;
    violations.append(item);
  }
  out["violations"] = violations;
  return out;
}

py::tuple transform_text(const std::string& instance_text, const std::vector<std::string>& steps,
                         std::optional<std::string> root) {
  vne::Instance inst = vne::parse_instance(instance_text);
  int root_index = root ? inst.substrate.require_node(*root) : 0;
  std::vector<vne::TransformTrace> traces;
  for (const std::string& step : steps) {
    vne::TransformResult result;
    if (step == "bidirectionalize") result = vne::bidirectionalize(inst.substrate);
    else if (step == "leafify") result = vne::leafify(inst.substrate, root_index);
    else if (step == "binarize") result = vne::binarize(inst.substrate, root_index);
    else if (step == "pad") result = vne::pad_full_binary(inst.substrate, root_index);
    else throw vne::Error("unknown transform step \"" + step + "\"");
    inst.substrate = std::move(result.substrate);
    traces.push_back(std::move(result.trace));
  }
  return py::make_tuple(vne::serialize_instance(inst), vne::serialize_trace(traces));
}

std::string export_lp_text(const std::string& instance_text) {
  vne::Instance inst = vne::parse_instance(instance_text);
  return vne::export_lp(inst.substrate, inst.request);
}

std::string gen_fat_tree_text(int ports, std::uint64_t seed) {
  vne::Instance inst;
  inst.tau = 1;
  inst.substrate = vne::gen_fat_tree(ports, seed);
  inst.request.tau = 1;
  return vne::serialize_instance(inst);
}

std::string gen_er_request_text(std::size_t nodes, double p, std::uint64_t seed,
                                int max_resample, std::optional<std::string> into) {
  vne::Request request = vne::gen_er_request(nodes, p, seed, max_resample);
  vne::Instance inst;
  if (into) {
    inst = vne::parse_instance(*into);
    if (inst.tau != request.tau) throw vne::Error("target instance has a different tau");
  } else {
    inst.tau = request.tau;
    inst.substrate.tau = request.tau;
  }
  inst.request = std::move(request);
  return vne::serialize_instance(inst);
}

std::string gen_partition_text(const std::vector<std::int64_t>& elements) {
  return vne::serialize_instance(vne::gen_partition_gadget(elements));
}

std::string canonicalize_text(const std::string& instance_text) {
  return vne::serialize_instance(vne::parse_instance(instance_text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact minimum-cost virtual network embedding on tree substrates";

  py::register_exception<vne::Error>(m, "VneError");

  m.def("solve", &solve_text, py::arg("instance"), py::arg("root") = std::nullopt,
        py::arg("sparse") = false, py::arg("timeout_ms") = std::nullopt,
        "Solve an instance document with the subset dynamic program.");
  m.def("oracle", &oracle_text, py::arg("instance"),
        "Solve an instance document by exhaustive enumeration.");
  m.def("validate", &validate_text, py::arg("instance"), py::arg("mapping"),
        "Check a mapping document against an instance document.");
  m.def("transform", &transform_text, py::arg("instance"),
        py::arg("steps") =
            std::vector<std::string>{"bidirectionalize", "leafify", "binarize", "pad"},
        py::arg("root") = std::nullopt,
        "Apply substrate rewrites; returns (instance, trace) documents.");
  m.def("export_lp", &export_lp_text, py::arg("instance"),
        "Emit the multi-commodity-flow integer program in CPLEX LP format.");
  m.def("gen_fat_tree", &gen_fat_tree_text, py::arg("ports"), py::arg("seed") = 1,
        "Generate a fat-tree substrate instance (empty request).");
  m.def("gen_er_request", &gen_er_request_text, py::arg("nodes"), py::arg("p"),
        py::arg("seed") = 1, py::arg("max_resample") = 1000, py::arg("into") = std::nullopt,
        "Generate an Erdos-Renyi request, optionally into an existing instance.");
  m.def("gen_partition", &gen_partition_text, py::arg("elements"),
        "Generate the two-node equal-split gadget for a positive integer multiset.");
  m.def("canonicalize", &canonicalize_text, py::arg("instance"),
        "Parse and re-serialize an instance document in canonical form.");

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
