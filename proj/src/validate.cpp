#include "vne/validate.hpp"

#include <unordered_set>

namespace vne {

namespace {

std::string edge_label(const Request& request, const RequestEdge& e) {
  return request.nodes[e.src].id + "->" + request.nodes[e.dst].id;
}

std::string vec_str(const ResourceVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].to_decimal();
  }
  return s + "]";
}

void check_mapping_shape(const Substrate& substrate, const Request& request,
                         const Mapping& mapping) {
  if (mapping.node_map.size() != request.nodes.size())
    throw Error("mapping is not total on request nodes");
  if (mapping.edge_paths.size() != request.edges.size())
    throw Error("mapping is not total on request edges");
  for (int host : mapping.node_map)
    if (host < 0 || host >= static_cast<int>(substrate.nodes.size()))
      throw Error("mapping references an unknown substrate node");
  for (const auto& path : mapping.edge_paths)
    for (int ei : path)
      if (ei < 0 || ei >= static_cast<int>(substrate.edges.size()))
        throw Error("mapping references an unknown substrate edge");
}

}  // namespace

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NodeCapacity: return "NodeCapacity";
    case ViolationKind::EdgeCapacity: return "EdgeCapacity";
    case ViolationKind::PathEndpoints: return "PathEndpoints";
    case ViolationKind::PathDisconnected: return "PathDisconnected";
    case ViolationKind::PerElementCapacity: return "PerElementCapacity";
  }
  return "?";
}

void ValidationReport::add(ViolationKind kind, std::string element, std::string target,
                           std::string detail) {
  ok = false;
  violations.push_back({kind, std::move(element), std::move(target), std::move(detail)});
}

ValidationReport check_valid(const Substrate& substrate, const Request& request,
                             const Mapping& mapping) {
  check_mapping_shape(substrate, request, mapping);
  ValidationReport report;

  for (std::size_t i = 0; i < request.nodes.size(); ++i) {
    const RequestNode& n = request.nodes[i];
    const SubstrateNode& host = substrate.nodes[mapping.node_map[i]];
    if (!vec_leq(n.demand, host.capacity))
      report.add(ViolationKind::PerElementCapacity, n.id, host.id,
                 "demand " + vec_str(n.demand) + " > capacity " + vec_str(host.capacity));
  }

  for (std::size_t k = 0; k < request.edges.size(); ++k) {
    const RequestEdge& e = request.edges[k];
    const std::vector<int>& path = mapping.edge_paths[k];
    int want_src = mapping.node_map[e.src];
    int want_dst = mapping.node_map[e.dst];
    std::string label = edge_label(request, e);

    if (path.empty()) {
      if (want_src != want_dst)
        report.add(ViolationKind::PathEndpoints, label, "",
                   "empty path but endpoints map to different nodes");
      continue;
    }
    if (substrate.edges[path.front()].src != want_src)
      report.add(ViolationKind::PathEndpoints, label, substrate.nodes[want_src].id,
                 "path does not start at the mapped source");
    if (substrate.edges[path.back()].dst != want_dst)
      report.add(ViolationKind::PathEndpoints, label, substrate.nodes[want_dst].id,
                 "path does not end at the mapped target");
    bool connected = true;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (substrate.edges[path[i]].dst != substrate.edges[path[i + 1]].src) connected = false;
    if (!connected) {
      report.add(ViolationKind::PathDisconnected, label, "", "consecutive path edges do not meet");
    } else {
      // Walks revisiting a node are rejected: on trees only simple paths
      // arise, and a revisit always signals a bug upstream.
      std::unordered_set<int> seen{substrate.edges[path.front()].src};
      for (int ei : path)
        if (!seen.insert(substrate.edges[ei].dst).second) {
          report.add(ViolationKind::PathDisconnected, label, "", "path revisits a node");
          break;
        }
    }
    for (int ei : path) {
      const SubstrateEdge& se = substrate.edges[ei];
      if (!vec_leq(e.demand, se.capacity))
        report.add(ViolationKind::PerElementCapacity, label,
                   substrate.nodes[se.src].id + "->" + substrate.nodes[se.dst].id,
                   "demand " + vec_str(e.demand) + " > capacity " + vec_str(se.capacity));
    }
  }
  return report;
}

ValidationReport check_feasible(const Substrate& substrate, const Request& request,
                                const Mapping& mapping) {
  ValidationReport report = check_valid(substrate, request, mapping);

  std::vector<ResourceVec> node_load(substrate.nodes.size(), zero_vec(substrate.tau));
  for (std::size_t i = 0; i < request.nodes.size(); ++i)
    vec_add_in_place(node_load[mapping.node_map[i]], request.nodes[i].demand);
  for (std::size_t v = 0; v < substrate.nodes.size(); ++v)
    if (!vec_leq(node_load[v], substrate.nodes[v].capacity))
      report.add(ViolationKind::NodeCapacity, "", substrate.nodes[v].id,
                 "total demand " + vec_str(node_load[v]) + " > capacity " +
                     vec_str(substrate.nodes[v].capacity));

  std::vector<ResourceVec> edge_load(substrate.edges.size(), zero_vec(substrate.tau));
  for (std::size_t k = 0; k < request.edges.size(); ++k)
    for (int ei : mapping.edge_paths[k])
      vec_add_in_place(edge_load[ei], request.edges[k].demand);
  for (std::size_t ei = 0; ei < substrate.edges.size(); ++ei)
    if (!vec_leq(edge_load[ei], substrate.edges[ei].capacity))
      report.add(ViolationKind::EdgeCapacity, "",
                 substrate.nodes[substrate.edges[ei].src].id + "->" +
                     substrate.nodes[substrate.edges[ei].dst].id,
                 "total demand " + vec_str(edge_load[ei]) + " > capacity " +
                     vec_str(substrate.edges[ei].capacity));
  return report;
}

Cost mapping_cost(const Substrate& substrate, const Request& request, const Mapping& mapping) {
  check_mapping_shape(substrate, request, mapping);
  Cost total;
  for (std::size_t i = 0; i < request.nodes.size(); ++i)
    total = total.saturating_add(
        Cost::dot(request.nodes[i].demand, substrate.nodes[mapping.node_map[i]].cost));
  for (std::size_t k = 0; k < request.edges.size(); ++k)
    for (int ei : mapping.edge_paths[k])
      total = total.saturating_add(Cost::dot(request.edges[k].demand, substrate.edges[ei].cost));
  return total;
}

}  // namespace vne
