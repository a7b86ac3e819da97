#include "vne/oracle.hpp"

#include <chrono>
#include <optional>

#include "vne/tree.hpp"
#include "vne/validate.hpp"

namespace vne {

namespace {

constexpr double kAssignmentBudget = 1e8;

// All-pairs directed tree paths; absent when a needed edge direction is
// missing from the substrate (such an assignment is simply invalid).
std::vector<std::optional<std::vector<int>>> all_pairs_paths(const Substrate& substrate) {
  const int s = static_cast<int>(substrate.nodes.size());
  std::vector<std::optional<std::vector<int>>> paths(static_cast<std::size_t>(s) * s);
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y) {
      if (x == y) {
        paths[static_cast<std::size_t>(x) * s + y] = std::vector<int>{};
        continue;
      }
      try {
        paths[static_cast<std::size_t>(x) * s + y] = unique_tree_path(substrate, x, y);
      } catch (const Error&) {
        paths[static_cast<std::size_t>(x) * s + y] = std::nullopt;
      }
    }
  return paths;
}

}  // namespace

SolveResult brute_force(const Substrate& substrate, const Request& request) {
  auto started = std::chrono::steady_clock::now();
  if (substrate.tau != request.tau)
    throw Error("substrate and request disagree on the resource dimension");
  if (!is_tree(substrate)) throw Error("substrate is not a tree");

  const int s = static_cast<int>(substrate.nodes.size());
  const int r = static_cast<int>(request.nodes.size());
  const std::size_t tau = substrate.tau;
  {
    double combos = 1;
    for (int i = 0; i < r; ++i) combos *= s;
    if (combos > kAssignmentBudget)
      throw Error("enumeration budget exceeded (s^r > 1e8)");
  }

  SolveResult result;
  result.stats.request_nodes = r;
  result.stats.substrate_nodes = s;
  result.stats.transformed_nodes = s;

  auto finish = [&](SolveResult& res) {
    res.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return res;
  };

  if (r == 0) {
    result.status = SolveStatus::Optimal;
    result.cost = Cost::zero();
    result.stats.inner_iterations = 1;
    return finish(result);
  }

  auto paths = all_pairs_paths(substrate);

  // Per (request node, substrate node): single-element validity and cost.
  std::vector<char> node_ok(static_cast<std::size_t>(r) * s);
  std::vector<Cost> node_cost(static_cast<std::size_t>(r) * s);
  for (int u = 0; u < r; ++u)
    for (int x = 0; x < s; ++x) {
      node_ok[static_cast<std::size_t>(u) * s + x] =
          vec_leq(request.nodes[u].demand, substrate.nodes[x].capacity);
      node_cost[static_cast<std::size_t>(u) * s + x] =
          Cost::dot(request.nodes[u].demand, substrate.nodes[x].cost);
    }

  // Per (request edge, substrate pair): path validity and priced length.
  const int m = static_cast<int>(request.edges.size());
  std::vector<char> path_ok(static_cast<std::size_t>(m) * s * s, 0);
  std::vector<Cost> path_cost(static_cast<std::size_t>(m) * s * s);
  for (int k = 0; k < m; ++k) {
    const RequestEdge& e = request.edges[k];
    for (int x = 0; x < s; ++x)
      for (int y = 0; y < s; ++y) {
        const auto& path = paths[static_cast<std::size_t>(x) * s + y];
        if (!path) continue;
        bool ok = true;
        Cost cost;
        for (int ei : *path) {
          if (!vec_leq(e.demand, substrate.edges[ei].capacity)) ok = false;
          cost = cost.saturating_add(Cost::dot(e.demand, substrate.edges[ei].cost));
        }
        if (!ok) continue;
        std::size_t at = (static_cast<std::size_t>(k) * s + x) * s + y;
        path_ok[at] = 1;
        path_cost[at] = cost;
      }
  }

  std::vector<int> assign(r, 0);
  std::vector<int> best_assign;
  Cost best_cost;
  bool have_best = false;
  std::uint64_t evaluated = 0;

  std::vector<ResourceVec> node_load(s, zero_vec(tau));
  std::vector<ResourceVec> edge_load(substrate.edges.size(), zero_vec(tau));
  std::vector<int> touched_nodes, touched_edges;

  while (true) {
    ++evaluated;
    bool valid = true;
    Cost cost;
    for (int u = 0; u < r && valid; ++u) {
      std::size_t at = static_cast<std::size_t>(u) * s + assign[u];
      if (!node_ok[at]) valid = false;
      else cost = cost.saturating_add(node_cost[at]);
    }
    for (int k = 0; k < m && valid; ++k) {
      const RequestEdge& e = request.edges[k];
      std::size_t at = (static_cast<std::size_t>(k) * s + assign[e.src]) * s + assign[e.dst];
      if (!path_ok[at]) valid = false;
      else cost = cost.saturating_add(path_cost[at]);
    }
    // Saturated totals are rejected like infeasible ones; the minimum must
    // be an exactly represented cost.
    if (valid && cost.is_saturated()) valid = false;
    if (valid && (!have_best || cost < best_cost)) {
      // Worth the full feasibility sums only if it would improve the best.
      touched_nodes.clear();
      touched_edges.clear();
      bool feasible = true;
      for (int u = 0; u < r; ++u) {
        int x = assign[u];
        if (vec_is_zero(node_load[x])) touched_nodes.push_back(x);
        vec_add_in_place(node_load[x], request.nodes[u].demand);
      }
      for (int x : touched_nodes)
        if (!vec_leq(node_load[x], substrate.nodes[x].capacity)) feasible = false;
      for (int k = 0; k < m && feasible; ++k) {
        const RequestEdge& e = request.edges[k];
        const auto& path =
            paths[static_cast<std::size_t>(assign[e.src]) * s + assign[e.dst]];
        for (int ei : *path) {
          if (vec_is_zero(edge_load[ei])) touched_edges.push_back(ei);
          vec_add_in_place(edge_load[ei], request.edges[k].demand);
        }
      }
      for (int ei : touched_edges)
        if (!vec_leq(edge_load[ei], substrate.edges[ei].capacity)) feasible = false;
      for (int x : touched_nodes) node_load[x] = zero_vec(tau);
      for (int ei : touched_edges) edge_load[ei] = zero_vec(tau);
      if (feasible) {
        best_cost = cost;
        best_assign = assign;
        have_best = true;
      }
    }
    // Lexicographic odometer, rightmost digit fastest.
    int i = r - 1;
    while (i >= 0 && assign[i] == s - 1) assign[i--] = 0;
    if (i < 0) break;
    ++assign[i];
  }

  result.stats.inner_iterations = evaluated;
  if (!have_best) {
    result.status = SolveStatus::Infeasible;
    return finish(result);
  }
  result.status = SolveStatus::Optimal;
  result.mapping.node_map = best_assign;
  result.mapping.edge_paths.resize(m);
  for (int k = 0; k < m; ++k) {
    const RequestEdge& e = request.edges[k];
    result.mapping.edge_paths[k] =
        *paths[static_cast<std::size_t>(best_assign[e.src]) * s + best_assign[e.dst]];
  }
  result.cost = mapping_cost(substrate, request, result.mapping);
  return finish(result);
}

}  // namespace vne
