#include "vne/generators.hpp"

#include <cmath>

namespace vne {

std::uint64_t derive_stream(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return SplitMix64(seed ^ h).next();
}

Substrate gen_fat_tree(int ports, std::uint64_t seed) {
  if (ports < 4 || ports > 16 || ports % 2 != 0)
    throw Error("fat-tree port count must be even and between 4 and 16");
  const int half = ports / 2;

  Substrate s;
  s.tau = 1;
  SplitMix64 node_rng(derive_stream(seed, "fat-tree/nodes"));
  SplitMix64 edge_rng(derive_stream(seed, "fat-tree/edges"));

  // Nodes in BFS order: root, pods, ToRs, servers. Every node draws a
  // capacity perturbation and a cost, in that order, even where the base
  // capacity is zero; the draw order stays independent of the values.
  auto draw_node = [&](std::int64_t base_capacity_units) {
    std::int64_t perturb = node_rng.next_micro_between(1, 10);
    std::int64_t cost = node_rng.next_micro_between(1, 10);
    ResourceVec cap{Quantity::from_micro(base_capacity_units * perturb)};
    ResourceVec cost_vec{Quantity::from_micro(cost)};
    return std::pair{cap, cost_vec};
  };

  auto [root_cap, root_cost] = draw_node(0);
  int root = s.add_node("root", root_cap, root_cost);
  std::vector<int> pods;
  for (int p = 0; p < ports; ++p) {
    auto [cap, cost] = draw_node(0);
    pods.push_back(s.add_node("pod" + std::to_string(p), cap, cost));
  }
  std::vector<int> tors;
  for (int p = 0; p < ports; ++p)
    for (int t = 0; t < half; ++t) {
      auto [cap, cost] = draw_node(0);
      tors.push_back(s.add_node("tor" + std::to_string(p) + "-" + std::to_string(t), cap, cost));
    }
  for (int p = 0; p < ports; ++p)
    for (int t = 0; t < half; ++t)
      for (int i = 0; i < half; ++i) {
        auto [cap, cost] = draw_node(1);
        s.add_node("srv" + std::to_string(p) + "-" + std::to_string(t) + "-" + std::to_string(i),
                   cap, cost);
      }

  // Edges follow the same BFS order, parent->child then child->parent, with
  // an independent perturbation and cost per direction.
  auto link = [&](int parent, int child, std::int64_t base_bandwidth_units) {
    for (auto [from, to] : {std::pair{parent, child}, std::pair{child, parent}}) {
      std::int64_t perturb = edge_rng.next_micro_between(1, 10);
      std::int64_t cost = edge_rng.next_micro_between(1, 10);
      s.add_edge(from, to, ResourceVec{Quantity::from_micro(base_bandwidth_units * perturb)},
                 ResourceVec{Quantity::from_micro(cost)});
    }
  };
  for (int p = 0; p < ports; ++p) link(root, pods[p], static_cast<std::int64_t>(half) * half);
  for (int p = 0; p < ports; ++p)
    for (int t = 0; t < half; ++t) link(pods[p], tors[p * half + t], half);
  for (int p = 0; p < ports; ++p)
    for (int t = 0; t < half; ++t) {
      int tor = tors[p * half + t];
      int first_server = s.node_index("srv" + std::to_string(p) + "-" + std::to_string(t) + "-0");
      for (int i = 0; i < half; ++i) link(tor, first_server + i, 1);
    }
  return s;
}

Request gen_er_request(std::size_t nodes, double p, std::uint64_t seed, int max_resample) {
  if (nodes < 1 || nodes > 30) throw Error("request node count must be between 1 and 30");
  if (!(p > 0.0) || p > 1.0) throw Error("connection probability must be in (0, 1]");

  SplitMix64 topo_rng(derive_stream(seed, "er/topology"));
  SplitMix64 demand_rng(derive_stream(seed, "er/demands"));

  const std::size_t n = nodes;
  std::vector<std::pair<int, int>> edges;
  for (int attempt = 0;; ++attempt) {
    if (attempt >= max_resample) throw Error("resample budget exhausted without a connected graph");
    edges.clear();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (topo_rng.next_double() < p) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    if (n == 1) break;
    // Connectivity of the underlying undirected graph.
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t visited = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++visited;
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    if (visited == n) break;
  }

  Request r;
  r.tau = 1;
  for (std::size_t i = 0; i < n; ++i)
    r.add_node("v" + std::to_string(i),
               ResourceVec{Quantity::from_micro(demand_rng.next_micro_between(1, 5))});

  // Edge demands: per node one total outgoing bandwidth, split by normalized
  // uniform weights over its outgoing edges (kept in pair order). Nodes
  // without outgoing edges draw nothing.
  std::vector<ResourceVec> edge_demand(edges.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t begin = k;
    while (k < edges.size() && edges[k].first == static_cast<int>(i)) ++k;
    if (k == begin) continue;
    std::int64_t total_micro = demand_rng.next_micro_between(1, 5);
    std::vector<double> weights(k - begin);
    double weight_sum = 0;
    for (double& w : weights) {
      w = demand_rng.next_double();
      weight_sum += w;
    }
    if (weight_sum == 0) weights[0] = weight_sum = 1;  // all-zero draws, vanishingly rare
    for (std::size_t e = begin; e < k; ++e) {
      double share = weights[e - begin] / weight_sum;
      std::int64_t micro = std::llround(static_cast<double>(total_micro) * share);
      edge_demand[e] = ResourceVec{Quantity::from_micro(micro)};
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e)
    r.add_edge(edges[e].first, edges[e].second, edge_demand[e]);
  return r;
}

Instance gen_partition_gadget(const std::vector<std::int64_t>& elements) {
  if (elements.empty()) throw Error("partition gadget needs a nonempty multiset");
  std::int64_t total = 0;
  for (std::int64_t x : elements) {
    if (x <= 0) throw Error("partition gadget elements must be positive");
    if (x > (std::int64_t{1} << 31)) throw Error("partition gadget element too large");
    total += x;
  }
  // B/2 is exact in micro-units even for odd B.
  std::int64_t half_micro = total * Quantity::kMicroPerUnit / 2;

  Instance inst;
  inst.tau = 1;
  inst.substrate.tau = 1;
  inst.request.tau = 1;
  ResourceVec half_cap{Quantity::from_micro(half_micro)};
  ResourceVec zero{Quantity::zero()};
  int a = inst.substrate.add_node("a", half_cap, zero);
  int b = inst.substrate.add_node("b", half_cap, zero);
  inst.substrate.add_edge(a, b, ResourceVec{Quantity::zero()}, ResourceVec{Quantity::zero()});
  inst.substrate.add_edge(b, a, ResourceVec{Quantity::zero()}, ResourceVec{Quantity::zero()});
  for (std::size_t i = 0; i < elements.size(); ++i)
    inst.request.add_node("x" + std::to_string(i),
                          ResourceVec{Quantity::from_units(elements[i])});
  return inst;
}

}  // namespace vne
