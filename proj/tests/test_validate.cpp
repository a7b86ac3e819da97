#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "vne/validate.hpp"

using namespace vne;
using vnetest::units;

namespace {

bool has_kind(const ValidationReport& report, ViolationKind kind) {
  return std::any_of(report.violations.begin(), report.violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

// One substrate node, capacity as given.
Instance single_node(std::int64_t capacity, std::int64_t demand_a, std::int64_t demand_b) {
  Instance inst;
  inst.tau = 1;
  inst.substrate.tau = inst.request.tau = 1;
  inst.substrate.add_node("v", units({capacity}), units({1}));
  inst.request.add_node("u", units({demand_a}));
  inst.request.add_node("w", units({demand_b}));
  return inst;
}

}  // namespace

TEST_CASE("valid vs feasible on a shared node") {
  // Per-element fine, sum violates.
  Instance inst = single_node(3, 2, 2);
  Mapping m{{0, 0}, {}};
  CHECK(check_valid(inst.substrate, inst.request, m).ok);
  ValidationReport feas = check_feasible(inst.substrate, inst.request, m);
  CHECK_FALSE(feas.ok);
  CHECK(has_kind(feas, ViolationKind::NodeCapacity));

  Instance wide = single_node(4, 2, 2);
  CHECK(check_feasible(wide.substrate, wide.request, m).ok);
}

TEST_CASE("per-element node capacity violation") {
  Instance inst = single_node(3, 2, 0);
  Mapping ok_map{{0, 0}, {}};
  CHECK(check_valid(inst.substrate, inst.request, ok_map).ok);

  Instance tight = single_node(1, 2, 0);
  ValidationReport report = check_valid(tight.substrate, tight.request, ok_map);
  CHECK_FALSE(report.ok);
  CHECK(has_kind(report, ViolationKind::PerElementCapacity));
}

TEST_CASE("edge checks: per-element, endpoints, sums") {
  Instance t1 = vnetest::make_t1();
  int l1 = 1, l2 = 2;
  int up = t1.substrate.edge_index(l1, 0);
  int down = t1.substrate.edge_index(0, l2);

  // Demand 1 over two unit-cost edges; fine per element.
  Mapping m{{l1, l2}, {{up, down}}};
  CHECK(check_valid(t1.substrate, t1.request, m).ok);
  CHECK(mapping_cost(t1.substrate, t1.request, m) == Cost::from_units(6));

  // Path not starting at the mapped source.
  Mapping wrong_start{{l2, l2}, {{up, down}}};
  ValidationReport report = check_valid(t1.substrate, t1.request, wrong_start);
  CHECK(has_kind(report, ViolationKind::PathEndpoints));

  // Empty path with split endpoints.
  Mapping split{{l1, l2}, {{}}};
  CHECK(has_kind(check_valid(t1.substrate, t1.request, split), ViolationKind::PathEndpoints));

  // Demand above an edge capacity is a per-element violation.
  Instance squeezed = t1;
  squeezed.substrate.edges[up].capacity = units({0});
  CHECK(has_kind(check_valid(squeezed.substrate, squeezed.request, m),
                 ViolationKind::PerElementCapacity));
}

TEST_CASE("shared edge capacity is a summed check") {
  Instance inst;
  inst.tau = 1;
  inst.substrate.tau = inst.request.tau = 1;
  int a = inst.substrate.add_node("a", units({10}), units({0}));
  int b = inst.substrate.add_node("b", units({10}), units({0}));
  inst.substrate.add_edge(a, b, units({1}), units({0}));
  inst.substrate.add_edge(b, a, units({1}), units({0}));
  int u = inst.request.add_node("u", units({1}));
  int w = inst.request.add_node("w", units({1}));
  int x = inst.request.add_node("x", units({1}));
  int y = inst.request.add_node("y", units({1}));
  inst.request.add_edge(u, w, units({1}));
  inst.request.add_edge(x, y, units({1}));

  int ab = inst.substrate.edge_index(a, b);
  Mapping m{{a, b, a, b}, {{ab}, {ab}}};
  CHECK(check_valid(inst.substrate, inst.request, m).ok);
  ValidationReport feas = check_feasible(inst.substrate, inst.request, m);
  CHECK_FALSE(feas.ok);
  CHECK(has_kind(feas, ViolationKind::EdgeCapacity));
}

TEST_CASE("walks that revisit a node are rejected") {
  Instance t1 = vnetest::make_t1();
  int l1 = 1;
  int up = t1.substrate.edge_index(l1, 0);
  int down = t1.substrate.edge_index(0, l1);
  Mapping loop{{l1, l1}, {{up, down}}};  // l1 -> p -> l1
  ValidationReport report = check_valid(t1.substrate, t1.request, loop);
  CHECK(has_kind(report, ViolationKind::PathDisconnected));
}

TEST_CASE("cost examples") {
  // Node demand 2 at cost 1, no edges.
  Instance inst;
  inst.tau = 1;
  inst.substrate.tau = inst.request.tau = 1;
  inst.substrate.add_node("v", units({3}), units({1}));
  inst.request.add_node("u", units({2}));
  Mapping m{{0}, {}};
  CHECK(mapping_cost(inst.substrate, inst.request, m) == Cost::from_units(2));

  // T1 optimum: both nodes on l1, empty path.
  Instance t1 = vnetest::make_t1();
  Mapping best{{1, 1}, {{}}};
  CHECK(mapping_cost(t1.substrate, t1.request, best) == Cost::from_units(3));
  CHECK(check_feasible(t1.substrate, t1.request, best).ok);
}

TEST_CASE("all-zero demands cost nothing and fit anywhere") {
  SplitMix64 rng(311);
  for (int it = 0; it < 20; ++it) {
    Instance inst = vnetest::random_instance(rng);
    for (RequestNode& n : inst.request.nodes) n.demand = zero_vec(inst.tau);
    for (RequestEdge& e : inst.request.edges) e.demand = zero_vec(inst.tau);
    // Everything on node 0; edges on unique paths.
    Mapping m;
    m.node_map.assign(inst.request.nodes.size(), 0);
    m.edge_paths.assign(inst.request.edges.size(), {});
    CHECK(check_feasible(inst.substrate, inst.request, m).ok);
    CHECK(mapping_cost(inst.substrate, inst.request, m) == Cost::zero());
  }
}

TEST_CASE("cost is invariant under path edge enumeration order") {
  // Reordering which request edge is listed first cannot change the total.
  Instance t1 = vnetest::make_t1();
  Instance swapped = t1;
  std::swap(swapped.request.nodes[0], swapped.request.nodes[1]);
  swapped.request.reindex();
  for (RequestEdge& e : swapped.request.edges) {
    e.src ^= 1;
    e.dst ^= 1;
  }
  Mapping m{{1, 1}, {{}}};
  CHECK(mapping_cost(t1.substrate, t1.request, m) ==
        mapping_cost(swapped.substrate, swapped.request, m));
}
