#include <doctest.h>

#include "support.hpp"
#include "vne/io.hpp"
#include "vne/oracle.hpp"
#include "vne/solver.hpp"
#include "vne/transform.hpp"
#include "vne/validate.hpp"

using namespace vne;
using vnetest::units;

namespace {

// a <-> b path with capacities 1 and 2.
Substrate small_path() {
  Substrate s;
  s.tau = 1;
  int a = s.add_node("a", units({1}), units({3}));
  int b = s.add_node("b", units({2}), units({4}));
  s.add_edge(a, b, units({5}), units({1}));
  s.add_edge(b, a, units({5}), units({1}));
  return s;
}

Substrate star(int leaves) {
  Substrate s;
  s.tau = 1;
  int center = s.add_node("c", units({0}), units({1}));
  for (int i = 0; i < leaves; ++i) {
    int leaf = s.add_node("l" + std::to_string(i), units({2}), units({1}));
    s.add_edge(center, leaf, units({9}), units({1}));
    s.add_edge(leaf, center, units({9}), units({1}));
  }
  return s;
}

}  // namespace

TEST_CASE("bidirectionalize adds zero-capacity reverse edges") {
  Substrate s;
  s.tau = 1;
  int a = s.add_node("a", units({1}), units({1}));
  int b = s.add_node("b", units({1}), units({1}));
  s.add_edge(a, b, units({4}), units({2}));

  auto [out, trace] = bidirectionalize(s);
  REQUIRE(out.edges.size() == 2);
  int rev = out.edge_index(b, a);
  REQUIRE(rev >= 0);
  CHECK(vec_is_zero(out.edges[rev].capacity));
  CHECK(vec_is_zero(out.edges[rev].cost));
  CHECK(trace.records.size() == 1);

  // Idempotent; already-bidirectional substrates come back untouched.
  auto [again, trace2] = bidirectionalize(out);
  CHECK(trace2.empty());
  CHECK(again.edges.size() == out.edges.size());

  Substrate empty_edges;
  empty_edges.tau = 1;
  empty_edges.add_node("a", units({1}), units({1}));
  CHECK(bidirectionalize(empty_edges).trace.empty());
}

TEST_CASE("leafify moves capacity of internal nodes to fresh leaves") {
  Substrate s = small_path();
  auto [out, trace] = leafify(s, 0);  // rooted at a
  // a has a child and capacity 1, so it gains a~leaf; b stays a leaf.
  REQUIRE(out.nodes.size() == 3);
  int fresh = out.node_index("a~leaf");
  REQUIRE(fresh >= 0);
  CHECK(out.nodes[fresh].capacity == units({1}));
  CHECK(out.nodes[fresh].cost == units({3}));
  CHECK(vec_is_zero(out.nodes[out.node_index("a")].capacity));
  CHECK(out.nodes[out.node_index("a")].cost[0].is_top());
  CHECK(out.nodes[out.node_index("b")].capacity == units({2}));
  int up = out.edge_index(fresh, out.node_index("a"));
  REQUIRE(up >= 0);
  CHECK(out.edges[up].capacity[0].is_unbounded());
  CHECK(out.edges[up].cost[0].is_zero());
  CHECK(trace.records.size() == 1);

  // Every node with children now has zero capacity.
  RootedTree tree = RootedTree::build(out, 0);
  for (std::size_t v = 0; v < out.nodes.size(); ++v)
    if (!tree.children[v].empty()) CHECK(vec_is_zero(out.nodes[v].capacity));

  // Idempotent once all internal capacity is zero.
  auto [twice, trace2] = leafify(out, 0);
  CHECK(trace2.empty());

  Substrate lone;
  lone.tau = 1;
  lone.add_node("a", units({7}), units({1}));
  CHECK(leafify(lone, 0).trace.empty());
}

TEST_CASE("binarize splits wide nodes") {
  SUBCASE("three children") {
    auto [out, trace] = binarize(star(3), 0);
    RootedTree tree = RootedTree::build(out, 0);
    for (std::size_t v = 0; v < out.nodes.size(); ++v) CHECK(tree.children[v].size() <= 2);
    // One split: c~s0 over {l0}, c~s1 over {l1, l2}.
    REQUIRE(trace.records.size() == 1);
    const auto& split = std::get<NodeSplit>(trace.records[0]);
    CHECK(split.left_children == std::vector<std::string>{"l0"});
    CHECK(split.right_children == std::vector<std::string>{"l1", "l2"});
    // Fresh internals carry zero capacity and sentinel cost.
    int left = out.node_index(split.left);
    CHECK(vec_is_zero(out.nodes[left].capacity));
    CHECK(out.nodes[left].cost[0].is_top());
    // The moved edges keep their attributes.
    int moved = out.edge_index(out.node_index("l0"), left);
    REQUIRE(moved >= 0);
    CHECK(out.edges[moved].capacity == units({9}));
    CHECK(out.edges[moved].cost == units({1}));
  }
  SUBCASE("two children stay put") {
    auto [out, trace] = binarize(star(2), 0);
    CHECK(trace.empty());
    CHECK(out.nodes.size() == 3);
  }
  SUBCASE("four children need one split") {
    auto [out, trace] = binarize(star(4), 0);
    REQUIRE(trace.records.size() == 1);
    const auto& split = std::get<NodeSplit>(trace.records[0]);
    CHECK(split.left_children == std::vector<std::string>{"l0", "l1"});
    CHECK(split.right_children == std::vector<std::string>{"l2", "l3"});
  }
  SUBCASE("many children keep the size linear") {
    Substrate wide = star(40);
    auto [out, trace] = binarize(wide, 0);
    RootedTree tree = RootedTree::build(out, 0);
    for (std::size_t v = 0; v < out.nodes.size(); ++v) CHECK(tree.children[v].size() <= 2);
    CHECK(out.nodes.size() <= 3 * wide.nodes.size() + 2);
  }
}

TEST_CASE("pad_full_binary fills single-child internals") {
  Substrate s = small_path();  // a -> b, one child
  auto [out, trace] = pad_full_binary(s, 0);
  REQUIRE(trace.records.size() == 1);
  int pad = out.node_index("a~pad");
  REQUIRE(pad >= 0);
  CHECK(vec_is_zero(out.nodes[pad].capacity));
  int in = out.edge_index(0, pad);
  REQUIRE(in >= 0);
  CHECK(vec_is_zero(out.edges[in].capacity));

  RootedTree tree = RootedTree::build(out, 0);
  for (std::size_t v = 0; v < out.nodes.size(); ++v)
    CHECK((tree.children[v].empty() || tree.children[v].size() == 2));

  // Full binary trees and single nodes are untouched.
  auto [unchanged, trace2] = pad_full_binary(star(2), 0);
  CHECK(trace2.empty());
  Substrate lone;
  lone.tau = 1;
  lone.add_node("a", units({1}), units({1}));
  CHECK(pad_full_binary(lone, 0).trace.empty());
}

TEST_CASE("traces replay to the transformed substrate") {
  SplitMix64 rng(1201);
  for (int it = 0; it < 25; ++it) {
    Instance inst = vnetest::random_instance(rng);
    auto step1 = bidirectionalize(inst.substrate);
    auto step2 = leafify(step1.substrate, 0);
    auto step3 = binarize(step2.substrate, 0);
    auto step4 = pad_full_binary(step3.substrate, 0);

    Substrate replayed = inst.substrate;
    for (const TransformTrace* trace : {&step1.trace, &step2.trace, &step3.trace, &step4.trace})
      replayed = apply_trace(replayed, *trace);

    Instance a, b;
    a.tau = b.tau = inst.tau;
    a.substrate = step4.substrate;
    b.substrate = replayed;
    CHECK(serialize_instance(a) == serialize_instance(b));
  }
}

TEST_CASE("size bounds hold across the chain") {
  SplitMix64 rng(1202);
  for (int it = 0; it < 40; ++it) {
    Instance inst = vnetest::random_instance(rng);
    std::size_t s = inst.substrate.nodes.size();
    auto leafed = leafify(bidirectionalize(inst.substrate).substrate, 0);
    CHECK(leafed.substrate.nodes.size() <= 2 * s);
    auto binary = binarize(leafed.substrate, 0);
    CHECK(binary.substrate.nodes.size() <= 3 * inst.substrate.nodes.size() + 2);
  }
}

TEST_CASE("oracle cost is invariant under each transform") {
  SplitMix64 rng(1203);
  vnetest::FamilyParams params;
  params.max_substrate = 5;
  params.max_request = 3;
  int checked = 0;
  for (int it = 0; it < 30; ++it) {
    Instance inst = vnetest::random_instance(rng, params);
    SolveResult base = brute_force(inst.substrate, inst.request);

    auto check_same = [&](const Substrate& transformed) {
      SolveResult other = brute_force(transformed, inst.request);
      CHECK(base.status == other.status);
      if (base.status == SolveStatus::Optimal) CHECK(base.cost == other.cost);
    };
    Substrate bidir = bidirectionalize(inst.substrate).substrate;
    check_same(bidir);
    check_same(leafify(bidir, 0).substrate);
    check_same(binarize(bidir, 0).substrate);
    check_same(pad_full_binary(binarize(leafify(bidir, 0).substrate, 0).substrate, 0).substrate);
    ++checked;
  }
  CHECK(checked == 30);
}

TEST_CASE("lift examples") {
  // A request node placed on a fresh leaf lifts to the leaf's parent.
  Substrate s = small_path();
  auto leafed = leafify(s, 0);
  Request r;
  r.tau = 1;
  r.add_node("u", units({1}));
  Mapping on_leaf{{leafed.substrate.node_index("a~leaf")}, {}};
  Mapping lifted = lift_mapping({leafed.trace}, s, leafed.substrate, r, on_leaf);
  CHECK(lifted.node_map == std::vector<int>{s.node_index("a")});

  // An empty trace chain lifts identically.
  Mapping on_b{{s.node_index("b")}, {}};
  Mapping same = lift_mapping({}, s, s, r, on_b);
  CHECK(same.node_map == on_b.node_map);
}

TEST_CASE("lifted solver mappings are feasible and cost-equal on the original") {
  SplitMix64 rng(1204);
  vnetest::FamilyParams params;
  params.max_substrate = 6;
  params.max_request = 4;
  for (int it = 0; it < 40; ++it) {
    Instance inst = vnetest::random_instance(rng, params);
    SolveResult solved = dp_solve(inst.substrate, inst.request);
    if (solved.status != SolveStatus::Optimal) continue;
    CHECK(check_feasible(inst.substrate, inst.request, solved.mapping).ok);
    CHECK(mapping_cost(inst.substrate, inst.request, solved.mapping) == solved.cost);
  }
}
