#pragma once

// Shared fixtures for the unit and acceptance suites: tiny handcrafted
// instances plus the seeded random family used by every equivalence check.

#include <cstdint>
#include <string>
#include <vector>

#include "vne/generators.hpp"
#include "vne/model.hpp"

namespace vnetest {

inline vne::ResourceVec units(std::initializer_list<std::int64_t> values) {
  vne::ResourceVec v;
  for (std::int64_t x : values) v.push_back(vne::Quantity::from_units(x));
  return v;
}

inline vne::ResourceVec inf_vec(std::size_t tau) {
  return vne::ResourceVec(tau, vne::Quantity::unbounded());
}

// Star substrate with two usable leaves and a request of two connected
// nodes; optimum is both nodes on the cheap leaf at cost 3.
inline vne::Instance make_t1() {
  vne::Instance inst;
  inst.tau = 1;
  inst.substrate.tau = 1;
  inst.request.tau = 1;
  int p = inst.substrate.add_node("p", units({0}), units({0}));
  int l1 = inst.substrate.add_node("l1", units({3}), units({1}));
  int l2 = inst.substrate.add_node("l2", units({3}), units({2}));
  for (int leaf : {l1, l2}) {
    inst.substrate.add_edge(p, leaf, units({10}), units({1}));
    inst.substrate.add_edge(leaf, p, units({10}), units({1}));
  }
  int u = inst.request.add_node("u", units({2}));
  int w = inst.request.add_node("w", units({1}));
  inst.request.add_edge(u, w, units({1}));
  return inst;
}

struct FamilyParams {
  int min_substrate = 2, max_substrate = 9;
  int min_request = 1, max_request = 6;
  std::vector<double> probabilities{0.3, 0.7, 1.0};
  std::vector<std::size_t> taus{1, 2};
  std::int64_t max_capacity_units = 10;  // also caps costs
  std::int64_t max_demand_units = 5;
};

// Random-tree substrates with bidirectional edges and independently drawn
// per-direction capacities and costs, plus directed ER-style requests.
// Values are quantized to 3 decimals so every demand*cost product is exact
// in micro-units.
inline vne::Instance random_instance(vne::SplitMix64& rng, const FamilyParams& params = {}) {
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng.next() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  auto milli_value = [&](std::int64_t max_units) {
    return vne::Quantity::from_micro(pick(0, max_units * 1000) * 1000);
  };
  vne::Instance inst;
  inst.tau = params.taus[rng.next() % params.taus.size()];
  inst.substrate.tau = inst.tau;
  inst.request.tau = inst.tau;

  auto draw_vec = [&](std::int64_t max_units) {
    vne::ResourceVec v;
    for (std::size_t t = 0; t < inst.tau; ++t) v.push_back(milli_value(max_units));
    return v;
  };

  int s = static_cast<int>(pick(params.min_substrate, params.max_substrate));
  for (int i = 0; i < s; ++i)
    inst.substrate.add_node("n" + std::to_string(i), draw_vec(params.max_capacity_units),
                            draw_vec(params.max_capacity_units));
  for (int i = 1; i < s; ++i) {
    int parent = static_cast<int>(pick(0, i - 1));
    inst.substrate.add_edge(parent, i, draw_vec(params.max_capacity_units),
                            draw_vec(params.max_capacity_units));
    inst.substrate.add_edge(i, parent, draw_vec(params.max_capacity_units),
                            draw_vec(params.max_capacity_units));
  }

  int r = static_cast<int>(pick(params.min_request, params.max_request));
  double p = params.probabilities[rng.next() % params.probabilities.size()];
  for (int i = 0; i < r; ++i)
    inst.request.add_node("v" + std::to_string(i), draw_vec(params.max_demand_units));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      if (rng.next_double() < p)
        inst.request.add_edge(i, j, draw_vec(params.max_demand_units));
    }
  return inst;
}

}  // namespace vnetest
