#include "vne/solver.hpp"

#include <algorithm>
#include <bit>

namespace vne {

namespace {

// Raw table cells order naturally: finite < saturated < infeasible, so a
// plain min-fold rejects saturated candidates along with infeasible ones.
constexpr __int128 kSaturatedBits = static_cast<__int128>(1) << 110;
constexpr __int128 kInfeasibleBits = static_cast<__int128>(1) << 120;

struct Deadline {
  bool armed = false;
  std::chrono::steady_clock::time_point at{};

  void check(std::uint64_t iterations) const {
    if (armed && (iterations & 0xFFFF) == 0 && std::chrono::steady_clock::now() > at)
      throw TimeoutError("solve timed out");
  }
};

// Summed node demand of every subset, mask-major flat buffer.
std::vector<Quantity> subset_demand_sums(const Request& request, std::uint64_t* iterations) {
  const std::size_t r = request.nodes.size();
  const std::size_t tau = request.tau;
  std::vector<Quantity> sums((std::size_t{1} << r) * tau, Quantity::zero());
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << r); ++mask) {
    if (iterations) ++*iterations;
    std::uint32_t low = mask & (~mask + 1);
    std::uint32_t rest = mask ^ low;
    const ResourceVec& d = request.nodes[std::countr_zero(low)].demand;
    for (std::size_t i = 0; i < tau; ++i)
      sums[static_cast<std::size_t>(mask) * tau + i] =
          sums[static_cast<std::size_t>(rest) * tau + i].saturating_add(d[i]);
  }
  return sums;
}

}  // namespace

CutTable::CutTable(std::size_t r, std::size_t tau)
    : r_(r),
      tau_(tau),
      out_((std::size_t{1} << r) * tau, Quantity::zero()),
      in_((std::size_t{1} << r) * tau, Quantity::zero()) {}

CutTable precompute_cuts(const Request& request, std::uint64_t* iterations) {
  const std::size_t r = request.nodes.size();
  if (r > 30) throw Error("request too large for subset tables (max 30 nodes)");
  CutTable cuts(r, request.tau);
  const std::uint32_t subsets = std::uint32_t{1} << r;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    auto out = cuts.out_mut(mask);
    auto in = cuts.in_mut(mask);
    for (const RequestEdge& e : request.edges) {
      if (iterations) ++*iterations;
      bool src_in = (mask >> e.src) & 1;
      bool dst_in = (mask >> e.dst) & 1;
      if (src_in && !dst_in) vec_add_in_place(out, e.demand);
      if (!src_in && dst_in) vec_add_in_place(in, e.demand);
    }
  }
  return cuts;
}

DpTable::DpTable(std::size_t r, bool sparse) : sparse_(sparse) {
  if (!sparse_) dense_.assign(std::size_t{1} << r, kInfeasibleBits);
}

void DpTable::set(std::uint32_t mask, Cost value) {
  if (sparse_) {
    if (!entries_.empty() && entries_.back().first >= mask)
      throw Error("sparse table entries must be inserted in ascending mask order");
    entries_.emplace_back(mask, value.pico());
  } else {
    dense_[mask] = value.pico();
  }
}

std::optional<Cost> DpTable::get(std::uint32_t mask) const {
  if (sparse_) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), mask,
                               [](const auto& e, std::uint32_t m) { return e.first < m; });
    if (it == entries_.end() || it->first != mask) return std::nullopt;
    return Cost::from_pico(it->second);
  }
  __int128 bits = dense_[mask];
  if (bits >= kSaturatedBits) return std::nullopt;
  return Cost::from_pico(bits);
}

std::size_t DpTable::stored_entries() const {
  if (sparse_) return entries_.size();
  std::size_t n = 0;
  for (__int128 bits : dense_)
    if (bits < kSaturatedBits) ++n;
  return n;
}

std::optional<Cost> dp_leaf_entry(const Substrate& substrate, int leaf, std::uint32_t mask,
                                  const Request& request) {
  ResourceVec sum = zero_vec(request.tau);
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1)
    vec_add_in_place(sum, request.nodes[std::countr_zero(rest)].demand);
  if (!vec_leq(sum, substrate.nodes.at(leaf).capacity)) return std::nullopt;
  Cost cost = Cost::dot(sum, substrate.nodes[leaf].cost);
  if (cost.is_saturated()) return std::nullopt;
  return cost;
}

std::optional<Cost> dp_edge_combine(const Substrate& substrate, int v, int x, std::uint32_t mask,
                                    const CutTable& cuts, std::optional<Cost> child_entry) {
  int up = substrate.edge_index(x, v);
  int down = substrate.edge_index(v, x);
  if (up < 0 || down < 0) throw Error("dp_edge_combine: nodes are not adjacent both ways");
  auto out = cuts.out_demand(mask);
  auto in = cuts.in_demand(mask);
  if (!vec_leq(out, substrate.edges[up].capacity)) return std::nullopt;
  if (!vec_leq(in, substrate.edges[down].capacity)) return std::nullopt;
  if (!child_entry) return std::nullopt;
  Cost total = child_entry->saturating_add(Cost::dot(out, substrate.edges[up].cost))
                   .saturating_add(Cost::dot(in, substrate.edges[down].cost));
  if (total.is_saturated()) return std::nullopt;
  return total;
}

namespace {

// f(v,x,.) over all masks as a raw scratch array for the partition loop.
void fill_edge_scratch(const Substrate& substrate, int v, int x, const CutTable& cuts,
                       const DpTable& child_table, std::vector<__int128>& scratch,
                       std::uint64_t& iterations, const Deadline& deadline) {
  const std::uint32_t subsets = static_cast<std::uint32_t>(cuts.subsets());
  int up = substrate.edge_index(x, v);
  int down = substrate.edge_index(v, x);
  if (up < 0 || down < 0) throw Error("transformed substrate lost an edge direction");
  const ResourceVec& up_cap = substrate.edges[up].capacity;
  const ResourceVec& down_cap = substrate.edges[down].capacity;
  const ResourceVec& up_cost = substrate.edges[up].cost;
  const ResourceVec& down_cost = substrate.edges[down].cost;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    deadline.check(++iterations);
    scratch[mask] = kInfeasibleBits;
    auto out = cuts.out_demand(mask);
    auto in = cuts.in_demand(mask);
    if (!vec_leq(out, up_cap) || !vec_leq(in, down_cap)) continue;
    std::optional<Cost> child = child_table.get(mask);
    if (!child) continue;
    Cost total = child->saturating_add(Cost::dot(out, up_cost))
                     .saturating_add(Cost::dot(in, down_cost));
    if (total.is_saturated()) continue;
    scratch[mask] = total.pico();
  }
}

}  // namespace

Mapping reconstruct(const std::vector<DpTable>& tables, const CutTable& cuts,
                    const RootedTree& tree, const Substrate& transformed,
                    const Request& request) {
  const std::uint32_t full = (std::uint32_t{1} << request.nodes.size()) - 1;
  Mapping mapping;
  mapping.node_map.assign(request.nodes.size(), -1);
  mapping.edge_paths.resize(request.edges.size());

  auto entry_of = [&](int node, std::uint32_t mask) { return tables[node].get(mask); };

  std::vector<std::pair<int, std::uint32_t>> stack{{tree.root, full}};
  while (!stack.empty()) {
    auto [v, mask] = stack.back();
    stack.pop_back();
    std::optional<Cost> stored = entry_of(v, mask);
    if (!stored) throw Error("reconstruct: missing table entry (solver bug)");
    const std::vector<int>& kids = tree.children[v];
    if (kids.empty()) {
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1)
        mapping.node_map[std::countr_zero(rest)] = v;
      continue;
    }
    if (kids.size() == 1) {
      std::optional<Cost> f = dp_edge_combine(transformed, v, kids[0], mask, cuts,
                                              entry_of(kids[0], mask));
      if (!f || *f != *stored)
        throw Error("reconstruct: one-child entry does not reproduce the stored value");
      stack.emplace_back(kids[0], mask);
      continue;
    }
    // Ascending submask enumeration; the first partition reproducing the
    // stored minimum wins, which pins the tie-break.
    bool found = false;
    std::uint32_t a_mask = 0;
    while (true) {
      std::optional<Cost> fa =
          dp_edge_combine(transformed, v, kids[0], a_mask, cuts, entry_of(kids[0], a_mask));
      if (fa) {
        std::uint32_t b_mask = mask ^ a_mask;
        std::optional<Cost> fb =
            dp_edge_combine(transformed, v, kids[1], b_mask, cuts, entry_of(kids[1], b_mask));
        if (fb && fa->saturating_add(*fb) == *stored) {
          stack.emplace_back(kids[0], a_mask);
          stack.emplace_back(kids[1], b_mask);
          found = true;
          break;
        }
      }
      if (a_mask == mask) break;
      a_mask = (a_mask - mask) & mask;
    }
    if (!found) throw Error("reconstruct: no partition reproduces the stored value (solver bug)");
  }

  for (std::size_t k = 0; k < request.edges.size(); ++k) {
    const RequestEdge& e = request.edges[k];
    mapping.edge_paths[k] =
        unique_tree_path(transformed, mapping.node_map[e.src], mapping.node_map[e.dst]);
  }
  return mapping;
}

SolveResult dp_solve(const Substrate& substrate, const Request& request,
                     const SolveOptions& options) {
  auto started = std::chrono::steady_clock::now();
  if (substrate.tau != request.tau)
    throw Error("substrate and request disagree on the resource dimension");
  if (!is_tree(substrate)) throw Error("substrate is not a tree");
  const std::size_t r = request.nodes.size();
  if (r > 30) throw Error("request too large for subset tables (max 30 nodes)");
  if (r > options.max_request_nodes)
    throw Error("request exceeds the configured node cap (" +
                std::to_string(options.max_request_nodes) + ")");

  int root = options.root ? substrate.require_node(*options.root) : 0;

  SolveResult result;
  result.stats.request_nodes = r;
  result.stats.substrate_nodes = substrate.nodes.size();

  Deadline deadline;
  if (options.timeout) {
    deadline.armed = true;
    deadline.at = started + *options.timeout;
  }

  if (r == 0) {
    result.status = SolveStatus::Optimal;
    result.cost = Cost::zero();
    result.stats.transformed_nodes = substrate.nodes.size();
    result.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return result;
  }

  // Rewrite pipeline. Leaf introduction must see the original child lists,
  // so it runs before the binary split invents internal nodes.
  std::vector<TransformTrace> traces;
  TransformResult step = bidirectionalize(substrate);
  traces.push_back(std::move(step.trace));
  step = leafify(step.substrate, root);
  traces.push_back(std::move(step.trace));
  step = binarize(step.substrate, root);
  traces.push_back(std::move(step.trace));
  step = pad_full_binary(step.substrate, root);
  traces.push_back(std::move(step.trace));
  Substrate transformed = std::move(step.substrate);
  result.stats.transformed_nodes = transformed.nodes.size();

  RootedTree tree = RootedTree::build(transformed, root);

  std::uint64_t iterations = 0;
  CutTable cuts = precompute_cuts(request, &iterations);
  std::vector<Quantity> demand_sums = subset_demand_sums(request, &iterations);
  const std::uint32_t subsets = std::uint32_t{1} << r;
  const std::uint32_t full = subsets - 1;
  const std::size_t tau = request.tau;

  std::vector<DpTable> tables;
  tables.reserve(transformed.nodes.size());
  for (std::size_t v = 0; v < transformed.nodes.size(); ++v)
    tables.emplace_back(r, options.sparse);

  std::vector<__int128> scratch_a(subsets);
  std::vector<__int128> scratch_b(subsets);

  for (int v : tree.post_order) {
    const std::vector<int>& kids = tree.children[v];
    if (kids.empty()) {
      const ResourceVec& cap = transformed.nodes[v].capacity;
      const ResourceVec& cost_vec = transformed.nodes[v].cost;
      for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        deadline.check(++iterations);
        std::span<const Quantity> sum{demand_sums.data() + static_cast<std::size_t>(mask) * tau,
                                      tau};
        if (!vec_leq(sum, cap)) continue;
        Cost cost = Cost::dot(sum, cost_vec);
        if (cost.is_saturated()) continue;
        tables[v].set(mask, cost);
      }
      continue;
    }

    fill_edge_scratch(transformed, v, kids[0], cuts, tables[kids[0]], scratch_a, iterations,
                      deadline);
    if (kids.size() == 1) {
      for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        deadline.check(++iterations);
        if (scratch_a[mask] < kSaturatedBits) tables[v].set(mask, Cost::from_pico(scratch_a[mask]));
      }
      continue;
    }
    if (kids.size() > 2)
      throw Error("transformed substrate is not binary (solver bug)");
    fill_edge_scratch(transformed, v, kids[1], cuts, tables[kids[1]], scratch_b, iterations,
                      deadline);

    // The partition loop: every (X, A subset of X) pair exactly once.
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      __int128 best = kInfeasibleBits;
      std::uint32_t a_mask = mask;
      while (true) {
        deadline.check(++iterations);
        __int128 candidate_a = scratch_a[a_mask];
        if (candidate_a < kSaturatedBits) {
          __int128 candidate_b = scratch_b[mask ^ a_mask];
          if (candidate_b < kSaturatedBits) {
            __int128 total = candidate_a + candidate_b;
            // Same clamp as Cost::saturating_add, so reconstruction can
            // reproduce every stored value.
            if (total <= Cost::kMaxFinitePico && total < best) best = total;
          }
        }
        if (a_mask == 0) break;
        a_mask = (a_mask - 1) & mask;
      }
      if (best < kSaturatedBits) tables[v].set(mask, Cost::from_pico(best));
    }
  }

  for (const DpTable& t : tables) result.stats.table_entries += t.stored_entries();
  result.stats.inner_iterations = iterations;

  std::optional<Cost> answer = tables[tree.root].get(full);
  if (!answer) {
    result.status = SolveStatus::Infeasible;
  } else {
    result.status = SolveStatus::Optimal;
    result.cost = *answer;
    Mapping on_transformed = reconstruct(tables, cuts, tree, transformed, request);
    result.mapping = lift_mapping(traces, substrate, transformed, request, on_transformed);
  }
  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
  return result;
}

}  // namespace vne
