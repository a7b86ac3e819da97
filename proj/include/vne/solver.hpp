#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "vne/model.hpp"
#include "vne/transform.hpp"
#include "vne/tree.hpp"

namespace vne {

class TimeoutError : public Error {
 public:
  using Error::Error;
};

// Demands crossing each subset boundary of the request, for all 2^r subsets:
// out_demand(R) sums the demands of edges leaving R, in_demand(R) those of
// edges entering R. Stored flat (mask-major) to keep the solver loops tight.
class CutTable {
 public:
  CutTable(std::size_t r, std::size_t tau);

  std::size_t subsets() const { return std::size_t{1} << r_; }
  std::size_t request_nodes() const { return r_; }

  std::span<const Quantity> out_demand(std::uint32_t mask) const {
    return {out_.data() + static_cast<std::size_t>(mask) * tau_, tau_};
  }
  std::span<const Quantity> in_demand(std::uint32_t mask) const {
    return {in_.data() + static_cast<std::size_t>(mask) * tau_, tau_};
  }

  std::span<Quantity> out_mut(std::uint32_t mask) {
    return {out_.data() + static_cast<std::size_t>(mask) * tau_, tau_};
  }
  std::span<Quantity> in_mut(std::uint32_t mask) {
    return {in_.data() + static_cast<std::size_t>(mask) * tau_, tau_};
  }

 private:
  std::size_t r_;
  std::size_t tau_;
  std::vector<Quantity> out_;
  std::vector<Quantity> in_;
};

CutTable precompute_cuts(const Request& request, std::uint64_t* iterations = nullptr);

// Per-substrate-node table of subset entries; absent entries are infeasible.
// Dense mode keeps all 2^r slots, sparse mode keeps only the finite entries
// in a mask-sorted index. Both answer get() identically.
class DpTable {
 public:
  DpTable(std::size_t r, bool sparse);

  void set(std::uint32_t mask, Cost value);  // sparse mode: ascending masks
  std::optional<Cost> get(std::uint32_t mask) const;
  std::size_t stored_entries() const;
  bool is_sparse() const { return sparse_; }

 private:
  bool sparse_;
  std::vector<__int128> dense_;
  std::vector<std::pair<std::uint32_t, __int128>> entries_;
};

// Leaf rule: infeasible when the summed demand of R exceeds the leaf
// capacity, otherwise the summed demand priced at the leaf cost. Edges
// internal to R ride along as empty paths and contribute nothing.
std::optional<Cost> dp_leaf_entry(const Substrate& substrate, int leaf, std::uint32_t mask,
                                  const Request& request);

// Child combination rule for child x under v: infeasible when a crossing
// demand exceeds the capacity of the tree edge it must use, otherwise the
// child entry plus the crossing demands priced at the edge they cross,
// direction-resolved: demand leaving R uses (x,v), demand entering R uses
// (v,x).
std::optional<Cost> dp_edge_combine(const Substrate& substrate, int v, int x, std::uint32_t mask,
                                    const CutTable& cuts, std::optional<Cost> child_entry);

struct SolveOptions {
  std::optional<std::string> root;  // substrate node id; defaults to the first node
  bool sparse = false;
  std::size_t max_request_nodes = 24;  // memory guard, 2^r table slots per node
  std::optional<std::chrono::milliseconds> timeout;
};

// Solves the embedding problem exactly on a tree substrate: rewrites the
// substrate (bidirectional completion, leaf introduction, binary split, full
// padding), fills the subset tables bottom-up, and lifts the reconstructed
// optimal mapping back onto the input substrate.
SolveResult dp_solve(const Substrate& substrate, const Request& request,
                     const SolveOptions& options = {});

// Backtracks through filled tables to a mapping on the (transformed) tree.
// Ties between partitions break toward the lowest submask, so the result is
// deterministic and identical for dense and sparse tables.
Mapping reconstruct(const std::vector<DpTable>& tables, const CutTable& cuts,
                    const RootedTree& tree, const Substrate& transformed,
                    const Request& request);

}  // namespace vne
