#pragma once

#include <string>
#include <variant>
#include <vector>

#include "vne/model.hpp"
#include "vne/tree.hpp"

namespace vne {

// Rewrite records. Replaying a trace on the input substrate reproduces the
// output substrate exactly; lift_mapping walks them to pull a mapping back.
struct AddedReverseEdge {
  std::string src, dst;  // the added edge (zero capacity, zero cost)
};
struct LeafAdded {
  std::string node, leaf;  // leaf now carries node's capacity and cost
};
struct NodeSplit {
  std::string node, left, right;
  std::vector<std::string> left_children, right_children;
};
struct LeafPadded {
  std::string node, pad;
};

using TraceRecord = std::variant<AddedReverseEdge, LeafAdded, NodeSplit, LeafPadded>;

struct TransformTrace {
  std::vector<TraceRecord> records;

  bool empty() const { return records.empty(); }
};

struct TransformResult {
  Substrate substrate;
  TransformTrace trace;
};

// Adds the missing reverse direction of every edge with zero capacity and
// zero cost.
TransformResult bidirectionalize(const Substrate& substrate);

// Gives every node that has children and any nonzero capacity a fresh leaf
// carrying its capacity and cost; the node itself keeps zero capacity and a
// sentinel cost. Afterwards only leaves can host nonzero demands.
TransformResult leafify(const Substrate& substrate, int root);

// Splits nodes with more than two children by inserting fresh zero-capacity
// internal nodes, halving the child list recursively.
TransformResult binarize(const Substrate& substrate, int root);

// Gives every internal node with a single child a dummy leaf onto which
// nothing can be mapped or routed, so the tree becomes full binary.
TransformResult pad_full_binary(const Substrate& substrate, int root);

// Replays a trace; used to audit that traces fully describe the rewrite.
Substrate apply_trace(const Substrate& substrate, const TransformTrace& trace);

// Pulls a mapping on the transformed substrate back onto the original:
// fresh leaves map back to their parents, split-tree internals to the node
// they came from, and every edge path is recomputed as the unique tree path
// between the lifted endpoints. Costs are preserved exactly.
Mapping lift_mapping(const std::vector<TransformTrace>& traces, const Substrate& original,
                     const Substrate& transformed, const Request& request,
                     const Mapping& mapping);

std::string serialize_trace(const std::vector<TransformTrace>& traces);

}  // namespace vne
