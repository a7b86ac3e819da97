#pragma once

#include <vector>

#include "vne/model.hpp"

namespace vne {

// True iff the underlying undirected graph (parallel directed edges collapse
// to one undirected edge) is connected and acyclic. The empty substrate is
// not a tree.
bool is_tree(const Substrate& substrate);

// Rooted view of a tree substrate. Children are ordered by node index, which
// makes every traversal (and therefore solver tie-breaking) deterministic.
struct RootedTree {
  int root = -1;
  std::vector<int> parent;                 // -1 at the root
  std::vector<std::vector<int>> children;
  std::vector<int> post_order;             // children before parents

  static RootedTree build(const Substrate& substrate, int root);
};

// The unique directed walk u -> v along the undirected tree path, as edge
// indices; empty when u == v. Requires every traversed tree edge to exist in
// the needed direction (substrates are bidirectionalized before routing).
std::vector<int> unique_tree_path(const Substrate& substrate, int u, int v);

}  // namespace vne
