#include "vne/tree.hpp"

#include <algorithm>
#include <set>

namespace vne {

namespace {

// Adjacency of the underlying undirected graph, neighbors sorted by index.
std::vector<std::vector<int>> undirected_adjacency(const Substrate& substrate) {
  std::vector<std::set<int>> nb(substrate.nodes.size());
  for (const SubstrateEdge& e : substrate.edges) {
    nb[e.src].insert(e.dst);
    nb[e.dst].insert(e.src);
  }
  std::vector<std::vector<int>> adj(substrate.nodes.size());
  for (std::size_t v = 0; v < nb.size(); ++v) adj[v].assign(nb[v].begin(), nb[v].end());
  return adj;
}

}  // namespace

bool is_tree(const Substrate& substrate) {
  const std::size_t n = substrate.nodes.size();
  if (n == 0) return false;
  auto adj = undirected_adjacency(substrate);
  std::size_t undirected_edges = 0;
  for (const auto& a : adj) undirected_edges += a.size();
  undirected_edges /= 2;
  if (undirected_edges != n - 1) return false;
  // Connectivity check.
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
  return visited == n;
}

RootedTree RootedTree::build(const Substrate& substrate, int root) {
  if (!is_tree(substrate)) throw Error("substrate is not a tree");
  if (root < 0 || root >= static_cast<int>(substrate.nodes.size()))
    throw Error("root node index out of range");
  auto adj = undirected_adjacency(substrate);
  RootedTree t;
  t.root = root;
  t.parent.assign(substrate.nodes.size(), -1);
  t.children.resize(substrate.nodes.size());
  std::vector<int> order;
  order.reserve(substrate.nodes.size());
  std::vector<int> stack{root};
  std::vector<char> seen(substrate.nodes.size(), 0);
  seen[root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      t.parent[w] = v;
      t.children[v].push_back(w);
      stack.push_back(w);
    }
  }
  for (auto& c : t.children) std::sort(c.begin(), c.end());
  // Reverse BFS/DFS discovery order is a valid post order for our purposes
  // only if children follow parents in `order`; DFS guarantees that.
  t.post_order.assign(order.rbegin(), order.rend());
  return t;
}

std::vector<int> unique_tree_path(const Substrate& substrate, int u, int v) {
  const int n = static_cast<int>(substrate.nodes.size());
  if (u < 0 || u >= n) throw Error("path endpoint out of range");
  if (v < 0 || v >= n) throw Error("path endpoint out of range");
  if (u == v) return {};
  if (!is_tree(substrate)) throw Error("substrate is not a tree");
  auto adj = undirected_adjacency(substrate);
  // BFS from u, then walk back from v.
  std::vector<int> pred(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<int> queue{u};
  seen[u] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    if (x == v) break;
    for (int w : adj[x])
      if (!seen[w]) {
        seen[w] = 1;
        pred[w] = x;
        queue.push_back(w);
      }
  }
  if (!seen[v]) throw Error("nodes are not connected");
  std::vector<int> nodes_on_path{v};
  for (int x = v; x != u; x = pred[x]) nodes_on_path.push_back(pred[x]);
  std::reverse(nodes_on_path.begin(), nodes_on_path.end());
  std::vector<int> path;
  path.reserve(nodes_on_path.size() - 1);
  for (std::size_t i = 0; i + 1 < nodes_on_path.size(); ++i) {
    int e = substrate.edge_index(nodes_on_path[i], nodes_on_path[i + 1]);
    if (e < 0)
      throw Error("tree edge missing direction (" + substrate.nodes[nodes_on_path[i]].id +
                  " -> " + substrate.nodes[nodes_on_path[i + 1]].id + ")");
    path.push_back(e);
  }
  return path;
}

}  // namespace vne
