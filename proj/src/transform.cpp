#include "vne/transform.hpp"

#include <algorithm>
#include <json.hpp>
#include <unordered_map>

namespace vne {

namespace {

ResourceVec top_cost_vec(std::size_t tau) {
  return ResourceVec(tau, Quantity::saturated());
}

ResourceVec unbounded_vec(std::size_t tau) {
  return ResourceVec(tau, Quantity::unbounded());
}

}  // namespace

TransformResult bidirectionalize(const Substrate& substrate) {
  TransformResult out{substrate, {}};
  std::size_t original_edges = substrate.edges.size();
  for (std::size_t k = 0; k < original_edges; ++k) {
    const SubstrateEdge& e = out.substrate.edges[k];
    if (out.substrate.edge_index(e.dst, e.src) >= 0) continue;
    int src = e.src, dst = e.dst;
    out.substrate.add_edge(dst, src, zero_vec(substrate.tau), zero_vec(substrate.tau));
    out.trace.records.push_back(
        AddedReverseEdge{substrate.nodes[dst].id, substrate.nodes[src].id});
  }
  return out;
}

TransformResult leafify(const Substrate& substrate, int root) {
  RootedTree tree = RootedTree::build(substrate, root);
  TransformResult out{substrate, {}};
  std::size_t original_nodes = substrate.nodes.size();
  for (std::size_t v = 0; v < original_nodes; ++v) {
    if (tree.children[v].empty()) continue;
    if (vec_is_zero(out.substrate.nodes[v].capacity)) continue;
    std::string node_id = out.substrate.nodes[v].id;
    std::string leaf_id = node_id + "~leaf";
    int leaf = out.substrate.add_node(leaf_id, out.substrate.nodes[v].capacity,
                                      out.substrate.nodes[v].cost);
    out.substrate.nodes[v].capacity = zero_vec(substrate.tau);
    out.substrate.nodes[v].cost = top_cost_vec(substrate.tau);
    out.substrate.add_edge(static_cast<int>(v), leaf, unbounded_vec(substrate.tau),
                           zero_vec(substrate.tau));
    out.substrate.add_edge(leaf, static_cast<int>(v), unbounded_vec(substrate.tau),
                           zero_vec(substrate.tau));
    out.trace.records.push_back(LeafAdded{node_id, leaf_id});
  }
  return out;
}

namespace {

// One Split step: hand the first half of v's children to a fresh left node
// and the rest to a fresh right node, then recurse where needed.
void split_node(Substrate& s, TransformTrace& trace, std::vector<std::vector<int>>& children,
                int v, int& fresh_counter, const std::string& base_id) {
  std::vector<int> kids = children[v];
  int t = static_cast<int>(kids.size());
  int half = t / 2;

  auto make_internal = [&](const std::string& id) {
    return s.add_node(id, zero_vec(s.tau), top_cost_vec(s.tau));
  };
  std::string left_id = base_id + "~s" + std::to_string(fresh_counter++);
  std::string right_id = base_id + "~s" + std::to_string(fresh_counter++);
  int left = make_internal(left_id);
  int right = make_internal(right_id);
  children.resize(s.nodes.size());

  NodeSplit record{s.nodes[v].id, left_id, right_id, {}, {}};
  auto move_child = [&](int child, int to) {
    // The edges between v and the child keep their capacities and costs,
    // they just hang off the fresh node now.
    int down = s.edge_index(v, child);
    int up = s.edge_index(child, v);
    if (down < 0 || up < 0) throw Error("split: missing parent-child edge");
    s.edges[down].src = to;
    s.edges[up].dst = to;
    children[to].push_back(child);
  };
  for (int i = 0; i < half; ++i) {
    record.left_children.push_back(s.nodes[kids[i]].id);
    move_child(kids[i], left);
  }
  for (int i = half; i < t; ++i) {
    record.right_children.push_back(s.nodes[kids[i]].id);
    move_child(kids[i], right);
  }
  s.reindex();
  children[v] = {left, right};
  for (int fresh : {left, right}) {
    s.add_edge(v, fresh, unbounded_vec(s.tau), zero_vec(s.tau));
    s.add_edge(fresh, v, unbounded_vec(s.tau), zero_vec(s.tau));
  }
  trace.records.push_back(std::move(record));
  if (static_cast<int>(children[left].size()) > 2)
    split_node(s, trace, children, left, fresh_counter, base_id);
  if (static_cast<int>(children[right].size()) > 2)
    split_node(s, trace, children, right, fresh_counter, base_id);
}

}  // namespace

TransformResult binarize(const Substrate& substrate, int root) {
  RootedTree tree = RootedTree::build(substrate, root);
  TransformResult out{substrate, {}};
  std::vector<std::vector<int>> children = tree.children;
  std::size_t original_nodes = substrate.nodes.size();
  for (std::size_t v = 0; v < original_nodes; ++v) {
    if (children[v].size() <= 2) continue;
    int counter = 0;
    split_node(out.substrate, out.trace, children, static_cast<int>(v), counter,
               substrate.nodes[v].id);
  }
  return out;
}

TransformResult pad_full_binary(const Substrate& substrate, int root) {
  RootedTree tree = RootedTree::build(substrate, root);
  TransformResult out{substrate, {}};
  std::size_t original_nodes = substrate.nodes.size();
  for (std::size_t v = 0; v < original_nodes; ++v) {
    if (tree.children[v].size() != 1) continue;
    std::string pad_id = out.substrate.nodes[v].id + "~pad";
    int pad = out.substrate.add_node(pad_id, zero_vec(substrate.tau), top_cost_vec(substrate.tau));
    out.substrate.add_edge(static_cast<int>(v), pad, zero_vec(substrate.tau),
                           zero_vec(substrate.tau));
    out.substrate.add_edge(pad, static_cast<int>(v), zero_vec(substrate.tau),
                           zero_vec(substrate.tau));
    out.trace.records.push_back(LeafPadded{out.substrate.nodes[v].id, pad_id});
  }
  return out;
}

Substrate apply_trace(const Substrate& substrate, const TransformTrace& trace) {
  Substrate s = substrate;
  for (const TraceRecord& record : trace.records) {
    if (const auto* r = std::get_if<AddedReverseEdge>(&record)) {
      s.add_edge(s.require_node(r->src), s.require_node(r->dst), zero_vec(s.tau), zero_vec(s.tau));
    } else if (const auto* r = std::get_if<LeafAdded>(&record)) {
      int v = s.require_node(r->node);
      int leaf = s.add_node(r->leaf, s.nodes[v].capacity, s.nodes[v].cost);
      s.nodes[v].capacity = zero_vec(s.tau);
      s.nodes[v].cost = top_cost_vec(s.tau);
      s.add_edge(v, leaf, unbounded_vec(s.tau), zero_vec(s.tau));
      s.add_edge(leaf, v, unbounded_vec(s.tau), zero_vec(s.tau));
    } else if (const auto* r = std::get_if<NodeSplit>(&record)) {
      int v = s.require_node(r->node);
      int left = s.add_node(r->left, zero_vec(s.tau), top_cost_vec(s.tau));
      int right = s.add_node(r->right, zero_vec(s.tau), top_cost_vec(s.tau));
      auto move_child = [&](const std::string& child_id, int to) {
        int child = s.require_node(child_id);
        int down = s.edge_index(v, child);
        int up = s.edge_index(child, v);
        if (down < 0 || up < 0) throw Error("trace replay: missing parent-child edge");
        s.edges[down].src = to;
        s.edges[up].dst = to;
      };
      for (const std::string& c : r->left_children) move_child(c, left);
      for (const std::string& c : r->right_children) move_child(c, right);
      s.reindex();
      for (int fresh : {left, right}) {
        s.add_edge(v, fresh, unbounded_vec(s.tau), zero_vec(s.tau));
        s.add_edge(fresh, v, unbounded_vec(s.tau), zero_vec(s.tau));
      }
    } else if (const auto* r = std::get_if<LeafPadded>(&record)) {
      int v = s.require_node(r->node);
      int pad = s.add_node(r->pad, zero_vec(s.tau), top_cost_vec(s.tau));
      s.add_edge(v, pad, zero_vec(s.tau), zero_vec(s.tau));
      s.add_edge(pad, v, zero_vec(s.tau), zero_vec(s.tau));
    }
  }
  return s;
}

Mapping lift_mapping(const std::vector<TransformTrace>& traces, const Substrate& original,
                     const Substrate& transformed, const Request& request,
                     const Mapping& mapping) {
  if (mapping.node_map.size() != request.nodes.size())
    throw Error("lift: mapping is not total on request nodes");

  // Fresh node -> node it came from, resolved transitively to an original id.
  std::unordered_map<std::string, std::string> base;
  for (const TransformTrace& trace : traces) {
    for (const TraceRecord& record : trace.records) {
      if (const auto* r = std::get_if<LeafAdded>(&record)) {
        base[r->leaf] = r->node;
      } else if (const auto* r = std::get_if<NodeSplit>(&record)) {
        base[r->left] = r->node;
        base[r->right] = r->node;
      } else if (const auto* r = std::get_if<LeafPadded>(&record)) {
        base[r->pad] = r->node;
      }
    }
  }
  auto lift_node = [&](int v) {
    std::string id = transformed.nodes.at(v).id;
    for (auto it = base.find(id); it != base.end(); it = base.find(id)) id = it->second;
    int idx = original.node_index(id);
    if (idx < 0) throw Error("lift: node \"" + id + "\" is absent from the original substrate");
    return idx;
  };

  // Edge paths are recomputed on the original tree; routing needs both edge
  // directions, so apply any recorded reverse-edge completions first.
  Substrate routing = original;
  for (const TransformTrace& trace : traces)
    for (const TraceRecord& record : trace.records)
      if (const auto* r = std::get_if<AddedReverseEdge>(&record))
        routing.add_edge(routing.require_node(r->src), routing.require_node(r->dst),
                         zero_vec(routing.tau), zero_vec(routing.tau));

  Mapping lifted;
  lifted.node_map.resize(request.nodes.size());
  for (std::size_t i = 0; i < request.nodes.size(); ++i)
    lifted.node_map[i] = lift_node(mapping.node_map[i]);
  lifted.edge_paths.resize(request.edges.size());
  for (std::size_t k = 0; k < request.edges.size(); ++k) {
    const RequestEdge& e = request.edges[k];
    std::vector<int> routed =
        unique_tree_path(routing, lifted.node_map[e.src], lifted.node_map[e.dst]);
    // Translate routing-closure edges back to original edges. A path that
    // needs an added reverse direction (possible only for zero-demand request
    // edges) cannot be expressed on the original, so refuse rather than
    // return a mapping for a different substrate.
    std::vector<int>& path = lifted.edge_paths[k];
    for (int ei : routed) {
      int oe = original.edge_index(routing.edges[ei].src, routing.edges[ei].dst);
      if (oe < 0)
        throw Error("lift: path for " + request.nodes[e.src].id + "->" +
                    request.nodes[e.dst].id + " needs substrate direction (" +
                    routing.nodes[routing.edges[ei].src].id + " -> " +
                    routing.nodes[routing.edges[ei].dst].id +
                    ") absent from the original; bidirectionalize the instance first");
      path.push_back(oe);
    }
  }
  return lifted;
}

std::string serialize_trace(const std::vector<TransformTrace>& traces) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const TransformTrace& trace : traces) {
    for (const TraceRecord& record : trace.records) {
      nlohmann::ordered_json j;
      if (const auto* r = std::get_if<AddedReverseEdge>(&record)) {
        j = {{"kind", "added_reverse_edge"}, {"src", r->src}, {"dst", r->dst}};
      } else if (const auto* r = std::get_if<LeafAdded>(&record)) {
        j = {{"kind", "leaf_added"}, {"node", r->node}, {"leaf", r->leaf}};
      } else if (const auto* r = std::get_if<NodeSplit>(&record)) {
        j = {{"kind", "node_split"},
             {"node", r->node},
             {"left", r->left},
             {"right", r->right},
             {"left_children", r->left_children},
             {"right_children", r->right_children}};
      } else if (const auto* r = std::get_if<LeafPadded>(&record)) {
        j = {{"kind", "leaf_padded"}, {"node", r->node}, {"pad", r->pad}};
      }
      arr.push_back(j);
    }
  }
  return arr.dump(2) + "\n";
}

}  // namespace vne
