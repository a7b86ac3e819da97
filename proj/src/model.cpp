#include "vne/model.hpp"

namespace vne {

namespace {
std::int64_t pair_key(int src, int dst) {
  return (static_cast<std::int64_t>(src) << 32) | static_cast<std::uint32_t>(dst);
}
}  // namespace

int Substrate::add_node(std::string id, ResourceVec capacity, ResourceVec cost) {
  if (node_by_id_.count(id)) throw Error("duplicate substrate node id \"" + id + "\"");
  int idx = static_cast<int>(nodes.size());
  node_by_id_.emplace(id, idx);
  nodes.push_back({std::move(id), std::move(capacity), std::move(cost)});
  return idx;
}

int Substrate::add_edge(int src, int dst, ResourceVec capacity, ResourceVec cost) {
  if (src == dst)
    throw Error("self-loop on substrate node \"" + nodes.at(src).id + "\"");
  if (edge_by_pair_.count(pair_key(src, dst)))
    throw Error("duplicate substrate edge (" + nodes.at(src).id + ", " + nodes.at(dst).id + ")");
  int idx = static_cast<int>(edges.size());
  edge_by_pair_.emplace(pair_key(src, dst), idx);
  edges.push_back({src, dst, std::move(capacity), std::move(cost)});
  return idx;
}

int Substrate::node_index(const std::string& id) const {
  auto it = node_by_id_.find(id);
  return it == node_by_id_.end() ? -1 : it->second;
}

int Substrate::require_node(const std::string& id) const {
  int idx = node_index(id);
  if (idx < 0) throw Error("unknown substrate node \"" + id + "\"");
  return idx;
}

int Substrate::edge_index(int src, int dst) const {
  auto it = edge_by_pair_.find(pair_key(src, dst));
  return it == edge_by_pair_.end() ? -1 : it->second;
}

void Substrate::reindex() {
  node_by_id_.clear();
  edge_by_pair_.clear();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!node_by_id_.emplace(nodes[i].id, static_cast<int>(i)).second)
      throw Error("duplicate substrate node id \"" + nodes[i].id + "\"");
  }
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (!edge_by_pair_.emplace(pair_key(edges[k].src, edges[k].dst), static_cast<int>(k)).second)
      throw Error("duplicate substrate edge");
  }
}

int Request::add_node(std::string id, ResourceVec demand) {
  if (node_by_id_.count(id)) throw Error("duplicate request node id \"" + id + "\"");
  int idx = static_cast<int>(nodes.size());
  node_by_id_.emplace(id, idx);
  nodes.push_back({std::move(id), std::move(demand)});
  return idx;
}

int Request::add_edge(int src, int dst, ResourceVec demand) {
  if (src == dst) throw Error("self-loop on request node \"" + nodes.at(src).id + "\"");
  for (const RequestEdge& e : edges)
    if (e.src == src && e.dst == dst)
      throw Error("duplicate request edge (" + nodes.at(src).id + ", " + nodes.at(dst).id + ")");
  int idx = static_cast<int>(edges.size());
  edges.push_back({src, dst, std::move(demand)});
  return idx;
}

int Request::node_index(const std::string& id) const {
  auto it = node_by_id_.find(id);
  return it == node_by_id_.end() ? -1 : it->second;
}

int Request::require_node(const std::string& id) const {
  int idx = node_index(id);
  if (idx < 0) throw Error("unknown request node \"" + id + "\"");
  return idx;
}

void Request::reindex() {
  node_by_id_.clear();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!node_by_id_.emplace(nodes[i].id, static_cast<int>(i)).second)
      throw Error("duplicate request node id \"" + nodes[i].id + "\"");
  }
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Infeasible: return "Infeasible";
  }
  return "?";
}

}  // namespace vne
