#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vne/quantity.hpp"

namespace vne {

// Identifiers are opaque strings in files; everything internal runs on dense
// indices into the node/edge vectors.

struct SubstrateNode {
  std::string id;
  ResourceVec capacity;
  ResourceVec cost;
};

struct SubstrateEdge {
  int src = -1;
  int dst = -1;
  ResourceVec capacity;
  ResourceVec cost;
};

class Substrate {
 public:
  std::size_t tau = 1;
  std::vector<SubstrateNode> nodes;
  std::vector<SubstrateEdge> edges;

  int add_node(std::string id, ResourceVec capacity, ResourceVec cost);
  int add_edge(int src, int dst, ResourceVec capacity, ResourceVec cost);

  int node_index(const std::string& id) const;  // -1 if absent
  int require_node(const std::string& id) const;
  int edge_index(int src, int dst) const;  // -1 if absent

  // Rebuilds the id and (src,dst) lookup tables; call after bulk edits.
  void reindex();

 private:
  std::unordered_map<std::string, int> node_by_id_;
  std::unordered_map<std::int64_t, int> edge_by_pair_;
};

struct RequestNode {
  std::string id;
  ResourceVec demand;
};

struct RequestEdge {
  int src = -1;
  int dst = -1;
  ResourceVec demand;
};

class Request {
 public:
  std::size_t tau = 1;
  std::vector<RequestNode> nodes;
  std::vector<RequestEdge> edges;

  int add_node(std::string id, ResourceVec demand);
  int add_edge(int src, int dst, ResourceVec demand);

  int node_index(const std::string& id) const;
  int require_node(const std::string& id) const;

  void reindex();

 private:
  std::unordered_map<std::string, int> node_by_id_;
};

struct Instance {
  std::size_t tau = 1;
  Substrate substrate;
  Request request;
};

// node_map[i] = substrate node hosting request node i.
// edge_paths[k] = substrate edge indices forming the directed walk of request
// edge k; empty exactly when both endpoints share a substrate node.
struct Mapping {
  std::vector<int> node_map;
  std::vector<std::vector<int>> edge_paths;

  bool operator==(const Mapping&) const = default;
};

enum class SolveStatus { Optimal, Infeasible };

struct SolveStats {
  std::size_t request_nodes = 0;
  std::size_t substrate_nodes = 0;
  std::size_t transformed_nodes = 0;
  std::size_t table_entries = 0;
  std::uint64_t inner_iterations = 0;
  double wall_ms = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  Cost cost;          // meaningful iff Optimal
  Mapping mapping;    // meaningful iff Optimal
  SolveStats stats;
};

const char* to_string(SolveStatus status);

}  // namespace vne
