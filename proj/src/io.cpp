#include "vne/io.hpp"

#include <cmath>
#include <json.hpp>

namespace vne {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kMaxRequestNodes = 30;  // subset masks are 32-bit

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : known)
      if (it.key() == k) ok = true;
    if (!ok) fail(where, "unknown key \"" + it.key() + "\"");
  }
}

std::string id_from(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "identifier must be a string");
  std::string id = j.get<std::string>();
  if (id.empty()) fail(where, "empty identifier");
  return id;
}

Quantity quantity_from(const json& j, bool allow_inf, const std::string& where) {
  try {
    if (j.is_string()) return parse_quantity(j.get<std::string>(), allow_inf);
    if (j.is_number_integer() || j.is_number_unsigned()) {
      std::int64_t v = j.get<std::int64_t>();
      if (v < 0) fail(where, "negative quantity \"" + std::to_string(v) + "\"");
      if (v > Quantity::kMaxFinite / Quantity::kMicroPerUnit)
        fail(where, "quantity out of range");
      return Quantity::from_units(v);
    }
    if (j.is_number_float()) {
      double x = j.get<double>();
      if (x < 0) fail(where, "negative quantity \"" + std::to_string(x) + "\"");
      double scaled = x * static_cast<double>(Quantity::kMicroPerUnit);
      if (scaled > static_cast<double>(Quantity::kMaxFinite))
        fail(where, "quantity out of range");
      double rounded = std::nearbyint(scaled);
      // A clean 6-digit decimal lands within double noise of an integer.
      if (std::abs(scaled - rounded) > 1e-3)
        fail(where, "more than 6 fractional digits");
      return Quantity::from_micro(static_cast<std::int64_t>(rounded));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "expected a decimal or \"inf\"");
}

ResourceVec vec_from(const json& j, std::size_t tau, bool allow_inf, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of quantities");
  if (j.size() != tau)
    fail(where, "expected " + std::to_string(tau) + " components, got " + std::to_string(j.size()));
  ResourceVec v;
  v.reserve(tau);
  for (std::size_t i = 0; i < tau; ++i)
    v.push_back(quantity_from(j[i], allow_inf, where + "[" + std::to_string(i) + "]"));
  return v;
}

ordered_json vec_to_json(const ResourceVec& v) {
  ordered_json arr = ordered_json::array();
  for (const Quantity& q : v) arr.push_back(q.to_decimal());
  return arr;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object");
  reject_unknown_keys(doc, {"tau", "substrate", "request"}, "top level");

  Instance inst;
  const json& tau_j = member(doc, "tau", "top level");
  if (!tau_j.is_number_integer() && !tau_j.is_number_unsigned())
    fail("tau", "expected an integer");
  std::int64_t tau = tau_j.get<std::int64_t>();
  if (tau < 1 || tau > 64) fail("tau", "must be between 1 and 64");
  inst.tau = static_cast<std::size_t>(tau);
  inst.substrate.tau = inst.tau;
  inst.request.tau = inst.tau;

  {
    const json& sub = member(doc, "substrate", "top level");
    reject_unknown_keys(sub, {"nodes", "edges"}, "substrate");
    const json& nodes = member(sub, "nodes", "substrate");
    if (!nodes.is_array()) fail("substrate.nodes", "expected an array");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      std::string where = "substrate.nodes[" + std::to_string(i) + "]";
      const json& n = nodes[i];
      reject_unknown_keys(n, {"id", "capacity", "cost"}, where);
      std::string id = id_from(member(n, "id", where), where + ".id");
      ResourceVec cap = vec_from(member(n, "capacity", where), inst.tau, true, where + ".capacity");
      ResourceVec cost = vec_from(member(n, "cost", where), inst.tau, true, where + ".cost");
      try {
        inst.substrate.add_node(std::move(id), std::move(cap), std::move(cost));
      } catch (const Error& e) {
        fail(where, e.what());
      }
    }
    const json& edges = member(sub, "edges", "substrate");
    if (!edges.is_array()) fail("substrate.edges", "expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::string where = "substrate.edges[" + std::to_string(i) + "]";
      const json& e = edges[i];
      reject_unknown_keys(e, {"src", "dst", "capacity", "cost"}, where);
      std::string src = id_from(member(e, "src", where), where + ".src");
      std::string dst = id_from(member(e, "dst", where), where + ".dst");
      int si = inst.substrate.node_index(src);
      int di = inst.substrate.node_index(dst);
      if (si < 0) fail(where + ".src", "unknown substrate node \"" + src + "\"");
      if (di < 0) fail(where + ".dst", "unknown substrate node \"" + dst + "\"");
      ResourceVec cap = vec_from(member(e, "capacity", where), inst.tau, true, where + ".capacity");
      ResourceVec cost = vec_from(member(e, "cost", where), inst.tau, true, where + ".cost");
      try {
        inst.substrate.add_edge(si, di, std::move(cap), std::move(cost));
      } catch (const Error& err) {
        fail(where, err.what());
      }
    }
  }

  {
    const json& req = member(doc, "request", "top level");
    reject_unknown_keys(req, {"nodes", "edges"}, "request");
    const json& nodes = member(req, "nodes", "request");
    if (!nodes.is_array()) fail("request.nodes", "expected an array");
    if (nodes.size() > kMaxRequestNodes)
      fail("request.nodes", "more than " + std::to_string(kMaxRequestNodes) + " request nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      std::string where = "request.nodes[" + std::to_string(i) + "]";
      const json& n = nodes[i];
      reject_unknown_keys(n, {"id", "demand"}, where);
      std::string id = id_from(member(n, "id", where), where + ".id");
      ResourceVec demand = vec_from(member(n, "demand", where), inst.tau, false, where + ".demand");
      try {
        inst.request.add_node(std::move(id), std::move(demand));
      } catch (const Error& e) {
        fail(where, e.what());
      }
    }
    const json& edges = member(req, "edges", "request");
    if (!edges.is_array()) fail("request.edges", "expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::string where = "request.edges[" + std::to_string(i) + "]";
      const json& e = edges[i];
      reject_unknown_keys(e, {"src", "dst", "demand"}, where);
      std::string src = id_from(member(e, "src", where), where + ".src");
      std::string dst = id_from(member(e, "dst", where), where + ".dst");
      int si = inst.request.node_index(src);
      int di = inst.request.node_index(dst);
      if (si < 0) fail(where + ".src", "unknown request node \"" + src + "\"");
      if (di < 0) fail(where + ".dst", "unknown request node \"" + dst + "\"");
      ResourceVec demand = vec_from(member(e, "demand", where), inst.tau, false, where + ".demand");
      try {
        inst.request.add_edge(si, di, std::move(demand));
      } catch (const Error& err) {
        fail(where, err.what());
      }
    }
  }
  return inst;
}

std::string serialize_instance(const Instance& instance) {
  ordered_json doc;
  doc["tau"] = instance.tau;
  ordered_json snodes = ordered_json::array();
  for (const SubstrateNode& n : instance.substrate.nodes)
    snodes.push_back({{"id", n.id}, {"capacity", vec_to_json(n.capacity)}, {"cost", vec_to_json(n.cost)}});
  ordered_json sedges = ordered_json::array();
  for (const SubstrateEdge& e : instance.substrate.edges)
    sedges.push_back({{"src", instance.substrate.nodes[e.src].id},
                      {"dst", instance.substrate.nodes[e.dst].id},
                      {"capacity", vec_to_json(e.capacity)},
                      {"cost", vec_to_json(e.cost)}});
  doc["substrate"] = {{"nodes", snodes}, {"edges", sedges}};
  ordered_json rnodes = ordered_json::array();
  for (const RequestNode& n : instance.request.nodes)
    rnodes.push_back({{"id", n.id}, {"demand", vec_to_json(n.demand)}});
  ordered_json redges = ordered_json::array();
  for (const RequestEdge& e : instance.request.edges)
    redges.push_back({{"src", instance.request.nodes[e.src].id},
                      {"dst", instance.request.nodes[e.dst].id},
                      {"demand", vec_to_json(e.demand)}});
  doc["request"] = {{"nodes", rnodes}, {"edges", redges}};
  return doc.dump(2) + "\n";
}

MappingDocument parse_mapping(const std::string& text, const Instance& instance) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object");
  reject_unknown_keys(doc, {"cost", "node_map", "edge_map"}, "top level");

  MappingDocument out;
  const json& cost_j = member(doc, "cost", "top level");
  try {
    if (cost_j.is_string())
      out.cost = Cost::from_decimal(cost_j.get<std::string>());
    else if (cost_j.is_number())
      out.cost = Cost::from_decimal(cost_j.dump());
    else
      fail("cost", "expected a decimal");
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail("cost", e.what());
  }

  const json& node_map = member(doc, "node_map", "top level");
  if (!node_map.is_object()) fail("node_map", "expected an object");
  out.mapping.node_map.assign(instance.request.nodes.size(), -1);
  for (auto it = node_map.begin(); it != node_map.end(); ++it) {
    int ri = instance.request.node_index(it.key());
    if (ri < 0) fail("node_map", "unknown request node \"" + it.key() + "\"");
    std::string host = id_from(it.value(), "node_map." + it.key());
    int si = instance.substrate.node_index(host);
    if (si < 0) fail("node_map." + it.key(), "unknown substrate node \"" + host + "\"");
    out.mapping.node_map[ri] = si;
  }
  for (std::size_t i = 0; i < out.mapping.node_map.size(); ++i)
    if (out.mapping.node_map[i] < 0)
      fail("node_map", "request node \"" + instance.request.nodes[i].id + "\" is not mapped");

  const json& edge_map = member(doc, "edge_map", "top level");
  if (!edge_map.is_object()) fail("edge_map", "expected an object");
  // Keys are resolved from the request side: every request edge must have its
  // "src->dst" entry, and nothing else may appear.
  out.mapping.edge_paths.resize(instance.request.edges.size());
  std::size_t matched = 0;
  for (std::size_t k = 0; k < instance.request.edges.size(); ++k) {
    const RequestEdge& e = instance.request.edges[k];
    std::string key = instance.request.nodes[e.src].id + "->" + instance.request.nodes[e.dst].id;
    auto it = edge_map.find(key);
    if (it == edge_map.end()) fail("edge_map", "missing entry \"" + key + "\"");
    ++matched;
    const json& seq = *it;
    std::string where = "edge_map." + key;
    if (!seq.is_array() || seq.empty()) fail(where, "expected a node sequence of length >= 1");
    std::vector<int> nodes_on_path;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      std::string id = id_from(seq[i], where + "[" + std::to_string(i) + "]");
      int si = instance.substrate.node_index(id);
      if (si < 0) fail(where, "unknown substrate node \"" + id + "\"");
      nodes_on_path.push_back(si);
    }
    std::vector<int>& path = out.mapping.edge_paths[k];
    for (std::size_t i = 0; i + 1 < nodes_on_path.size(); ++i) {
      int ei = instance.substrate.edge_index(nodes_on_path[i], nodes_on_path[i + 1]);
      if (ei < 0)
        fail(where, "no substrate edge (" + instance.substrate.nodes[nodes_on_path[i]].id + " -> " +
                        instance.substrate.nodes[nodes_on_path[i + 1]].id + ")");
      path.push_back(ei);
    }
  }
  if (matched != edge_map.size()) fail("edge_map", "entry for an unknown request edge");
  return out;
}

std::string serialize_mapping(const Instance& instance, const Mapping& mapping, Cost cost) {
  ordered_json doc;
  doc["cost"] = cost.to_decimal();
  ordered_json nm = ordered_json::object();
  for (std::size_t i = 0; i < instance.request.nodes.size(); ++i)
    nm[instance.request.nodes[i].id] = instance.substrate.nodes[mapping.node_map.at(i)].id;
  doc["node_map"] = nm;
  ordered_json em = ordered_json::object();
  for (std::size_t k = 0; k < instance.request.edges.size(); ++k) {
    const RequestEdge& e = instance.request.edges[k];
    std::string key = instance.request.nodes[e.src].id + "->" + instance.request.nodes[e.dst].id;
    ordered_json seq = ordered_json::array();
    const std::vector<int>& path = mapping.edge_paths.at(k);
    if (path.empty()) {
      seq.push_back(instance.substrate.nodes[mapping.node_map.at(e.src)].id);
    } else {
      seq.push_back(instance.substrate.nodes[instance.substrate.edges[path[0]].src].id);
      for (int ei : path) seq.push_back(instance.substrate.nodes[instance.substrate.edges[ei].dst].id);
    }
    em[key] = seq;
  }
  doc["edge_map"] = em;
  return doc.dump(2) + "\n";
}

}  // namespace vne
