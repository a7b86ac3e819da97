#pragma once

#include <string>
#include <vector>

#include "vne/model.hpp"

namespace vne {

enum class ViolationKind {
  NodeCapacity,        // summed node demands exceed a substrate node capacity
  EdgeCapacity,        // summed edge demands exceed a substrate edge capacity
  PathEndpoints,       // path does not run between the mapped endpoints
  PathDisconnected,    // path edges do not form a simple connected walk
  PerElementCapacity,  // one element's demand alone exceeds a capacity
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string element;   // request element ("u" or "u->w")
  std::string target;    // substrate element it was mapped onto, if any
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(ViolationKind kind, std::string element, std::string target, std::string detail);
};

// The per-element conditions: path endpoints and connectivity, node demand
// within host capacity, edge demand within capacity of every path edge.
// Collects all violations instead of stopping at the first.
ValidationReport check_valid(const Substrate& substrate, const Request& request,
                             const Mapping& mapping);

// The summed conditions on top of validity: total demand mapped onto each
// substrate node and edge stays within its capacity. Includes the validity
// violations, so ok here implies valid.
ValidationReport check_feasible(const Substrate& substrate, const Request& request,
                                const Mapping& mapping);

// Exact embedding cost; requires a valid mapping. Saturation is reported as
// the distinguished top value, never silently wrapped.
Cost mapping_cost(const Substrate& substrate, const Request& request, const Mapping& mapping);

}  // namespace vne
