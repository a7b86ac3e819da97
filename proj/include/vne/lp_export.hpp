#pragma once

#include <string>

#include "vne/model.hpp"

namespace vne {

// Emits the multi-commodity-flow integer program for the instance in CPLEX
// LP text format, for cross-checking against any external MILP solver.
// Works for arbitrary substrates, not only trees.
//
// Variables: y_<i>_<u> (request node i on substrate node u) and
// z_<i>_<j>__<u>_<v> (request edge (i,j) routed over substrate edge (u,v)).
// Identifier characters outside [A-Za-z0-9_] are percent-escaped.
//
// Constraint families, in emission order: every request node mapped once;
// nodes with insufficient capacity forbidden; unit flow per request edge and
// substrate node; edges with insufficient capacity forbidden; node and edge
// capacity sums, one row per resource dimension. Rows whose capacity is
// unbounded are vacuous and omitted.
std::string export_lp(const Substrate& substrate, const Request& request);

}  // namespace vne
