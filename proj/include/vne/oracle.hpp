#pragma once

#include "vne/model.hpp"

namespace vne {

// Exhaustive exact solver for tree substrates, used as ground truth against
// the dynamic program. Enumerates all s^r node assignments and realizes each
// request edge on the unique tree path between its endpoints; on a tree and
// under nonnegative costs no other routing is ever cheaper or less loaded.
// Shares only the data model with the solver, nothing of its machinery.
//
// Assignments are visited in lexicographic order and ties keep the earliest,
// so results are bit-identical across runs.
SolveResult brute_force(const Substrate& substrate, const Request& request);

}  // namespace vne
