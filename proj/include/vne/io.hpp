#pragma once

#include <string>

#include "vne/model.hpp"

namespace vne {

// Parse failure with a field path or line position in the message.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Instance document: {"tau": N, "substrate": {...}, "request": {...}}.
// Quantities are decimal strings (exact) or JSON numbers; "inf" marks an
// unbounded substrate capacity or cost. At most 6 fractional digits.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance);

struct MappingDocument {
  Mapping mapping;
  Cost cost;
};

// Mapping document: {"cost": decimal, "node_map": {...}, "edge_map": {...}}.
// Edge paths are substrate node id sequences; a single node encodes the
// empty path.
MappingDocument parse_mapping(const std::string& text, const Instance& instance);
std::string serialize_mapping(const Instance& instance, const Mapping& mapping, Cost cost);

}  // namespace vne
