#pragma once

#include <cstdint>
#include <string_view>

#include "vne/model.hpp"

namespace vne {

// SplitMix64: a small, well-known 64-bit generator that behaves identically
// on every platform, which is what golden-file determinism needs. Streams
// for different element classes are derived by hashing a tag into the seed,
// so adding draws to one class never shifts another.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0,1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform micro-unit value on [lo, hi], endpoints inclusive, given in
  // whole units. The modulo bias over a <= 10^8-wide range is < 2^-37 and
  // irrelevant next to the determinism this buys.
  std::int64_t next_micro_between(std::int64_t lo_units, std::int64_t hi_units) {
    std::int64_t lo = lo_units * 1'000'000;
    std::int64_t hi = hi_units * 1'000'000;
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

// Seed for the stream of one element class (FNV-1a of the tag, mixed once).
std::uint64_t derive_stream(std::uint64_t seed, std::string_view tag);

// Three-level fat-tree forwarding abstraction built from f-port switches:
// one root, f pod switches, f^2/2 top-of-rack switches and f^3/4 servers.
// Switches carry zero capacity; server capacities and all costs are drawn
// from [1,10], edge bandwidths are the layer base (1, f/2, (f/2)^2) times a
// perturbation from [1,10], independently per direction.
Substrate gen_fat_tree(int ports, std::uint64_t seed);

// Directed Erdos-Renyi request: every ordered pair gets an edge with
// probability p; graphs whose underlying undirected graph is disconnected
// are discarded and resampled. Node demands are uniform on [1,5]; each node
// with outgoing edges draws a total outgoing bandwidth from [1,5] and splits
// it across those edges by normalized uniform weights.
Request gen_er_request(std::size_t nodes, double p, std::uint64_t seed,
                       int max_resample = 1000);

// Two-node substrate with capacity B/2 each (B the multiset total), zero
// costs and zero edge capacity, plus one edgeless request node per element.
// Cost-0 solvable exactly when the multiset splits into two equal halves.
Instance gen_partition_gadget(const std::vector<std::int64_t>& elements);

}  // namespace vne
