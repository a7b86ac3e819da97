#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vne {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Nonnegative fixed-point scalar in micro-units (decimal value * 10^6).
//
// The raw encoding is ordered so that plain integer comparison gives the
// intended capacity semantics:
//   0 .. kMaxFinite   finite amounts
//   kSaturated        result of a sum that exceeded kMaxFinite ("MAX")
//   kUnbounded        the "inf" value of the instance format
// Every finite amount fits below both sentinels, so demand <= capacity is a
// raw comparison throughout.
class Quantity {
 public:
  static constexpr std::int64_t kMicroPerUnit = 1'000'000;
  static constexpr std::int64_t kMaxFinite = std::int64_t{1} << 62;

  constexpr Quantity() = default;

  static constexpr Quantity from_micro(std::int64_t micro) {
    Quantity q;
    q.raw_ = micro;
    return q;
  }
  static constexpr Quantity from_units(std::int64_t units) {
    return from_micro(units * kMicroPerUnit);
  }
  static constexpr Quantity zero() { return from_micro(0); }
  static constexpr Quantity saturated() { return from_micro(kSaturatedRaw); }
  static constexpr Quantity unbounded() { return from_micro(kUnboundedRaw); }

  constexpr bool is_finite() const { return raw_ <= kMaxFinite; }
  constexpr bool is_saturated() const { return raw_ == kSaturatedRaw; }
  constexpr bool is_unbounded() const { return raw_ == kUnboundedRaw; }
  // Saturated and unbounded both act as "no effective limit" capacities.
  constexpr bool is_top() const { return raw_ >= kSaturatedRaw; }
  constexpr bool is_zero() const { return raw_ == 0; }

  // Finite micro-unit value; top sentinels have no finite reading.
  constexpr std::int64_t micro() const { return raw_; }

  friend constexpr bool operator==(Quantity a, Quantity b) { return a.raw_ == b.raw_; }
  friend constexpr bool operator!=(Quantity a, Quantity b) { return a.raw_ != b.raw_; }
  friend constexpr bool operator<=(Quantity a, Quantity b) { return a.raw_ <= b.raw_; }
  friend constexpr bool operator<(Quantity a, Quantity b) { return a.raw_ < b.raw_; }

  // Saturates at kSaturated instead of wrapping. Unbounded absorbs.
  Quantity saturating_add(Quantity other) const;

  // Exact decimal rendering ("2", "0.5", "inf"). Saturated renders as "inf"
  // as well: both sentinels occupy the same slot in the file format.
  std::string to_decimal() const;

 private:
  static constexpr std::int64_t kSaturatedRaw = std::int64_t{1} << 62 | std::int64_t{1} << 61;
  static constexpr std::int64_t kUnboundedRaw = std::numeric_limits<std::int64_t>::max();

  std::int64_t raw_ = 0;
};

// Parses a nonnegative decimal with at most 6 fractional digits, or "inf"
// when allow_inf is set. Throws vne::Error with a message naming the defect.
Quantity parse_quantity(const std::string& text, bool allow_inf);

// tau-dimensional vector of quantities, compared component-wise.
using ResourceVec = std::vector<Quantity>;

// a <= b component-wise; throws on dimension mismatch.
bool vec_leq(std::span<const Quantity> a, std::span<const Quantity> b);

// Component-wise saturating sum; the empty collection yields all zeros.
ResourceVec vec_sum(std::span<const ResourceVec> vs, std::size_t tau);

bool vec_is_zero(std::span<const Quantity> v);

void vec_add_in_place(std::span<Quantity> acc, std::span<const Quantity> v);

ResourceVec zero_vec(std::size_t tau);

// Embedding-cost scalar in pico-units (micro demand * micro cost), kept in a
// 128-bit integer so that demand*cost products stay exact. Truncating the
// products back to micro-units would break exact scaling: e.g. scaling every
// cost by 7 must scale the optimum by exactly 7.
class Cost {
 public:
  constexpr Cost() = default;

  static constexpr Cost zero() { return Cost(); }
  static Cost saturated() {
    Cost c;
    c.pico_ = kSaturatedPico;
    return c;
  }
  static Cost from_pico(__int128 pico) {
    Cost c;
    c.pico_ = pico;
    return c;
  }
  static Cost from_units(std::int64_t units) {
    return from_pico(static_cast<__int128>(units) * kPicoPerUnit);
  }

  constexpr bool is_saturated() const { return pico_ >= kSaturatedPico; }
  constexpr __int128 pico() const { return pico_; }

  friend constexpr bool operator==(Cost a, Cost b) { return a.pico_ == b.pico_; }
  friend constexpr bool operator!=(Cost a, Cost b) { return a.pico_ != b.pico_; }
  friend constexpr bool operator<(Cost a, Cost b) { return a.pico_ < b.pico_; }
  friend constexpr bool operator<=(Cost a, Cost b) { return a.pico_ <= b.pico_; }

  Cost saturating_add(Cost other) const;

  // demand^T cost with the 0 * top := 0 convention. A positive demand meeting
  // a top-sentinel cost saturates, which downstream minimization rejects.
  static Cost dot(std::span<const Quantity> demand, std::span<const Quantity> cost);

  // Scales by a nonnegative integer factor (saturating).
  Cost times(std::int64_t factor) const;

  std::string to_decimal() const;
  // Accepts at most 12 fractional digits.
  static Cost from_decimal(const std::string& text);

  static constexpr __int128 kPicoPerUnit =
      static_cast<__int128>(1'000'000) * 1'000'000;
  static constexpr __int128 kMaxFinitePico = static_cast<__int128>(1) << 100;

 private:
  static constexpr __int128 kSaturatedPico = static_cast<__int128>(1) << 110;

  __int128 pico_ = 0;
};

}  // namespace vne
