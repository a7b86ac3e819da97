#include "vne/quantity.hpp"

#include <algorithm>
#include <cctype>

namespace vne {

Quantity Quantity::saturating_add(Quantity other) const {
  if (raw_ == kUnboundedRaw || other.raw_ == kUnboundedRaw) return unbounded();
  if (raw_ >= kSaturatedRaw || other.raw_ >= kSaturatedRaw) return saturated();
  if (raw_ > kMaxFinite - other.raw_) return saturated();
  return from_micro(raw_ + other.raw_);
}

std::string Quantity::to_decimal() const {
  if (is_top()) return "inf";
  std::int64_t whole = raw_ / kMicroPerUnit;
  std::int64_t frac = raw_ % kMicroPerUnit;
  std::string out = std::to_string(whole);
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(digits.begin(), 6 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += '.';
    out += digits;
  }
  return out;
}

Quantity parse_quantity(const std::string& text, bool allow_inf) {
  if (text == "inf") {
    if (!allow_inf) throw Error("\"inf\" is not allowed here");
    return Quantity::unbounded();
  }
  if (text.empty()) throw Error("empty quantity");
  std::size_t i = 0;
  if (text[0] == '-') throw Error("negative quantity \"" + text + "\"");
  if (text[0] == '+') throw Error("explicit sign in quantity \"" + text + "\"");

  std::int64_t whole = 0;
  bool any_digit = false;
  for (; i < text.size() && text[i] != '.'; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error("malformed quantity \"" + text + "\"");
    any_digit = true;
    if (whole > (Quantity::kMaxFinite / 10))
      throw Error("quantity out of range \"" + text + "\"");
    whole = whole * 10 + (text[i] - '0');
  }
  std::int64_t frac = 0;
  int frac_digits = 0;
  if (i < text.size()) {
    ++i;  // skip '.'
    if (i == text.size()) throw Error("malformed quantity \"" + text + "\"");
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error("malformed quantity \"" + text + "\"");
      ++frac_digits;
      if (frac_digits > 6)
        throw Error("more than 6 fractional digits in \"" + text + "\"");
      frac = frac * 10 + (text[i] - '0');
    }
  }
  if (!any_digit) throw Error("malformed quantity \"" + text + "\"");
  for (int d = frac_digits; d < 6; ++d) frac *= 10;
  if (whole > (Quantity::kMaxFinite - frac) / Quantity::kMicroPerUnit)
    throw Error("quantity out of range \"" + text + "\"");
  return Quantity::from_micro(whole * Quantity::kMicroPerUnit + frac);
}

bool vec_leq(std::span<const Quantity> a, std::span<const Quantity> b) {
  if (a.size() != b.size())
    throw Error("resource vector dimension mismatch (" + std::to_string(a.size()) +
                " vs " + std::to_string(b.size()) + ")");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] <= b[i])) return false;
  return true;
}

ResourceVec vec_sum(std::span<const ResourceVec> vs, std::size_t tau) {
  ResourceVec acc = zero_vec(tau);
  for (const ResourceVec& v : vs) {
    if (v.size() != tau) throw Error("resource vector dimension mismatch in sum");
    for (std::size_t i = 0; i < tau; ++i) acc[i] = acc[i].saturating_add(v[i]);
  }
  return acc;
}

bool vec_is_zero(std::span<const Quantity> v) {
  return std::all_of(v.begin(), v.end(), [](Quantity q) { return q.is_zero(); });
}

void vec_add_in_place(std::span<Quantity> acc, std::span<const Quantity> v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i].saturating_add(v[i]);
}

ResourceVec zero_vec(std::size_t tau) { return ResourceVec(tau, Quantity::zero()); }

Cost Cost::saturating_add(Cost other) const {
  if (pico_ >= kSaturatedPico || other.pico_ >= kSaturatedPico) return saturated();
  __int128 sum = pico_ + other.pico_;
  if (sum > kMaxFinitePico) return saturated();
  return from_pico(sum);
}

Cost Cost::dot(std::span<const Quantity> demand, std::span<const Quantity> cost) {
  if (demand.size() != cost.size()) throw Error("resource vector dimension mismatch in dot");
  Cost acc;
  for (std::size_t i = 0; i < demand.size(); ++i) {
    if (demand[i].is_zero() || cost[i].is_zero()) continue;
    if (demand[i].is_top() || cost[i].is_top()) return saturated();
    __int128 prod = static_cast<__int128>(demand[i].micro()) * cost[i].micro();
    if (prod > kMaxFinitePico) return saturated();
    acc = acc.saturating_add(from_pico(prod));
    if (acc.is_saturated()) return saturated();
  }
  return acc;
}

Cost Cost::times(std::int64_t factor) const {
  if (factor == 0) return zero();
  if (is_saturated()) return saturated();
  if (pico_ > kMaxFinitePico / factor) return saturated();
  return from_pico(pico_ * factor);
}

std::string Cost::to_decimal() const {
  if (is_saturated()) return "inf";
  __int128 whole = pico_ / kPicoPerUnit;
  __int128 frac = pico_ % kPicoPerUnit;
  // int128 to string by repeated division.
  auto u128_str = [](__int128 v) {
    if (v == 0) return std::string("0");
    std::string s;
    while (v > 0) {
      s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
  };
  std::string out = u128_str(whole);
  if (frac != 0) {
    std::string digits = u128_str(frac);
    digits.insert(digits.begin(), 12 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += '.';
    out += digits;
  }
  return out;
}

Cost Cost::from_decimal(const std::string& text) {
  if (text == "inf") return saturated();
  if (text.empty()) throw Error("empty cost");
  if (text[0] == '-') throw Error("negative cost \"" + text + "\"");
  std::size_t i = 0;
  __int128 whole = 0;
  bool any_digit = false;
  for (; i < text.size() && text[i] != '.'; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error("malformed cost \"" + text + "\"");
    any_digit = true;
    whole = whole * 10 + (text[i] - '0');
    if (whole > kMaxFinitePico / kPicoPerUnit)
      throw Error("cost out of range \"" + text + "\"");
  }
  __int128 frac = 0;
  int frac_digits = 0;
  if (i < text.size()) {
    ++i;
    if (i == text.size()) throw Error("malformed cost \"" + text + "\"");
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error("malformed cost \"" + text + "\"");
      ++frac_digits;
      if (frac_digits > 12)
        throw Error("more than 12 fractional digits in \"" + text + "\"");
      frac = frac * 10 + (text[i] - '0');
    }
  }
  if (!any_digit) throw Error("malformed cost \"" + text + "\"");
  for (int d = frac_digits; d < 12; ++d) frac *= 10;
  return from_pico(whole * kPicoPerUnit + frac);
}

}  // namespace vne
