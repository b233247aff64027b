#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mazetree {

/// Exact nonnegative path cost, or Unreachable. Unreachable compares greater
/// than every finite cost, and addition saturates instead of overflowing.
class Cost {
 public:
  constexpr Cost() = default;  // unreachable

  static constexpr Cost finite(std::uint64_t v) {
    Cost c;
    c.raw_ = v;
    if (!c.is_finite()) throw std::overflow_error("Cost::finite: value too large");
    return c;
  }
  static constexpr Cost unreachable() { return Cost{}; }

  constexpr bool is_finite() const { return raw_ != kUnreachable; }

  constexpr std::uint64_t value() const {
    if (!is_finite()) throw std::logic_error("Cost::value on unreachable");
    return raw_;
  }

  friend constexpr Cost operator+(Cost a, Cost b) {
    if (!a.is_finite() || !b.is_finite()) return unreachable();
    const std::uint64_t sum = a.raw_ + b.raw_;
    if (sum < a.raw_ || sum == kUnreachable) return unreachable();
    Cost c;
    c.raw_ = sum;
    return c;
  }

  friend constexpr auto operator<=>(Cost a, Cost b) { return a.raw_ <=> b.raw_; }
  friend constexpr bool operator==(Cost a, Cost b) = default;

  std::string str() const { return is_finite() ? std::to_string(raw_) : "unreachable"; }

 private:
  static constexpr std::uint64_t kUnreachable = ~std::uint64_t{0};
  std::uint64_t raw_ = kUnreachable;
};

}  // namespace mazetree
