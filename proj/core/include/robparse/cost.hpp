#ifndef ROBPARSE_COST_HPP
#define ROBPARSE_COST_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>

namespace robparse {

/// Exact error value in fixed point with two fractional digits.
///
/// Every tuned parameter has at most two decimals, so sums of costs stay
/// exact and dominance comparisons never depend on float rounding.
class Cost {
 public:
  constexpr Cost() = default;

  static constexpr Cost from_hundredths(std::int64_t h) { return Cost(h); }
  static constexpr Cost zero() { return Cost(0); }
  static constexpr Cost infinity() {
    return Cost(std::numeric_limits<std::int64_t>::max() / 4);
  }

  /// Parses decimals such as "10.4", "-5", "0.01". Throws robparse::Error
  /// on malformed text or more than two fractional digits.
  static Cost parse(std::string_view text);

  constexpr std::int64_t hundredths() const { return value_; }
  constexpr bool is_infinite() const { return value_ >= infinity().value_; }
  double to_double() const { return static_cast<double>(value_) / 100.0; }

  /// Shortest form with at least one fractional digit: 10.4, 14.0, 10.81.
  std::string str() const;

  constexpr Cost operator+(Cost o) const { return Cost(value_ + o.value_); }
  constexpr Cost operator-(Cost o) const { return Cost(value_ - o.value_); }
  constexpr Cost operator*(std::int64_t k) const { return Cost(value_ * k); }
  constexpr Cost& operator+=(Cost o) {
    value_ += o.value_;
    return *this;
  }
  constexpr auto operator<=>(const Cost&) const = default;

 private:
  constexpr explicit Cost(std::int64_t h) : value_(h) {}
  std::int64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, Cost c);

namespace literals {
/// 10.4_cost; rounds to the nearest hundredth.
Cost operator""_cost(long double value);
Cost operator""_cost(unsigned long long value);
}  // namespace literals

}  // namespace robparse

#endif  // ROBPARSE_COST_HPP
