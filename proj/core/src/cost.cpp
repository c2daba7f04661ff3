#include "robparse/cost.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <ostream>

#include "robparse/error.hpp"

namespace robparse {

Cost Cost::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw Error("empty cost value");

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::int64_t whole = 0;
  std::int64_t frac = 0;
  int frac_digits = 0;
  bool seen_dot = false;
  bool seen_digit = false;
  for (char c : s) {
    if (c == '.') {
      if (seen_dot) throw Error("malformed cost '" + std::string(text) + "'");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      if (seen_dot) {
        if (++frac_digits > 2) {
          if (c != '0')
            throw Error("cost '" + std::string(text) +
                        "' has more than two fractional digits");
          continue;
        }
        frac = frac * 10 + (c - '0');
      } else {
        whole = whole * 10 + (c - '0');
        if (whole > 1'000'000'000'000LL)
          throw Error("cost '" + std::string(text) + "' out of range");
      }
    } else {
      throw Error("malformed cost '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw Error("malformed cost '" + std::string(text) + "'");
  if (frac_digits == 1) frac *= 10;
  std::int64_t h = whole * 100 + frac;
  return Cost(negative ? -h : h);
}

std::string Cost::str() const {
  if (is_infinite()) return "inf";
  std::int64_t v = value_;
  std::string sign;
  if (v < 0) {
    sign = "-";
    v = -v;
  }
  std::string out = sign + std::to_string(v / 100) + ".";
  std::int64_t frac = v % 100;
  out += static_cast<char>('0' + frac / 10);
  if (frac % 10 != 0) out += static_cast<char>('0' + frac % 10);
  return out;
}

std::ostream& operator<<(std::ostream& os, Cost c) { return os << c.str(); }

namespace literals {
Cost operator""_cost(long double value) {
  return Cost::from_hundredths(std::llround(value * 100.0L));
}
Cost operator""_cost(unsigned long long value) {
  return Cost::from_hundredths(static_cast<std::int64_t>(value) * 100);
}
}  // namespace literals

}  // namespace robparse
