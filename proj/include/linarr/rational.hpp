#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace linarr {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// No floating point is used in any computation.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

/// a_H ∈ Z_{>0} is the forbidden residue shape.
inline bool is_positive_integer(const Rat& r) {
  return is_integer(r) && rat_num(r) > 0;
}

/// Floor of a rational, exact.
inline Int rat_floor(const Rat& r) {
  Int q = rat_num(r) / rat_den(r);
  if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
  return q;
}

/// Representative of r mod 1 in [0, 1).
inline Rat mod_one(const Rat& r) { return r - Rat(rat_floor(r)); }

inline std::string rat_to_string(const Rat& r) {
  if (is_integer(r)) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Parses "p", "-p" or "p/q" exactly. Decimals are rejected: the input
/// format is exact by policy. Returns nullopt on malformed input.
inline std::optional<Rat> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) return std::nullopt;
    return Rat(Int(std::string(text)));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  Int d{std::string(den)};
  if (d == 0) return std::nullopt;
  return Rat(Int(std::string(num)), d);
}

}  // namespace linarr
