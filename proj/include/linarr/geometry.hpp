#pragma once

#include <array>
#include <compare>
#include <string>

#include "linarr/error.hpp"
#include "linarr/rational.hpp"

namespace linarr {

namespace detail {

/// Canonical integer triple: coprime entries, first nonzero entry positive.
/// Two triples proportional by a nonzero rational canonicalize identically,
/// so canonical triples can serve as map keys for projective objects.
inline std::array<Int, 3> canonical_triple(const Rat& a, const Rat& b,
                                           const Rat& c) {
  if (a == 0 && b == 0 && c == 0)
    throw degenerate_error("zero triple has no projective meaning");
  Int l = boost::multiprecision::lcm(
      boost::multiprecision::lcm(rat_den(a), rat_den(b)), rat_den(c));
  std::array<Int, 3> v{Int(a * l), Int(b * l), Int(c * l)};
  Int g = boost::multiprecision::gcd(
      boost::multiprecision::gcd(abs(v[0]), abs(v[1])), abs(v[2]));
  for (auto& x : v) x /= g;
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
  }
  return v;
}

inline std::array<Int, 3> cross(const std::array<Int, 3>& u,
                                const std::array<Int, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

}  // namespace detail

/// A projective line a·x + b·y + c·z = 0 in canonical integer form.
struct Line {
  std::array<Int, 3> coeffs;

  Line(const Rat& a, const Rat& b, const Rat& c)
      : coeffs(detail::canonical_triple(a, b, c)) {}
  Line(long a, long b, long c) : Line(Rat(a), Rat(b), Rat(c)) {}

  auto operator<=>(const Line&) const = default;
};

/// A projective point [x : y : z] in canonical integer form.
struct Point {
  std::array<Int, 3> coords;

  Point(const Rat& x, const Rat& y, const Rat& z)
      : coords(detail::canonical_triple(x, y, z)) {}
  Point(long x, long y, long z) : Point(Rat(x), Rat(y), Rat(z)) {}

  /// True when the point lies on the chart line z = 0.
  bool at_infinity() const { return coords[2] == 0; }

  auto operator<=>(const Point&) const = default;
};

inline Line canonicalize_line(const Rat& a, const Rat& b, const Rat& c) {
  return Line(a, b, c);
}

inline bool on_line(const Point& p, const Line& l) {
  return p.coords[0] * l.coeffs[0] + p.coords[1] * l.coeffs[1] +
             p.coords[2] * l.coeffs[2] ==
         0;
}

/// Unique intersection point of two distinct lines (cross product of the
/// coefficient triples, canonicalized).
inline Point intersect(const Line& l1, const Line& l2) {
  if (l1 == l2)
    throw degenerate_error("identical lines have no unique intersection");
  auto c = detail::cross(l1.coeffs, l2.coeffs);
  return Point(Rat(c[0]), Rat(c[1]), Rat(c[2]));
}

inline std::string to_string(const Line& l) {
  return "(" + l.coeffs[0].str() + " " + l.coeffs[1].str() + " " +
         l.coeffs[2].str() + ")";
}

inline std::string to_string(const Point& p) {
  return "[" + p.coords[0].str() + ":" + p.coords[1].str() + ":" +
         p.coords[2].str() + "]";
}

}  // namespace linarr
