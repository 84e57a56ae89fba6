#pragma once

#include <random>
#include <set>
#include <vector>

#include "linarr/graphs.hpp"
#include "linarr/localsystem.hpp"

namespace linarr {

/// Pseudorandom condition-(C) arrangement, deterministic per seed.
///
/// Lines in general position almost never produce multiple points, so the
/// generator plants them: it picks hub points, draws connecting lines
/// between consecutive hubs (sometimes closing a triangle, which yields a
/// cycle) and fills every hub up to multiplicity >= 3 with extra lines,
/// then pads with random lines. Candidates failing condition (C) or the
/// requested line count are rejected and the construction retries on the
/// same deterministic stream.
inline Arrangement generate_condition_c(unsigned long long seed, int n_lines,
                                        int retry_budget = 400) {
  if (n_lines < 3)
    throw validation_error("generator needs at least 3 lines");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x853c49e6748fea9bULL);
  auto coin = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    int span = 6 + attempt / 40;  // widen coordinates if collisions persist
    auto rand_point = [&]() {
      return Point(coin(-span, span), coin(-span, span), 1);
    };
    auto rand_line_through = [&](const Point& p) -> Line {
      for (;;) {
        long a = coin(-span, span), b = coin(-span, span);
        if (a == 0 && b == 0) continue;
        // a*x + b*y + c*z = 0 through p (p has z = 1)
        Rat c = -(Rat(a) * Rat(p.coords[0]) + Rat(b) * Rat(p.coords[1]));
        return Line(Rat(a), Rat(b), c);
      }
    };

    int n_hubs = n_lines >= 7 ? coin(2, 3) : (n_lines >= 5 ? coin(1, 2) : 1);
    bool close_triangle = n_hubs == 3 && coin(0, 1) == 1;

    std::vector<Point> hubs;
    std::set<Line> lines;
    bool bad = false;
    for (int i = 0; i < n_hubs && !bad; ++i) {
      Point p = rand_point();
      for (const auto& q : hubs)
        if (q == p) bad = true;
      if (!bad) hubs.push_back(p);
    }
    if (bad) continue;

    auto add = [&](const Line& l) { lines.insert(l); };
    auto connect = [&](const Point& p, const Point& q) {
      auto c = detail::cross(p.coords, q.coords);
      add(Line(Rat(c[0]), Rat(c[1]), Rat(c[2])));
    };
    for (int i = 0; i + 1 < n_hubs; ++i) connect(hubs[i], hubs[i + 1]);
    if (close_triangle) connect(hubs[2], hubs[0]);

    for (const auto& h : hubs) {
      int want = 3;
      int have = 0;
      for (const auto& l : lines) have += on_line(h, l) ? 1 : 0;
      int guard = 0;
      while (have < want && ++guard < 40) {
        Line l = rand_line_through(h);
        if (lines.contains(l)) continue;
        add(l);
        ++have;
      }
    }
    int guard = 0;
    while (static_cast<int>(lines.size()) < n_lines && ++guard < 80) {
      long a = coin(-span, span), b = coin(-span, span), c = coin(-span, span);
      if (a == 0 && b == 0 && c == 0) continue;
      lines.insert(Line(a, b, c));
    }
    if (static_cast<int>(lines.size()) != n_lines) continue;

    try {
      Arrangement arr({lines.begin(), lines.end()});
      auto inc = build_incidence(arr);
      if (!check_condition_c(inc)) continue;
      return arr;
    } catch (const degenerate_error&) {
      continue;
    } catch (const validation_error&) {
      continue;
    }
  }
  throw generation_error("no condition-(C) arrangement of " +
                         std::to_string(n_lines) + " lines within budget");
}

/// Pseudorandom local system: classes p/q with small denominators,
/// balanced so the sum is an integer. `max_den` bounds denominators;
/// `sparsity` out of 4 lines get class 0 on average when > 0.
inline LocalSystem random_local_system(unsigned long long seed, int n_lines,
                                       int max_den = 8, int sparsity = 0) {
  std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dULL + 0x632be59bd9b4e019ULL);
  auto coin = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  std::vector<Rat> classes;
  Rat sum = 0;
  for (int i = 0; i + 1 < n_lines; ++i) {
    Rat c = 0;
    if (sparsity == 0 || coin(0, 3) >= sparsity) {
      int den = coin(2, max_den);
      c = mod_one(Rat(coin(0, den - 1), den));
    }
    classes.push_back(c);
    sum += c;
  }
  classes.push_back(mod_one(-sum));
  return LocalSystem(std::move(classes));
}

}  // namespace linarr
