#pragma once

#include <vector>

#include "linarr/linarr.hpp"

// Shared fixtures. The two worked arrangements keep their original
// labels L_0..L_n; every derived quantity asserted in the tests was
// computed independently (exhaustive enumeration over exact rationals)
// before being frozen here.

namespace fixtures {

using linarr::Arrangement;
using linarr::Line;
using linarr::LocalSystem;
using linarr::Rat;

// 13 lines: z, x, y, x+3y-3z, -x+3y-3z, x+4y-2z, x-2y-2z, x+y-4z,
// -3x+5y-12z, 2x-z, y-9z, -x+y-7z, -x+y-2z. Six triple points, no cycle.
inline Arrangement ex29() {
  return Arrangement{{
      Line(0, 0, 1),    Line(1, 0, 0),    Line(0, 1, 0),  Line(1, 3, -3),
      Line(-1, 3, -3),  Line(1, 4, -2),   Line(1, -2, -2), Line(1, 1, -4),
      Line(-3, 5, -12), Line(2, 0, -1),   Line(0, 1, -9), Line(-1, 1, -7),
      Line(-1, 1, -2),
  }};
}

// 12 lines with two disjoint 3-cycles {L_1,L_2,L_3} and {L_0,L_7,L_8}.
inline Arrangement ex36() {
  return Arrangement{{
      Line(0, 0, 1),   Line(1, 0, 0),   Line(0, 1, 0),    Line(1, 1, -1),
      Line(1, 3, 0),   Line(1, -3, -1), Line(3, -1, 1),   Line(1, -1, 2),
      Line(4, 1, -12), Line(1, 2, -10), Line(1, -1, 8),   Line(4, 1, 12),
  }};
}

// The non-admissible system of the 12-line fixture: class 1/2 on the six
// cycle lines, 0 on the six single-point lines.
inline LocalSystem ex36_half_system() {
  std::vector<Rat> cls(12, 0);
  for (int i : {0, 1, 2, 3, 7, 8}) cls[i] = Rat(1, 2);
  return LocalSystem(cls);
}

// 7 lines: one two-member graph {0,1} with joints [0:0:1], [1:0:1],
// [0:1:1]; lines 2..6 each carry a single M-point.
inline Arrangement path7() {
  return Arrangement{{
      Line(0, 1, 0), Line(1, 0, 0), Line(1, 1, 0), Line(1, 0, -1),
      Line(2, 1, -2), Line(0, 1, -1), Line(1, 2, -2),
  }};
}

// 11 lines: two triangles {0,1,2} and {0,3,4} sharing line 0, every joint
// tripled by a single-point line. Two cycles with a common line.
inline Arrangement two_triangles() {
  return Arrangement{{
      Line(0, 1, 0),  Line(1, 0, 0),  Line(1, 1, -1),   Line(1, 0, -3),
      Line(1, 1, -5), Line(2, 5, 0),  Line(2, 5, -2),   Line(3, 10, -10),
      Line(3, 10, -9), Line(4, 17, -20), Line(4, 17, -46),
  }};
}

// 9 lines: quadrilateral 0-1-2-3 (joints [0:0:1], [1:0:1], [1:1:1],
// [0:1:1], each tripled by one of lines 4..7) plus line 8 carrying no
// M-point, used as the base line in the even-cycle tests.
inline Arrangement quad9() {
  return Arrangement{{
      Line(1, 0, 0),  Line(0, 1, 0),   Line(1, 0, -1),   Line(0, 1, -1),
      Line(2, 5, 0),  Line(2, 5, -2),  Line(3, 10, -13), Line(3, 10, -10),
      Line(1, 1, -5),
  }};
}

// quad9 with the joint [0:0:1] quadrupled by line 8 (= 4x+17y=0); line 9
// is the M-point-free base line.
inline Arrangement quad10() {
  return Arrangement{{
      Line(1, 0, 0),  Line(0, 1, 0),   Line(1, 0, -1),   Line(0, 1, -1),
      Line(2, 5, 0),  Line(2, 5, -2),  Line(3, 10, -13), Line(3, 10, -10),
      Line(4, 17, 0), Line(1, 1, -5),
  }};
}

// 16 lines: two disjoint quadrilaterals 0-1-2-3 and 4-5-6-7, every joint
// tripled (lines 8..15). Two disjoint 4-cycles, condition (C) holds.
inline Arrangement two_quads() {
  return Arrangement{{
      Line(1, 0, 0),    Line(0, 1, 0),    Line(1, 0, -1),   Line(0, 1, -1),
      Line(1, -4, 30),  Line(4, 1, -67),  Line(1, -4, 47),  Line(4, 1, -50),
      Line(2, 5, 0),    Line(2, 5, -2),   Line(3, 10, -13), Line(3, 10, -10),
      Line(4, 17, -210), Line(4, 17, -243), Line(5, 26, -455), Line(5, 26, -409),
  }};
}

// 15 lines: a degree-3 star. Line 1 carries the joints q0=[0:0:1] (with
// line 0), q1=[1:0:1] (line 2), q2=[2:0:1] (line 3); q1 has multiplicity 4
// (single-point lines 5 and 6). Lines 0, 2, 3 carry second points
// [0:2:1], [2:-1:1], [4:2:1] (single-point lines 8..13); line 14 carries
// no M-point and serves as the base line. Exercises the sibling cases of
// the walk: with zero classes on lines 5,6 both child joints of line 1
// exceed its own maximum (restart case); with fractional classes there
// the excess is dumped onto line 5 (lateral case).
inline Arrangement star15() {
  return Arrangement{{
      Line(1, 0, 0),     Line(0, 1, 0),    Line(1, 1, -1),  Line(1, -1, -2),
      Line(2, 5, 0),     Line(2, 5, -2),   Line(3, 10, -3), Line(3, 10, -6),
      Line(4, 17, -34),  Line(5, 26, -52), Line(4, 17, 9),  Line(5, 26, 16),
      Line(6, 37, -98),  Line(7, 50, -128), Line(6, 37, -105982),
  }};
}

// Combinatorial 9-line, 12-point configuration of the Fermat type: three
// classes {0,1,2}, {3,4,5}, {6,7,8}; nine cross points, one per choice of
// a line from each class (Latin-square pattern), plus the three class
// vertices. Not realizable with rational coordinates, so given as a pure
// incidence view.
inline linarr::MultinetIncidence fermat_view() {
  linarr::MultinetIncidence v;
  v.n_lines = 9;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int k = (i + j) % 3;
      std::vector<int> lines{i, 3 + j, 6 + k};
      std::ranges::sort(lines);
      v.m_point_lines.push_back(lines);
    }
  v.m_point_lines.push_back({0, 1, 2});
  v.m_point_lines.push_back({3, 4, 5});
  v.m_point_lines.push_back({6, 7, 8});
  return v;
}

inline linarr::Multinet fermat_net() {
  linarr::Multinet mn;
  mn.classes = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
  mn.mult.assign(9, 1);
  for (int p = 0; p < 9; ++p) mn.base_locus.push_back(p);
  mn.d = 3;
  return mn;
}

// pencil of n concurrent lines through [0:0:1]
inline Arrangement pencil(int n) {
  std::vector<Line> lines;
  for (int i = 0; i < n; ++i) lines.push_back(Line(1, i + 1, 0));
  return Arrangement{lines};
}

// Chain of k parabola secants: line i joins (i, i^2) and (i+1, (i+1)^2),
// so consecutive lines meet at P_i = (i, i^2) and nothing else concurs.
// Every interior joint is tripled by another secant through it (quadrupled
// at P_1 when `quad` is set). Gives an acyclic member path of length k-2
// for deep-walk tests.
inline Arrangement chain(int k, bool quad = false) {
  std::vector<Line> lines;
  for (long i = 0; i < k; ++i)
    lines.push_back(Line(2 * i + 1, -1, -i * (i + 1)));
  for (long i = 1; i < k; ++i) {
    long m = 100 + 3 * i;
    lines.push_back(Line(m, -1, i * i - m * i));
    if (quad && i == 1) {
      long m2 = 200 + 5 * i;
      lines.push_back(Line(m2, -1, i * i - m2 * i));
    }
  }
  return Arrangement{lines};
}

}  // namespace fixtures
