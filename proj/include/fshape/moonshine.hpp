#pragma once

#include <string>
#include <vector>

#include "fshape/bigint.hpp"
#include "fshape/frame_shape.hpp"

namespace fshape {

// A multiset of root-system Coxeter shapes sharing one common level
// (Coxeter number or twist order), with the product symbol spelled out.
struct ShapeCombo {
  std::string name;  // e.g. "A5^4 D4", "E~6^3"
  int level = 0;
  FrameShape shape;
};

// All multisets of A/D/E root systems with a common Coxeter number and
// total rank 24: the root systems of the 23 even unimodular rank-24
// lattices that contain roots.
std::vector<ShapeCombo> niemeier_combinations();

// Same game for the four simply-elliptic Coxeter shapes, grouped by their
// twist order, with total symbol degree 24.
std::vector<ShapeCombo> elliptic_combinations();

// One realization of a rank-24 frame shape by singularity data.
struct MoonshineEntry {
  std::string construction;  // "a" ... "e"
  std::string ref;           // combo name, singularity name or "{sig}"
  FrameShape shape;
};

// Every entry produced by the five constructions:
//   (a) Niemeier combinations, taken as frame shapes directly;
//   (b) monodromy symbols of the distinguished higher-index rows;
//   (c) pi pi* over the simply-elliptic combinations;
//   (d) pi pi* over the monodromy symbols of every index-one row;
//   (e) pi pi* over the branch-order symbols of the marked rows.
std::vector<MoonshineEntry> moonshine_entries();

struct Table5Row {
  std::string label;  // conjugacy class name, e.g. "21A"
  FrameShape shape;
  std::vector<std::string> realizers;  // "a:A1^24", "d:E12", ...
};

std::vector<Table5Row> parse_table5(const std::string& text);

// Re-derives the whole correspondence table and compares it, row by row,
// against the recorded realizer lists.  One line per row plus one line per
// computed entry that matches no row at all.
struct Table5Check {
  std::string line;
  bool pass = false;
};
std::vector<Table5Check> verify_table5();

// q-expansion of the eta product attached to a frame shape, normalized by
// its leading power q^{degree/24}.  eta_offset throws when that power is
// not an integer.
long long eta_offset(const FrameShape& fs);
std::vector<BigInt> eta_expansion(const FrameShape& fs, int last);

}  // namespace fshape
