#pragma once

#include "conic/class_group.hpp"
#include "conic/linsys.hpp"

#include <vector>

namespace conic {

// Sampling grid: points with coordinates (a + offset)/denominator.
struct GridSpec {
  Int denominator = 2;
  Rat offset = Rat(1, 4);
  Int radius = 2;  // box half-width for grid_feasible
};

// Denominator 2L with L the lcm of the nonzero maximal minors of the ray
// matrix; chamber walls have vertices with denominators dividing L, so the
// offset grid meets every full-dimensional chamber.
GridSpec default_grid(const ConeSpec& spec);

struct ChamberCensus {
  long long classes = 0;
  std::vector<Divisor> representatives;  // lex-sorted ceiling tuples, one per class
};

// Brute-force census of conic-module classes: sample the fundamental domain,
// collect ceiling tuples, deduplicate up to linear equivalence.
ChamberCensus enumerate_chambers(const ConeSpec& spec, const ClassGroupData& cg, const GridSpec& grid);

// Box-scale comparison of the two Hom-set descriptions between v and w:
// lattice membership in the shifted-cone difference polytope versus the
// translation test on shifted-cone lattice points. False refutes, true is
// evidence at radius R.
bool hom_box_check(const ConeSpec& spec, const RatVec& v, const RatVec& w, const Int& R);

// One-sided grid probe: true implies feasible(s).
bool grid_feasible(const LinearSystem& s, const GridSpec& grid);

}  // namespace conic
