#pragma once

#include "conic/cone.hpp"
#include "conic/matrix.hpp"

#include <optional>
#include <vector>

namespace conic {

using LatticePoint = IntVec;  // coordinates of length free_rank

// Cokernel data of the divisorial sequence for a cone: free quotient map C
// (basis chosen so C maps Z^k onto Z^{k-n}), torsion invariant factors, and
// the beta vectors (columns of C).
struct ClassGroupData {
  int num_rays = 0;
  int free_rank = 0;
  IntVec torsion;            // invariant factors > 1
  IntMatrix C;               // free_rank x num_rays, C * rayMatrix == 0
  IntMatrix torsion_map;     // |torsion| x num_rays; class mod torsion[i]
  IntMatrix kernel_basis;    // num_rays x dim: integer kernel of C (columns)
  IntMatrix kernel_hnf;      // Hermite column basis of kernel_basis
  IntMatrix right_inverse;   // num_rays x free_rank with C * right_inverse = I
  std::vector<LatticePoint> betas;  // one per ray

  Int torsion_order() const {
    Int t = 1;
    for (const Int& f : torsion) t *= f;
    return t;
  }
};

ClassGroupData compute_class_group(const ConeSpec& spec);

// f_sigma(-d): the lattice point of a divisor class.
LatticePoint point_of(const ClassGroupData& cg, const Divisor& d);

// d1 - d2 = (ray matrix) * m for an integer m?
bool lin_equiv(const ClassGroupData& cg, const ConeSpec& spec, const Divisor& d1, const Divisor& d2);

// Torsion component of [d1 - d2] when both map to the same lattice point.
std::optional<IntVec> torsion_class(const ClassGroupData& cg, const Divisor& d1, const Divisor& d2);

// Deterministic representative with point_of(result) == P.
Divisor divisor_for_point(const ClassGroupData& cg, const LatticePoint& P);

// Torsion component of a single divisor class (empty vector when torsion-free).
IntVec torsion_component(const ClassGroupData& cg, const Divisor& d);

// Unimodular T with T * C == other over the integers, when one exists.
// Lattice point labels produced with C and with `other` then correspond via T.
std::optional<IntMatrix> unimodular_bridge(const ClassGroupData& cg, const IntMatrix& other);

}  // namespace conic
