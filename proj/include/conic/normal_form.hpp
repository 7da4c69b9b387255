#pragma once

#include "conic/matrix.hpp"

#include <optional>

namespace conic {

// Smith decomposition U*M*V = D with U, V unimodular and D diagonal,
// d_i >= 0 and d_i | d_{i+1}. Uinv is maintained alongside U so callers can
// read off a kernel basis and a right inverse of the cokernel map.
struct SmithDecomposition {
  IntMatrix U, D, V, Uinv;
};

SmithDecomposition smith_normal_form(const IntMatrix& M);

// Rational rank by fraction-free elimination.
int rank(const IntMatrix& M);

// Determinant of a square matrix (Bareiss).
Int determinant(const IntMatrix& M);

// Solve A*x = b over the integers; nullopt when no integral solution exists.
// Free coordinates are pinned to zero, so the answer is deterministic.
std::optional<IntVec> integer_solve(const IntMatrix& A, const IntVec& b);

// Column-style Hermite form of the lattice spanned by the columns of M:
// returns a matrix whose columns are a triangular basis (pivot rows strictly
// increasing, pivots positive). Zero columns are dropped.
IntMatrix hermite_column_basis(const IntMatrix& M);

// Canonical coset representative of v modulo the column lattice of H
// (H as produced by hermite_column_basis): each pivot coordinate is reduced
// into [0, pivot).
IntVec reduce_mod_lattice(IntVec v, const IntMatrix& H);

}  // namespace conic
