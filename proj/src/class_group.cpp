#include "conic/class_group.hpp"

#include "conic/normal_form.hpp"

#include <stdexcept>

namespace conic {

ClassGroupData compute_class_group(const ConeSpec& spec) {
  const int k = spec.num_rays(), n = spec.dim;
  IntMatrix A = ray_matrix(spec);  // k x n, full column rank for a valid cone
  SmithDecomposition s = smith_normal_form(A);

  ClassGroupData cg;
  cg.num_rays = k;
  cg.free_rank = k - n;

  // U*A*V = D with d_1 | ... | d_n. Coordinates n..k-1 of U*x give the free
  // quotient; diagonal entries > 1 give the torsion.
  std::vector<int> torsion_rows;
  for (int i = 0; i < n; ++i) {
    if (s.D.at(i, i) == 0) throw std::invalid_argument("compute_class_group: rays not full rank");
    if (s.D.at(i, i) > 1) {
      cg.torsion.push_back(s.D.at(i, i));
      torsion_rows.push_back(i);
    }
  }

  cg.C = IntMatrix(cg.free_rank, k);
  for (int i = 0; i < cg.free_rank; ++i)
    for (int j = 0; j < k; ++j) cg.C.at(i, j) = s.U.at(n + i, j);

  cg.torsion_map = IntMatrix(static_cast<int>(torsion_rows.size()), k);
  for (std::size_t i = 0; i < torsion_rows.size(); ++i)
    for (int j = 0; j < k; ++j) cg.torsion_map.at(static_cast<int>(i), j) = s.U.at(torsion_rows[i], j);

  cg.kernel_basis = IntMatrix(k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) cg.kernel_basis.at(i, j) = s.Uinv.at(i, j);
  cg.kernel_hnf = hermite_column_basis(cg.kernel_basis);

  cg.right_inverse = IntMatrix(k, cg.free_rank);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < cg.free_rank; ++j) cg.right_inverse.at(i, j) = s.Uinv.at(i, n + j);

  cg.betas.reserve(k);
  for (int j = 0; j < k; ++j) cg.betas.push_back(cg.C.col(j));
  return cg;
}

LatticePoint point_of(const ClassGroupData& cg, const Divisor& d) {
  if (static_cast<int>(d.size()) != cg.num_rays) throw std::invalid_argument("point_of: divisor length mismatch");
  return cg.C * vec_neg(d);
}

bool lin_equiv(const ClassGroupData& cg, const ConeSpec& spec, const Divisor& d1, const Divisor& d2) {
  (void)cg;
  return integer_solve(ray_matrix(spec), vec_sub(d1, d2)).has_value();
}

IntVec torsion_component(const ClassGroupData& cg, const Divisor& d) {
  IntVec t(cg.torsion.size());
  if (cg.torsion.empty()) return t;
  IntVec raw = cg.torsion_map * d;
  for (std::size_t i = 0; i < cg.torsion.size(); ++i) {
    Int m = raw[i] % cg.torsion[i];
    if (m < 0) m += cg.torsion[i];
    t[i] = m;
  }
  return t;
}

std::optional<IntVec> torsion_class(const ClassGroupData& cg, const Divisor& d1, const Divisor& d2) {
  if (point_of(cg, d1) != point_of(cg, d2)) return std::nullopt;
  return torsion_component(cg, vec_sub(d1, d2));
}

Divisor divisor_for_point(const ClassGroupData& cg, const LatticePoint& P) {
  if (static_cast<int>(P.size()) != cg.free_rank)
    throw std::invalid_argument("divisor_for_point: point length mismatch");
  // point_of(d) = C*(-d) = P, so -d = right_inverse*P modulo ker(C).
  IntVec neg_d = cg.right_inverse * P;
  neg_d = reduce_mod_lattice(std::move(neg_d), cg.kernel_hnf);
  return vec_neg(neg_d);
}

std::optional<IntMatrix> unimodular_bridge(const ClassGroupData& cg, const IntMatrix& other) {
  if (other.rows() != cg.free_rank || other.cols() != cg.num_rays) return std::nullopt;
  IntMatrix T = other * cg.right_inverse;  // candidate, free_rank x free_rank
  if (!(T * cg.C == other)) return std::nullopt;
  Int det = determinant(T);
  if (det != 1 && det != -1) return std::nullopt;
  return T;
}

}  // namespace conic
