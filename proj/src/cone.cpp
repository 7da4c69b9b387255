#include "conic/cone.hpp"

#include "conic/linsys.hpp"
#include "conic/normal_form.hpp"

namespace conic {

IntMatrix ray_matrix(const ConeSpec& spec) { return IntMatrix::from_rows(spec.rays); }

const ConeSpec& validate(const ConeSpec& spec) {
  for (int i = 0; i < spec.num_rays(); ++i) {
    if (static_cast<int>(spec.rays[i].size()) != spec.dim)
      throw NotFullDimensional("ray " + std::to_string(i + 1) + " has wrong length");
    if (gcd_all(spec.rays[i]) != 1)
      throw NonPrimitiveRay("ray " + std::to_string(i + 1) + " is not primitive");
  }
  if (rank(ray_matrix(spec)) != spec.dim) throw NotFullDimensional("rays do not span the ambient space");
  // Pointed iff some m pairs strictly positively with every ray.
  LinearSystem s(spec.dim);
  for (const IntVec& u : spec.rays) {
    RatVec a(spec.dim);
    for (int j = 0; j < spec.dim; ++j) a[j] = Rat(u[j]);
    s.add_gt(std::move(a), 0);
  }
  if (!feasible(s)) throw NotPointed("cone contains a line");
  return spec;
}

std::optional<int> non_extremal_ray(const ConeSpec& spec) {
  const int k = spec.num_rays();
  for (int i = 0; i < k; ++i) {
    // u_i = sum_{j != i} lambda_j u_j with lambda_j >= 0?
    LinearSystem s(k - 1);
    for (int c = 0; c < spec.dim; ++c) {
      RatVec a(k - 1);
      int idx = 0;
      for (int j = 0; j < k; ++j) {
        if (j == i) continue;
        a[idx++] = Rat(spec.rays[j][c]);
      }
      s.add_eq(std::move(a), Rat(spec.rays[i][c]));
    }
    for (int v = 0; v < k - 1; ++v) {
      RatVec a(k - 1, Rat(0));
      a[v] = 1;
      s.add_ge(std::move(a), 0);
    }
    if (feasible(s)) return i;
  }
  return std::nullopt;
}

std::optional<IntVec> gorenstein_element(const ConeSpec& spec) {
  IntVec ones(spec.num_rays(), Int(1));
  return integer_solve(ray_matrix(spec), ones);
}

Divisor ceil_divisor(const ConeSpec& spec, const RatVec& v) {
  Divisor d(spec.num_rays());
  for (int i = 0; i < spec.num_rays(); ++i) {
    Rat pairing = 0;
    for (int j = 0; j < spec.dim; ++j) pairing += v[j] * Rat(spec.rays[i][j]);
    d[i] = rat_ceil(pairing);
  }
  return d;
}

Shape shape(const ConeSpec& spec) {
  if (spec.num_rays() == spec.dim) return Shape::Simplicial;
  if (spec.num_rays() == spec.dim + 1) return Shape::AlmostSimplicial;
  return Shape::General;
}

std::string to_string(Shape s) {
  switch (s) {
    case Shape::Simplicial:
      return "simplicial";
    case Shape::AlmostSimplicial:
      return "almost_simplicial";
    case Shape::General:
      return "general";
  }
  return "?";
}

ConeSpec trapezoid_cone(const Int& a, const Int& b) {
  ConeSpec spec;
  spec.name = "trapezoid(" + a.str() + "," + b.str() + ")";
  spec.dim = 3;
  spec.rays = {{Int(0), Int(0), Int(1)}, {a, Int(0), Int(1)}, {Int(0), Int(1), Int(1)}, {b, Int(1), Int(1)}};
  return spec;
}

}  // namespace conic
