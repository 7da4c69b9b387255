#pragma once

#include "conic/errors.hpp"
#include "conic/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conic {

// Torus-invariant divisor: one integer coefficient per ray.
using Divisor = IntVec;

// Pointed full-dimensional cone given by the primitive generators of its rays.
struct ConeSpec {
  std::string name;
  int dim = 0;
  std::vector<IntVec> rays;  // each of length dim

  int num_rays() const { return static_cast<int>(rays.size()); }
};

// Rays as rows; the matrix of m -> (<m, u_rho>)_rho.
IntMatrix ray_matrix(const ConeSpec& spec);

// Throws NonPrimitiveRay / NotFullDimensional / NotPointed.
const ConeSpec& validate(const ConeSpec& spec);

// Optional lint, not part of validate: a ray lying in the cone of the others.
std::optional<int> non_extremal_ray(const ConeSpec& spec);

std::optional<IntVec> gorenstein_element(const ConeSpec& spec);

Divisor ceil_divisor(const ConeSpec& spec, const RatVec& v);

enum class Shape { Simplicial, AlmostSimplicial, General };
Shape shape(const ConeSpec& spec);
std::string to_string(Shape s);

// Cone over conv{(0,0),(a,0),(0,1),(b,1)} x {1}.
ConeSpec trapezoid_cone(const Int& a, const Int& b);

}  // namespace conic
