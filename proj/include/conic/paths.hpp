#pragma once

#include "conic/class_group.hpp"
#include "conic/zonotope.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace conic {

// Subsets of rays as bitmasks (ray i <-> bit i). Ray counts stay small.
using RayMask = std::uint32_t;

std::vector<int> mask_to_indices(RayMask m);   // 1-based, ascending
RayMask indices_to_mask(const std::vector<int>& ones_based, int num_rays);

struct PathSpec {
  std::vector<int> subset;  // 1-based ray indices
  LatticePoint start, end;
  int length = 0;
};

// Feasibility of the facet system of a divisor d and ray subset J:
//   <x, u_rho> = d_rho          for rho in J
//   d_rho - 1 < <x, u_rho> < d_rho   otherwise
bool facet_feasible(const ConeSpec& spec, const Divisor& d, RayMask J);

// 1-D validity window for nonzero beta lists summing to zero.
bool valid_1d(const std::vector<Int>& betas, RayMask J, const Int& end);

// Everything profile construction needs, independent of whether the data
// came from an actual cone or a bare beta list.
class ComplexContext {
 public:
  virtual ~ComplexContext() = default;
  virtual int num_rays() const = 0;
  virtual int top_dim() const = 0;  // expected length of full complexes
  virtual const std::vector<LatticePoint>& points() const = 0;
  virtual const std::vector<LatticePoint>& betas() const = 0;
  virtual bool valid(RayMask J, const LatticePoint& end) const = 0;
  virtual int path_length(RayMask J) const = 0;
};

// Cone-backed context: validity via the divisor-level facet systems,
// path length via the rank of the chosen ray rows.
class ConeContext final : public ComplexContext {
 public:
  explicit ConeContext(ConeSpec spec);

  const ConeSpec& spec() const { return spec_; }
  const ClassGroupData& class_group() const { return cg_; }
  const ZonotopeModel& zonotope() const { return zono_; }

  int num_rays() const override { return spec_.num_rays(); }
  int top_dim() const override { return spec_.dim; }
  const std::vector<LatticePoint>& points() const override { return zono_.lattice_points(); }
  const std::vector<LatticePoint>& betas() const override { return cg_.betas; }
  bool valid(RayMask J, const LatticePoint& end) const override;
  int path_length(RayMask J) const override;

 private:
  ConeSpec spec_;
  ClassGroupData cg_;
  ZonotopeModel zono_;
  IntMatrix A_;
  mutable std::map<RayMask, int> rank_memo_;
  mutable std::map<LatticePoint, Divisor> divisor_memo_;
};

// Beta-mode context for almost simplicial Gorenstein data: rank-one lattice,
// nonzero betas, path length |J|.
class BetaContext final : public ComplexContext {
 public:
  explicit BetaContext(std::vector<Int> betas);

  int num_rays() const override { return static_cast<int>(betas1d_.size()); }
  int top_dim() const override { return static_cast<int>(betas1d_.size()) - 1; }
  const std::vector<LatticePoint>& points() const override { return points_; }
  const std::vector<LatticePoint>& betas() const override { return betas_; }
  bool valid(RayMask J, const LatticePoint& end) const override;
  int path_length(RayMask J) const override;

  const std::vector<Int>& betas_1d() const { return betas1d_; }

 private:
  std::vector<Int> betas1d_;
  std::vector<LatticePoint> betas_;
  std::vector<LatticePoint> points_;
};

// All valid paths ending at lattice point P, sorted by (length, subset).
// The empty subset is emitted as the length-0 self path.
std::vector<PathSpec> valid_paths_into(const ComplexContext& ctx, const LatticePoint& P);

}  // namespace conic
