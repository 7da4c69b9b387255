#pragma once

#include "conic/class_group.hpp"
#include "conic/linsys.hpp"

#include <vector>

namespace conic {

// The half-open zonotope: image of (-1,0]^rays under the beta map.
class ZonotopeModel {
 public:
  explicit ZonotopeModel(const ClassGroupData& cg);

  const std::vector<LatticePoint>& lattice_points() const { return points_; }
  bool contains(const RatVec& p) const;
  bool is_lattice_point(const LatticePoint& p) const;
  int index_of(const LatticePoint& p) const;  // -1 when absent

 private:
  std::vector<LatticePoint> betas_;
  int free_rank_;
  std::vector<LatticePoint> points_;  // sorted lexicographically
};

}  // namespace conic
