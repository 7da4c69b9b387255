#include "conic/zonotope.hpp"

#include <algorithm>
#include <stdexcept>

namespace conic {

ZonotopeModel::ZonotopeModel(const ClassGroupData& cg) : betas_(cg.betas), free_rank_(cg.free_rank) {
  const int r = free_rank_;
  if (r == 0) {
    points_.push_back(LatticePoint{});
    return;
  }
  // Bounding box of the closed zonotope: coordinatewise sums of the
  // negative/positive parts of -beta over alpha in [-1,0].
  IntVec lo(r, Int(0)), hi(r, Int(0));
  for (const LatticePoint& b : betas_)
    for (int i = 0; i < r; ++i) {
      if (b[i] > 0) lo[i] -= b[i];
      if (b[i] < 0) hi[i] -= b[i];
    }
  LatticePoint cur(r);
  // Lexicographic sweep keeps the cached list sorted without a final sort.
  std::vector<long long> idx(r, 0);
  std::vector<long long> span(r);
  for (int i = 0; i < r; ++i) span[i] = static_cast<long long>(Int(hi[i] - lo[i]).convert_to<long long>()) + 1;
  long long total = 1;
  for (int i = 0; i < r; ++i) total *= span[i];
  for (long long t = 0; t < total; ++t) {
    long long rem = t;
    for (int i = r - 1; i >= 0; --i) {
      cur[i] = lo[i] + Int(rem % span[i]);
      rem /= span[i];
    }
    RatVec p(r);
    for (int i = 0; i < r; ++i) p[i] = Rat(cur[i]);
    if (contains(p)) points_.push_back(cur);
  }
  std::sort(points_.begin(), points_.end());
}

bool ZonotopeModel::contains(const RatVec& p) const {
  if (static_cast<int>(p.size()) != free_rank_) throw std::invalid_argument("zonotope: point length mismatch");
  const int k = static_cast<int>(betas_.size());
  LinearSystem s(k);
  for (int i = 0; i < free_rank_; ++i) {
    RatVec a(k);
    for (int j = 0; j < k; ++j) a[j] = Rat(betas_[j][i]);
    s.add_eq(std::move(a), p[i]);
  }
  for (int j = 0; j < k; ++j) {
    RatVec a(k, Rat(0));
    a[j] = 1;
    s.add_le(a, 0);       // alpha_j <= 0
    a[j] = 1;
    s.add_gt(std::move(a), -1);  // alpha_j > -1
  }
  return feasible(s);
}

bool ZonotopeModel::is_lattice_point(const LatticePoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

int ZonotopeModel::index_of(const LatticePoint& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return -1;
  return static_cast<int>(it - points_.begin());
}

}  // namespace conic
