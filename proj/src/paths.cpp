#include "conic/paths.hpp"

#include "conic/linsys.hpp"
#include "conic/normal_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace conic {

std::vector<int> mask_to_indices(RayMask m) {
  std::vector<int> v;
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) v.push_back(i + 1);
  return v;
}

RayMask indices_to_mask(const std::vector<int>& ones_based, int num_rays) {
  RayMask m = 0;
  for (int i : ones_based) {
    if (i < 1 || i > num_rays) throw std::invalid_argument("ray index out of range");
    m |= RayMask(1) << (i - 1);
  }
  return m;
}

bool facet_feasible(const ConeSpec& spec, const Divisor& d, RayMask J) {
  if (static_cast<int>(d.size()) != spec.num_rays())
    throw std::invalid_argument("facet_feasible: divisor length mismatch");
  LinearSystem s(spec.dim);
  for (int rho = 0; rho < spec.num_rays(); ++rho) {
    RatVec a(spec.dim);
    for (int j = 0; j < spec.dim; ++j) a[j] = Rat(spec.rays[rho][j]);
    if (J & (RayMask(1) << rho)) {
      s.add_eq(std::move(a), Rat(d[rho]));
    } else {
      s.add_lt(a, Rat(d[rho]));
      s.add_gt(std::move(a), Rat(d[rho] - 1));
    }
  }
  return feasible(s);
}

bool valid_1d(const std::vector<Int>& betas, RayMask J, const Int& end) {
  const int k = static_cast<int>(betas.size());
  Int total = 0;
  for (const Int& b : betas) {
    if (b == 0) throw ZeroBetaUnsupported("valid_1d: zero beta entry");
    total += b;
  }
  if (total != 0) throw std::invalid_argument("valid_1d: betas must sum to zero");
  const RayMask full = (k >= 32) ? ~RayMask(0) : ((RayMask(1) << k) - 1);
  if (J == full) return end == 0;  // W_{d,empty} = {0}
  Int sum_j = 0, lo = 0, hi = 0;
  for (int i = 0; i < k; ++i) {
    if (J & (RayMask(1) << i)) {
      sum_j += betas[i];
    } else {
      if (betas[i] < 0)
        lo += betas[i];
      else
        hi += betas[i];
    }
  }
  Int start = end - sum_j;
  return lo < start && start < hi;
}

ConeContext::ConeContext(ConeSpec spec)
    : spec_(std::move(spec)), cg_(compute_class_group(validate(spec_))), zono_(cg_), A_(ray_matrix(spec_)) {}

bool ConeContext::valid(RayMask J, const LatticePoint& end) const {
  auto it = divisor_memo_.find(end);
  if (it == divisor_memo_.end()) it = divisor_memo_.emplace(end, divisor_for_point(cg_, end)).first;
  return facet_feasible(spec_, it->second, J);
}

int ConeContext::path_length(RayMask J) const {
  auto it = rank_memo_.find(J);
  if (it != rank_memo_.end()) return it->second;
  std::vector<IntVec> rows;
  for (int i = 0; i < spec_.num_rays(); ++i)
    if (J & (RayMask(1) << i)) rows.push_back(spec_.rays[i]);
  int r = rows.empty() ? 0 : rank(IntMatrix::from_rows(rows));
  rank_memo_.emplace(J, r);
  return r;
}

BetaContext::BetaContext(std::vector<Int> betas) : betas1d_(std::move(betas)) {
  Int total = 0, pos = 0, neg = 0;
  for (const Int& b : betas1d_) {
    if (b == 0) throw ZeroBetaUnsupported("beta context requires nonzero betas");
    total += b;
    if (b > 0)
      pos += b;
    else
      neg += b;
    betas_.push_back(LatticePoint{b});
  }
  if (total != 0) throw std::invalid_argument("beta context requires a zero-sum list");
  for (Int l = neg + 1; l <= pos - 1; ++l) points_.push_back(LatticePoint{l});
}

bool BetaContext::valid(RayMask J, const LatticePoint& end) const { return valid_1d(betas1d_, J, end[0]); }

int BetaContext::path_length(RayMask J) const {
  int c = 0;
  for (RayMask m = J; m != 0; m >>= 1)
    if (m & 1u) ++c;
  return c;
}

std::vector<PathSpec> valid_paths_into(const ComplexContext& ctx, const LatticePoint& P) {
  const auto& pts = ctx.points();
  if (!std::binary_search(pts.begin(), pts.end(), P))
    throw PointOutsideZonotope("valid_paths_into: not a zonotope lattice point");
  const int k = ctx.num_rays();
  const auto& betas = ctx.betas();
  std::vector<PathSpec> out;
  for (RayMask J = 0; J < (RayMask(1) << k); ++J) {
    // J = 0 is the degree-0 self term and is kept unconditionally.
    if (J != 0 && !ctx.valid(J, P)) continue;
    LatticePoint start = P;
    for (int i = 0; i < k; ++i)
      if (J & (RayMask(1) << i)) start = vec_sub(start, betas[i]);
    out.push_back(PathSpec{mask_to_indices(J), std::move(start), P, ctx.path_length(J)});
  }
  std::sort(out.begin(), out.end(), [k](const PathSpec& x, const PathSpec& y) {
    if (x.length != y.length) return x.length < y.length;
    return indices_to_mask(x.subset, k) < indices_to_mask(y.subset, k);
  });
  return out;
}

}  // namespace conic
