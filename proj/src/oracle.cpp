#include "conic/oracle.hpp"

#include "conic/normal_form.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace conic {

GridSpec default_grid(const ConeSpec& spec) {
  const int n = spec.dim, k = spec.num_rays();
  IntMatrix A = ray_matrix(spec);
  Int L = 1;
  std::vector<int> pick(n);
  std::function<void(int, int)> choose = [&](int from, int depth) {
    if (depth == n) {
      IntMatrix sub(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sub.at(i, j) = A.at(pick[i], j);
      Int d = determinant(sub);
      if (d != 0) L = lcm(L, d);
      return;
    }
    for (int i = from; i <= k - (n - depth); ++i) {
      pick[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  GridSpec g;
  g.denominator = 2 * L;
  g.offset = Rat(1, 4 * L);  // 1/(2D)
  g.radius = 2;
  return g;
}

ChamberCensus enumerate_chambers(const ConeSpec& spec, const ClassGroupData& cg, const GridSpec& grid) {
  const int n = spec.dim;
  const long long D = grid.denominator.convert_to<long long>();
  std::set<Divisor> tuples;
  std::vector<long long> a(n, 0);
  for (;;) {
    RatVec v(n);
    for (int i = 0; i < n; ++i) v[i] = (Rat(a[i]) + grid.offset) / Rat(grid.denominator);
    tuples.insert(ceil_divisor(spec, v));
    int pos = n - 1;
    while (pos >= 0 && a[pos] == D - 1) {
      a[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++a[pos];
  }
  ChamberCensus census;
  std::vector<Divisor> reps;
  for (const Divisor& t : tuples) {
    bool fresh = true;
    for (const Divisor& r : reps)
      if (point_of(cg, r) == point_of(cg, t) && lin_equiv(cg, spec, r, t)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(t);
  }
  std::sort(reps.begin(), reps.end());
  census.classes = static_cast<long long>(reps.size());
  census.representatives = std::move(reps);
  return census;
}

namespace {

// integer points of a coordinate box, visitor-style
void sweep_box(int dim, long long radius, const std::function<void(const IntVec&)>& visit) {
  IntVec m(dim);
  std::vector<long long> a(dim, -radius);
  for (;;) {
    for (int i = 0; i < dim; ++i) m[i] = a[i];
    visit(m);
    int pos = dim - 1;
    while (pos >= 0 && a[pos] == radius) {
      a[pos] = -radius;
      --pos;
    }
    if (pos < 0) return;
    ++a[pos];
  }
}

}  // namespace

bool hom_box_check(const ConeSpec& spec, const RatVec& v, const RatVec& w, const Int& R) {
  const int n = spec.dim, k = spec.num_rays();
  const long long r = R.convert_to<long long>();
  Divisor dv = ceil_divisor(spec, v), dw = ceil_divisor(spec, w);

  // Lattice points of sigma^vee + v inside the doubled box.
  std::vector<IntVec> shifted;
  sweep_box(n, 2 * r, [&](const IntVec& m) {
    for (int i = 0; i < k; ++i)
      if (dot(m, spec.rays[i]) < dv[i]) return;  // integer pairing below ceil(<v,u>)
    shifted.push_back(m);
  });

  bool ok = true;
  sweep_box(n, r, [&](const IntVec& m) {
    if (!ok) return;
    bool in_Q = true;
    for (int i = 0; i < k && in_Q; ++i)
      if (dot(m, spec.rays[i]) < dw[i] - dv[i]) in_Q = false;
    bool translates = true;
    for (const IntVec& m2 : shifted) {
      IntVec sum = vec_add(m, m2);
      for (int i = 0; i < k; ++i)
        if (dot(sum, spec.rays[i]) < dw[i]) {
          translates = false;
          break;
        }
      if (!translates) break;
    }
    if (in_Q != translates) ok = false;
  });
  return ok;
}

bool grid_feasible(const LinearSystem& s, const GridSpec& grid) {
  const int n = s.vars();
  const long long D = grid.denominator.convert_to<long long>();
  const long long R = grid.radius.convert_to<long long>();
  std::vector<long long> a(n, -R * D);
  RatVec x(n);
  for (;;) {
    for (int i = 0; i < n; ++i) x[i] = Rat(a[i]) / Rat(D);
    if (satisfies(s, x)) return true;
    int pos = n - 1;
    while (pos >= 0 && a[pos] == R * D) {
      a[pos] = -R * D;
      --pos;
    }
    if (pos < 0) return false;
    ++a[pos];
  }
}

}  // namespace conic
