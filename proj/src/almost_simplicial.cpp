#include "conic/almost_simplicial.hpp"

#include "conic/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace conic {

int BetaSystem::num_positive() const {
  int k = 0;
  for (const Int& b : betas)
    if (b > 0) ++k;
  return k;
}

Int BetaSystem::positive_sum() const {
  Int s = 0;
  for (const Int& b : betas)
    if (b > 0) s += b;
  return s;
}

Int BetaSystem::negative_sum() const {
  Int s = 0;
  for (const Int& b : betas)
    if (b < 0) s += b;
  return s;
}

BetaSystem make_beta_system(std::vector<Int> betas) {
  std::sort(betas.begin(), betas.end(), [](const Int& a, const Int& b) { return a > b; });
  Int total = 0;
  int pos = 0, neg = 0;
  for (const Int& b : betas) {
    if (b == 0) throw ZeroBetaUnsupported("beta system: zero entry");
    total += b;
    (b > 0 ? pos : neg) += 1;
  }
  if (total != 0) throw std::invalid_argument("beta system: entries must sum to zero");
  if (pos < 2 || neg < 2) throw std::invalid_argument("beta system: needs at least two entries of each sign");
  return BetaSystem{std::move(betas)};
}

std::variant<BetaSystem, ZeroBetaPresent> beta_mode(const ClassGroupData& cg) {
  if (cg.free_rank != 1) throw NotRankOne("beta_mode: class group free rank is not one");
  std::vector<Int> betas;
  betas.reserve(cg.betas.size());
  for (const LatticePoint& b : cg.betas) {
    if (b[0] == 0) return ZeroBetaPresent{};
    betas.push_back(b[0]);
  }
  return make_beta_system(std::move(betas));
}

std::vector<Int> OpenInterval::integers() const {
  std::vector<Int> v;
  for (Int x = lo + 1; x < hi; ++x) v.push_back(x);
  return v;
}

OpenInterval forced_interval(const BetaSystem& bs) {
  const int k = bs.num_positive();
  const int m = bs.count();
  Int lo = 1, hi = -1;
  for (int j = k + 1; j < m; ++j) lo += bs.betas[j];  // negatives except the largest
  for (int j = 0; j < k - 1; ++j) hi += bs.betas[j];  // positives except the smallest
  return OpenInterval{lo, hi};
}

OpenInterval full_length_window(const BetaSystem& bs) {
  return OpenInterval{-bs.betas.front(), -bs.betas.back()};
}

namespace {

std::map<Int, int> multiset_of(const std::vector<Int>& v) {
  std::map<Int, int> m;
  for (const Int& x : v) m[x] += 1;
  return m;
}

std::vector<Int> flipped(const std::vector<Int>& v) {
  std::vector<Int> f;
  f.reserve(v.size());
  for (const Int& x : v) f.push_back(-x);
  return f;
}

bool matches(const BetaSystem& bs, std::initializer_list<int> pattern, bool up_to_flip) {
  std::vector<Int> p;
  for (int x : pattern) p.push_back(Int(x));
  auto target = multiset_of(p);
  if (multiset_of(bs.betas) == target) return true;
  return up_to_flip && multiset_of(flipped(bs.betas)) == target;
}

std::vector<Int> interval_points(const Int& lo_excl, const Int& hi_excl, bool include_hi) {
  std::vector<Int> v;
  for (Int x = lo_excl + 1; x < hi_excl; ++x) v.push_back(x);
  if (include_hi) v.push_back(hi_excl);
  return v;
}

}  // namespace

Classification classify(const std::variant<BetaSystem, ZeroBetaPresent>& input) {
  Classification c;
  if (std::holds_alternative<ZeroBetaPresent>(input)) {
    c.has_nccr = false;
    c.reason = "a zero beta makes every self-substitution reappear";
    return c;
  }
  const BetaSystem& bs = std::get<BetaSystem>(input);

  if (matches(bs, {2, 1, -1, -1, -1}, true)) {
    c.has_nccr = true;
    c.witness = {Int(-1), Int(0), Int(1)};
    c.reason = "special case {2,1,-1,-1,-1} up to sign flip";
    return c;
  }
  if (matches(bs, {1, 1, 1, -1, -1, -1}, false)) {
    c.has_nccr = true;
    c.witness = {Int(-1), Int(0), Int(1)};
    c.reason = "special case {1,1,1,-1,-1,-1}";
    return c;
  }
  // Trapezoid pattern: two betas of each sign, matched in absolute value.
  if (bs.count() == 4 && bs.num_positive() == 2 && bs.betas[0] == -bs.betas[3] && bs.betas[1] == -bs.betas[2]) {
    c.has_nccr = true;
    if (bs.betas[0] != bs.betas[1])
      c.witness = interval_points(bs.betas[3], bs.betas[0], false);  // (b4, b1)
    else
      c.witness = interval_points(-bs.betas[0], bs.betas[0], true);  // (-b1, b1]
    c.reason = "trapezoid pattern (p,q,-q,-p)";
    return c;
  }

  c.has_nccr = false;
  if (matches(bs, {2, 1, 1, -2, -2}, true) || matches(bs, {2, 2, 2, -3, -3}, true) ||
      matches(bs, {2, 2, -1, -1, -1, -1}, true))
    c.reason = "special case with no incredulous subset";
  else
    c.reason = "general almost simplicial case without NCCR";
  return c;
}

}  // namespace conic
