#include "conic/search.hpp"

#include "conic/almost_simplicial.hpp"
#include "conic/errors.hpp"

#include <algorithm>

namespace conic {

namespace {

// Indices of points every candidate set must contain under the
// almost-simplicial Gorenstein pruning: the origin plus the forced interval.
std::vector<int> required_indices(const Analysis& analysis) {
  const auto& ctx = analysis.context();
  const auto& pts = ctx.points();
  std::vector<Int> betas1d;
  for (const LatticePoint& b : ctx.betas()) {
    if (b.size() != 1) throw std::invalid_argument("pruning requires a rank-one context");
    betas1d.push_back(b[0]);
  }
  BetaSystem bs = make_beta_system(std::move(betas1d));
  std::vector<Int> forced = forced_interval(bs).integers();
  forced.push_back(Int(0));
  std::vector<int> req;
  for (const Int& x : forced) {
    LatticePoint p{x};
    auto it = std::lower_bound(pts.begin(), pts.end(), p);
    if (it != pts.end() && *it == p) req.push_back(static_cast<int>(it - pts.begin()));
  }
  std::sort(req.begin(), req.end());
  req.erase(std::unique(req.begin(), req.end()), req.end());
  return req;
}

}  // namespace

SearchResult find_incredulous(const Analysis& analysis, const SearchConfig& cfg) {
  const auto& pts = analysis.points();
  const int r = static_cast<int>(pts.size());
  SearchResult result;

  std::vector<int> required;
  std::vector<int> free_idx;
  if (cfg.pruning == Pruning::GorensteinAlmostSimplicial) {
    required = required_indices(analysis);
    for (int i = 0; i < r; ++i)
      if (!std::binary_search(required.begin(), required.end(), i)) free_idx.push_back(i);
  } else {
    for (int i = 0; i < r; ++i) free_idx.push_back(i);
  }
  const int f = static_cast<int>(free_idx.size());

  auto consider = [&](const std::vector<int>& chosen_free) -> bool {
    if (required.empty() && chosen_free.empty()) return false;  // sets are nonempty
    if (cfg.max_subsets && result.subsets_examined >= *cfg.max_subsets)
      throw CapExceeded("find_incredulous: subset cap exceeded", result.subsets_examined);
    std::set<LatticePoint> I;
    for (int i : required) I.insert(pts[i]);
    for (int i : chosen_free) I.insert(pts[i]);
    ++result.subsets_examined;
    LockReport rep = analysis.check_incredulous(I);
    if (rep.incredulous) {
      result.incredulous_sets.emplace_back(I.begin(), I.end());
      return cfg.mode == SearchMode::FirstFound;
    }
    return false;
  };

  // Ascending size, lexicographic within a size.
  bool done = false;
  std::vector<int> combo;
  for (int size = 0; size <= f && !done; ++size) {
    if (size == 0) {
      done = consider({});
      continue;
    }
    combo.assign(size, 0);
    for (int i = 0; i < size; ++i) combo[i] = i;
    for (;;) {
      std::vector<int> chosen;
      chosen.reserve(size);
      for (int i : combo) chosen.push_back(free_idx[i]);
      if (consider(chosen)) {
        done = true;
        break;
      }
      int pos = size - 1;
      while (pos >= 0 && combo[pos] == f - size + pos) --pos;
      if (pos < 0) break;
      ++combo[pos];
      for (int i = pos + 1; i < size; ++i) combo[i] = combo[i - 1] + 1;
    }
  }

  if (cfg.mode == SearchMode::AllMinimal) {
    std::vector<std::vector<LatticePoint>> minimal;
    for (const auto& s : result.incredulous_sets) {
      bool has_smaller = false;
      for (const auto& t : minimal)
        if (std::includes(s.begin(), s.end(), t.begin(), t.end())) {
          has_smaller = true;
          break;
        }
      if (!has_smaller) minimal.push_back(s);
    }
    result.incredulous_sets = std::move(minimal);
  }

  std::sort(result.incredulous_sets.begin(), result.incredulous_sets.end(),
            [](const std::vector<LatticePoint>& a, const std::vector<LatticePoint>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return result;
}

}  // namespace conic
