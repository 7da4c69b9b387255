#pragma once

#include "conic/paths.hpp"

#include <map>
#include <set>
#include <vector>

namespace conic {

// Degree-wise multiset of lattice points: the computable shadow of the
// complex attached to a lattice point. Degree 0 is always {point: 1}.
struct ComplexProfile {
  LatticePoint point;
  std::map<int, std::map<LatticePoint, long long>> degrees;

  int length() const { return degrees.empty() ? 0 : degrees.rbegin()->first; }
  long long multiplicity(const LatticePoint& q, int degree) const;
  bool operator==(const ComplexProfile& o) const { return point == o.point && degrees == o.degrees; }
};

ComplexProfile build_profile(const ComplexContext& ctx, const LatticePoint& P);

// Splice Kj into every positive-degree occurrence of j: an occurrence at
// degree l is replaced by Kj's degree-d entries at degree l + d - 1.
ComplexProfile substitute(const ComplexProfile& K, const LatticePoint& j, const ComplexProfile& Kj);

struct LockReport {
  bool lockable = false;
  bool incredulous = false;
  std::map<LatticePoint, ComplexProfile> final_profiles;  // when lockable
  std::vector<LatticePoint> cycle_witness;                // when not
};

// Profiles for every lattice point plus the appearance graph, built once.
class Analysis {
 public:
  explicit Analysis(const ComplexContext& ctx);

  const ComplexContext& context() const { return ctx_; }
  const std::vector<LatticePoint>& points() const { return ctx_.points(); }
  const ComplexProfile& profile(const LatticePoint& P) const;
  const std::vector<ComplexProfile>& profiles() const { return profiles_; }

  LockReport check_lockable(const std::set<LatticePoint>& I) const;
  LockReport check_incredulous(const std::set<LatticePoint>& I) const;

 private:
  const ComplexContext& ctx_;
  std::vector<ComplexProfile> profiles_;          // indexed like ctx.points()
  std::vector<std::vector<int>> appears_in_;      // edges P -> Q (point indices)
};

}  // namespace conic
