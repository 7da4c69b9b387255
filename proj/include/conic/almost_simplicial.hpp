#pragma once

#include "conic/class_group.hpp"

#include <string>
#include <variant>
#include <vector>

namespace conic {

// Nonzero zero-sum beta list of a rank-one (almost simplicial Gorenstein)
// cone, sorted descending.
struct BetaSystem {
  std::vector<Int> betas;

  int count() const { return static_cast<int>(betas.size()); }
  int top_dim() const { return count() - 1; }
  int num_positive() const;
  Int positive_sum() const;
  Int negative_sum() const;
};

struct ZeroBetaPresent {};

BetaSystem make_beta_system(std::vector<Int> betas);  // sorts and checks invariants

// Extract 1-D betas from rank-one class-group data. Throws NotRankOne.
std::variant<BetaSystem, ZeroBetaPresent> beta_mode(const ClassGroupData& cg);

// Open integer interval (lo, hi).
struct OpenInterval {
  Int lo, hi;
  std::vector<Int> integers() const;
  bool contains(const Int& x) const { return lo < x && x < hi; }
};

// Every incredulous set must contain all integer points of this interval.
OpenInterval forced_interval(const BetaSystem& bs);

// Profiles of points inside this window have full length; outside, shorter.
OpenInterval full_length_window(const BetaSystem& bs);

struct Classification {
  bool has_nccr = false;
  std::vector<Int> witness;  // an incredulous set of 1-D points, when has_nccr
  std::string reason;
};

Classification classify(const std::variant<BetaSystem, ZeroBetaPresent>& input);

}  // namespace conic
