#pragma once

#include "conic/arith.hpp"

#include <optional>
#include <vector>

namespace conic {

enum class RelOp { Eq, Le, Lt };

// One constraint: a . x  (op)  b
struct LinRel {
  RatVec a;
  Rat b;
  RelOp op;
};

// Mixed strict/weak rational system. Feasibility is decided by exact
// Fourier-Motzkin elimination; strictness propagates through combinations
// (strict + weak = strict).
class LinearSystem {
 public:
  explicit LinearSystem(int vars) : vars_(vars) {}

  int vars() const { return vars_; }
  const std::vector<LinRel>& relations() const { return rels_; }

  void add(RatVec a, Rat b, RelOp op);
  void add_eq(RatVec a, Rat b) { add(std::move(a), std::move(b), RelOp::Eq); }
  void add_le(RatVec a, Rat b) { add(std::move(a), std::move(b), RelOp::Le); }
  void add_lt(RatVec a, Rat b) { add(std::move(a), std::move(b), RelOp::Lt); }
  void add_ge(RatVec a, Rat b);
  void add_gt(RatVec a, Rat b);

 private:
  int vars_;
  std::vector<LinRel> rels_;
};

bool feasible(const LinearSystem& s);

// Exact witness; the midpoint of each back-substituted interval, so it is
// strictly interior wherever the system leaves slack.
std::optional<RatVec> feasible_witness(const LinearSystem& s);

bool satisfies(const LinearSystem& s, const RatVec& x);

}  // namespace conic
