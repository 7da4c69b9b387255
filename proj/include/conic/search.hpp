#pragma once

#include "conic/complexes.hpp"

#include <cstdint>
#include <optional>

namespace conic {

enum class SearchMode { Exhaustive, FirstFound, AllMinimal };
enum class Pruning { None, GorensteinAlmostSimplicial };

struct SearchConfig {
  SearchMode mode = SearchMode::Exhaustive;
  Pruning pruning = Pruning::None;
  std::optional<std::uint64_t> max_subsets;
};

struct SearchResult {
  std::vector<std::vector<LatticePoint>> incredulous_sets;  // each sorted; list sorted by (size, lex)
  std::uint64_t subsets_examined = 0;
};

// Sweep nonempty subsets of the lattice points in ascending size, then
// lexicographically. GorensteinAlmostSimplicial pruning requires a rank-one
// zero-sum context with nonzero betas and keeps only subsets containing the
// origin and the forced interval.
SearchResult find_incredulous(const Analysis& analysis, const SearchConfig& cfg);

}  // namespace conic
