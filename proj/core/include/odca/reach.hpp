#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "odca/model.hpp"
#include "odca/wa_algo.hpp"

namespace odca {

// Counter values reached by a minimal reachability witness stay below
// max(n, m) + K² with K = |Q|·|C|, so this unfolding depth is complete.
std::size_t counter_bound_reach(const WeightedOdca& odca, std::size_t n, std::size_t m);
// Same for coverability: max(n, K) + K².
std::size_t counter_bound_cover(const WeightedOdca& odca, std::size_t n);

struct ReachResult {
  std::optional<Word> witness;
  std::size_t bound_used = 0;
  bool complete = true;  // bound_used covers the full decision procedure
};

// First word (length, then lex) leading from c to a configuration (x', p', m)
// with p' ∈ s and x' outside v. Every returned witness is replay-validated.
ReachResult covs_reach(const WeightedOdca& odca, const Configuration& c, const VectorSpace& v,
                       const std::vector<std::size_t>& s, std::size_t m,
                       std::optional<std::size_t> bound_override = std::nullopt,
                       const SearchLimits& limits = {});

// Same with unconstrained target counter value.
ReachResult covs_cover(const WeightedOdca& odca, const Configuration& c, const VectorSpace& v,
                       const std::vector<std::size_t>& s,
                       std::optional<std::size_t> bound_override = std::nullopt,
                       const SearchLimits& limits = {});

}  // namespace odca
