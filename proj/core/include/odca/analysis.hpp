#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "odca/equiv.hpp"
#include "odca/model.hpp"
#include "odca/wa_algo.hpp"

namespace odca {

// W^{p,m}: the vectors x for which configuration (x,p,m) is indistinguishable,
// on all words of length ≤ KN, from some configuration of the underlying
// uninitialised automaton. KN = |C|·|Q|.
struct WSpaceTable {
  std::size_t kn = 0;
  std::vector<std::vector<VectorSpace>> w;  // [counter state][m] for m < kn

  const VectorSpace& at(std::size_t p, std::size_t m) const { return w.at(p).at(m); }
};

WSpaceTable w_space_table(const WeightedOdca& odca);

struct RegularityResult {
  bool regular = true;
  // u drives the counter into the high window, v then reaches a low
  // configuration outside its W space; together they certify that no
  // weighted automaton computes the same function.
  std::optional<std::pair<Word, Word>> witness;
};

RegularityResult is_regular(const WeightedOdca& odca, const SearchLimits& limits = {});

struct CoverFailure {
  std::size_t coveree_state = 0;  // q whose span cannot be matched
  std::size_t basis_index = 0;    // unit vector that defeated every candidate
};

struct CoverResult {
  bool covered = true;
  std::vector<std::size_t> partner;  // coveree counter state -> coverer counter state
  // Row j of alpha[q]: initial distribution of the coverer equivalent to the
  // j-th unit vector started at (q, 0) in the coveree.
  std::vector<Matrix> alpha;
  std::optional<CoverFailure> failure;
};

// Does every initialization of the (uninitialised) coveree have an equivalent
// initialization of the coverer? Initial distributions and initial counter
// states of the two machines are ignored. The equivalence queries inside run
// with the supplied counter bound (the full theoretical bound is impractical).
CoverResult covers(const WeightedOdca& coverer, const WeightedOdca& coveree,
                   std::optional<std::size_t> bound = std::nullopt,
                   const SearchLimits& limits = {});

struct CoverableResult {
  bool equivalent = false;
  CoverResult forward;   // a covers b
  CoverResult backward;  // b covers a
};

CoverableResult coverable_equiv(const WeightedOdca& a, const WeightedOdca& b,
                                std::optional<std::size_t> bound = std::nullopt,
                                const SearchLimits& limits = {});

}  // namespace odca
