#pragma once

#include <cstddef>
#include <optional>

#include "odca/model.hpp"
#include "odca/wa_algo.hpp"

namespace odca {

// Counter bound that makes the unfolding reduction complete, reconstructed
// from the proof constants (belt size 42·K¹⁴ times the K⁵ background factor,
// doubled for slack): 84·K²⁴. Deliberately conservative and usually far too
// large to unfold; callers pass overrides and lose the completeness flag.
BigInt theoretical_counter_bound(std::size_t K);

struct EquivVerdict {
  bool equivalent = false;
  std::optional<Word> witness;  // present iff not equivalent
  BigInt bound_used;
  bool complete = true;
};

// Equivalence of two weighted ODCAs over the same alphabet via unfolding both
// to the counter bound and deciding weighted-automata equivalence there.
// Witnesses are (length, lex)-minimal and validated on both machines.
EquivVerdict odca_equiv(const WeightedOdca& a, const WeightedOdca& b,
                        std::optional<std::size_t> bound_override = std::nullopt,
                        const SearchLimits& limits = {});

// Same decision from caller-supplied initial vectors and counter states, both
// at counter value 0.
EquivVerdict config_equiv(const WeightedOdca& a, const Vector& xa, std::size_t pa,
                          const WeightedOdca& b, const Vector& xb, std::size_t pb,
                          std::optional<std::size_t> bound_override = std::nullopt,
                          const SearchLimits& limits = {});

}  // namespace odca
