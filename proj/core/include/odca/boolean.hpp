#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "odca/equiv.hpp"
#include "odca/model.hpp"

namespace odca {

// ODCA over the boolean semiring. FSM states are capped at 64 so that state
// sets and matrix rows are single bitmasks.
struct BooleanOdca {
  std::vector<char> alphabet;
  std::vector<std::string> counter_names;
  std::size_t initial_counter = 0;
  std::vector<std::vector<CounterMove>> delta0;
  std::vector<std::vector<CounterMove>> delta1;
  std::size_t fsm_size = 0;
  std::uint64_t lambda = 0;
  std::uint64_t eta = 0;
  std::vector<std::vector<std::uint64_t>> delta_zero;  // [letter][state] -> successor set
  std::vector<std::vector<std::uint64_t>> delta_pos;

  std::size_t num_counter_states() const { return counter_names.size(); }
  std::size_t num_letters() const { return alphabet.size(); }
  std::optional<std::size_t> letter_index(char c) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (alphabet[i] == c) return i;
    }
    return std::nullopt;
  }
};

std::vector<std::string> validate(const BooleanOdca& b);

// 1 iff some run over w ends in an accepting state.
bool bool_eval(const BooleanOdca& b, const Word& w);

struct DeterminismResult {
  bool deterministic = true;
  BigInt cap;  // counter cap the exploration was entitled to use
};

// True iff the initial support is a single state and every reachable nonempty
// support stays a single state, exploring counters up to counter_cap
// (default (|C|·2^|Q|)²). Words whose support dies are not counted as active.
DeterminismResult is_deterministic(const BooleanOdca& b,
                                   std::optional<std::size_t> counter_cap = std::nullopt);

// Full subset construction: FSM states are the 2^|Q| subsets (so |Q| ≤ 6),
// counter structure unchanged. The result is always deterministic.
BooleanOdca determinize(const BooleanOdca& b);

// Restriction to the FSM states reachable from the initial support through
// either counter sign; used when serializing determinized machines.
BooleanOdca reachable_part(const BooleanOdca& b);

// The same machine with 0/1 rational weights; requires determinism, which
// makes boolean and rational semantics coincide.
WeightedOdca embed_rational(const BooleanOdca& b);

// Equivalence via determinize + rational embedding + weighted equivalence.
EquivVerdict bool_equiv(const BooleanOdca& a, const BooleanOdca& b,
                        std::optional<std::size_t> bound_override = std::nullopt,
                        const SearchLimits& limits = {});

}  // namespace odca
