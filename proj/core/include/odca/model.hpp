#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "odca/linalg.hpp"

namespace odca {

// A word is a sequence of letter indices into the owning machine's alphabet.
using Word = std::vector<std::size_t>;

struct CounterMove {
  std::size_t target = 0;
  int effect = 0;
};

struct WeightedOdca {
  std::vector<char> alphabet;
  std::vector<std::string> counter_names;
  std::size_t initial_counter = 0;
  std::vector<std::vector<CounterMove>> delta0;  // [counter state][letter], effects in {0,+1}
  std::vector<std::vector<CounterMove>> delta1;  // [counter state][letter], effects in {-1,0,+1}
  std::size_t fsm_size = 0;
  Vector lambda;
  std::vector<Matrix> delta_zero;  // [letter]
  std::vector<Matrix> delta_pos;   // [letter]
  Vector eta;

  std::size_t num_counter_states() const { return counter_names.size(); }
  std::size_t num_letters() const { return alphabet.size(); }

  std::optional<std::size_t> letter_index(char c) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (alphabet[i] == c) return i;
    }
    return std::nullopt;
  }
  const Matrix& matrix(std::size_t letter, bool positive) const {
    return positive ? delta_pos[letter] : delta_zero[letter];
  }
  const CounterMove& move(std::size_t state, std::size_t letter, bool positive) const {
    return positive ? delta1[state][letter] : delta0[state][letter];
  }
};

Word parse_word(const std::vector<char>& alphabet, const std::string& text);
std::string format_word(const std::vector<char>& alphabet, const Word& w);

struct Configuration {
  Vector x;
  std::size_t p = 0;
  long long n = 0;
};

struct RunResult {
  Configuration final;
  Matrix weight_effect;
  long long counter_effect = 0;
  long long min_counter = 0;
  long long max_counter = 0;
  bool floating = true;  // counter stayed > 0 at every strict prefix position
};

// Empty list means the machine is well-formed; otherwise one message per breach.
std::vector<std::string> validate(const WeightedOdca& odca);

Configuration initial_config(const WeightedOdca& odca);
Configuration step(const WeightedOdca& odca, const Configuration& c, std::size_t letter);
RunResult run(const WeightedOdca& odca, const Configuration& c, const Word& w);
Rational eval(const WeightedOdca& odca, const Word& w);
// x·we(run from c)·ηᵀ, the accepting weight from an arbitrary configuration.
Rational eval_config(const WeightedOdca& odca, const Configuration& c, const Word& w);

// Weighted automaton with a deterministic control component. Each control
// state carries its own sparse step matrix per letter: the unfolding moves
// weight between counter levels, and the level shift depends on the control
// state, not just the letter.
struct SparseEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational w;
};

struct ControlledWa {
  std::size_t num_controls = 0;
  std::size_t initial_control = 0;
  std::size_t dead_control = 0;
  std::size_t wa_size = 0;
  std::size_t num_letters = 0;
  std::vector<std::vector<std::size_t>> ctrl;               // [control][letter]
  std::vector<std::vector<std::vector<SparseEntry>>> steps; // [control][letter]
  Vector lambda;
  Vector eta;
};

struct UninitialisedWa {
  std::size_t size = 0;
  std::vector<Matrix> delta;  // [letter]
  Vector eta;
};

struct Unfolding {
  ControlledWa wa;
  std::size_t bound = 0;     // M
  std::size_t fsm_size = 0;  // |Q| of the unfolded machine

  std::size_t control_of(std::size_t p, std::size_t m) const { return p * (bound + 1) + m; }
  std::size_t wa_index(std::size_t q, std::size_t m) const { return m * fsm_size + q; }
};

// Control states C×[0,M] plus a dead sink; WA states Q×[0,M]. Counter
// increments past level M route to the sink with zero step rows, so runs
// that would exceed M contribute 0.
Unfolding unfold(const WeightedOdca& odca, std::size_t M);

// unfold after checking that the projected number of table cells stays under
// cell_cap; throws ResourceError otherwise (theoretical bounds can be
// astronomically large, and they must fail loudly rather than truncate).
Unfolding unfold_within(const WeightedOdca& odca, const BigInt& M, std::size_t cell_cap);

// The zero-test-free automaton on C×Q: letter matrices follow delta1 and the
// positive-sign weight matrices; index (p,i) = p·|Q|+i.
UninitialisedWa underlying_wa(const WeightedOdca& odca);

// (control, vector) of the unfolding holding c.x in the level-c.n block.
std::pair<std::size_t, Vector> embed_config(const WeightedOdca& odca, const Configuration& c,
                                            std::size_t M);

// Basis of v placed in block `level` of an (M+1)-level unfolding.
VectorSpace lift_space(const VectorSpace& v, std::size_t level, std::size_t M);

// Evaluation of the controlled automaton itself (control path from the
// initial control, weight folded through the per-control steps).
Rational eval_controlled(const ControlledWa& wa, const Word& w);

}  // namespace odca
