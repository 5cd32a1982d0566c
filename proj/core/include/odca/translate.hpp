#pragma once

#include <map>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "odca/errors.hpp"
#include "odca/model.hpp"

namespace odca {

struct OcaMove {
  int effect = 0;
  Rational weight;
  bool operator==(const OcaMove&) const = default;
};

// Weighted one-counter automaton: every state may move on every letter, with
// the counter update attached per transition instead of per state. Absent
// entries carry weight 0. trans0 applies at counter 0 (effects in {0,+1}),
// trans1 above 0 (effects in {-1,0,+1}).
struct WeightedOca {
  std::vector<char> alphabet;
  std::size_t size = 0;
  Vector lambda;
  Vector eta;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, OcaMove> trans0;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, OcaMove> trans1;

  std::size_t num_letters() const { return alphabet.size(); }
  std::optional<std::size_t> letter_index(char c) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (alphabet[i] == c) return i;
    }
    return std::nullopt;
  }
};

std::vector<std::string> validate(const WeightedOca& oca);

// Sum over all runs of the word from the initial configuration; exact, no
// determinacy assumption.
Rational oca_eval(const WeightedOca& oca, const Word& w);

// color[i] is the representative of i's class; color[color[i]] = color[i] and
// color[i] <= i.
struct Coloring {
  std::vector<std::size_t> color;
};

struct DeterminacyViolation {
  Word word;
  long long counter_a = 0;
  long long counter_b = 0;
};

class DeterminacyError : public InputError {
 public:
  DeterminacyError(DeterminacyViolation v, const std::string& msg)
      : InputError(msg), violation(std::move(v)) {}
  DeterminacyViolation violation;
};

// BFS over supports reachable from (lambda, 0), unioning the colors of states
// that share a support. Returns the coloring, or the shortest word whose runs
// disagree on the counter together with two of the counter values reached.
std::variant<Coloring, DeterminacyViolation> check_counter_determinacy(const WeightedOca& oca);

// Counter states are the color classes (plus a sink class when some class
// lacks a move on some letter); weight matrices collect all transition
// weights of the respective counter region. Throws DeterminacyError when the
// input is not counter-deterministic.
WeightedOdca oca_to_odca(const WeightedOca& oca);

// Product construction on C x Q; state (p, i) is p * |Q| + i.
WeightedOca odca_to_oca(const WeightedOdca& odca);

}  // namespace odca
