#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "odca/linalg.hpp"
#include "odca/model.hpp"

namespace odca {

// Brute-force baselines. They share the data types with the rest of the
// library but none of its algorithm code: evaluation, membership tests and
// rank computations below are written from scratch so that differential
// tests compare two genuinely independent implementations.

// First word in (length, lex) order with f_a(w) ≠ f_b(w) among |w| ≤ max_len.
std::optional<Word> brute_equiv(const WeightedOdca& a, const WeightedOdca& b,
                                std::size_t max_len);

// Exhaustive BFS in (length, lex) order, no pruning; branches whose counter
// exceeds counter_cap are abandoned. Target: p ∈ s, counter = m (when given),
// vector outside span(v).
std::optional<Word> brute_reach(const WeightedOdca& odca, const Configuration& c,
                                const VectorSpace& v, const std::vector<std::size_t>& s,
                                std::optional<std::size_t> m, std::size_t word_cap,
                                std::size_t counter_cap);

// Same search; the name documents that the result is the strict
// (length, lex)-minimal witness.
std::optional<Word> lex_min_witness(const WeightedOdca& odca, const Configuration& c,
                                    const VectorSpace& v, const std::vector<std::size_t>& s,
                                    std::optional<std::size_t> m, std::size_t word_cap,
                                    std::size_t counter_cap);

// Rank of the matrix [f(u·v)] over all words u, v with |u|,|v| ≤ depth.
std::size_t hankel_rank(const std::function<Rational(const Word&)>& f,
                        std::size_t alphabet_size, std::size_t depth);

// Deterministic from seed; total counter transitions; weights drawn from the
// pool. Default pool {-1, 0, 0, 1, 1/2}.
WeightedOdca random_odca(std::size_t num_q, std::size_t num_c, std::size_t alphabet_size,
                         const std::vector<Rational>& weight_pool, std::uint64_t seed);
WeightedOdca random_odca(std::size_t num_q, std::size_t num_c, std::size_t alphabet_size,
                         std::uint64_t seed);

}  // namespace odca
