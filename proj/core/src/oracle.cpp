#include "odca/oracle.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <string>

#include "odca/errors.hpp"

namespace odca {

namespace {

struct SimState {
  Vector x;
  std::size_t p = 0;
  long long n = 0;
};

// Hand-rolled single step: the oracle keeps its own semantics.
SimState sim_step(const WeightedOdca& odca, const SimState& s, std::size_t letter) {
  const bool pos = s.n > 0;
  const Matrix& d = pos ? odca.delta_pos[letter] : odca.delta_zero[letter];
  SimState next;
  next.x.assign(odca.fsm_size, Rational());
  for (std::size_t j = 0; j < odca.fsm_size; ++j) {
    for (std::size_t i = 0; i < odca.fsm_size; ++i) next.x[j] += s.x[i] * d.at(i, j);
  }
  const CounterMove& mv = pos ? odca.delta1[s.p][letter] : odca.delta0[s.p][letter];
  next.p = mv.target;
  next.n = s.n + mv.effect;
  return next;
}

Rational sim_eval(const WeightedOdca& odca, const Word& w) {
  SimState s{odca.lambda, odca.initial_counter, 0};
  for (std::size_t letter : w) s = sim_step(odca, s, letter);
  Rational out;
  for (std::size_t i = 0; i < odca.fsm_size; ++i) out += s.x[i] * odca.eta[i];
  return out;
}

// From-scratch solvability test for "x is a combination of the rows".
bool outside_span(const std::vector<Vector>& rows, const Vector& x) {
  std::vector<Vector> m = rows;
  Vector r = x;
  const std::size_t dim = x.size();
  std::size_t used = 0;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t piv = used;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[used], m[piv]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == used || m[i][col].is_zero()) continue;
      const Rational f = m[i][col] / m[used][col];
      for (std::size_t j = 0; j < dim; ++j) m[i][j] -= f * m[used][j];
    }
    if (!r[col].is_zero()) {
      const Rational f = r[col] / m[used][col];
      for (std::size_t j = 0; j < dim; ++j) r[j] -= f * m[used][j];
    }
    ++used;
  }
  for (std::size_t j = 0; j < dim; ++j) {
    if (!r[j].is_zero()) return true;
  }
  return false;
}

}  // namespace

std::optional<Word> brute_equiv(const WeightedOdca& a, const WeightedOdca& b,
                                std::size_t max_len) {
  if (a.alphabet != b.alphabet) throw InputError("brute_equiv: alphabet mismatch");
  std::vector<Word> frontier{Word{}};
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (const Word& w : frontier) {
      if (sim_eval(a, w) != sim_eval(b, w)) return w;
    }
    if (len == max_len) break;
    std::vector<Word> next;
    next.reserve(frontier.size() * a.num_letters());
    for (const Word& w : frontier) {
      for (std::size_t x = 0; x < a.num_letters(); ++x) {
        Word child = w;
        child.push_back(x);
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::optional<Word> brute_reach(const WeightedOdca& odca, const Configuration& c,
                                const VectorSpace& v, const std::vector<std::size_t>& s,
                                std::optional<std::size_t> m, std::size_t word_cap,
                                std::size_t counter_cap) {
  struct Item {
    Word w;
    SimState st;
  };
  std::queue<Item> fifo;
  fifo.push({Word{}, SimState{c.x, c.p, c.n}});
  while (!fifo.empty()) {
    Item cur = std::move(fifo.front());
    fifo.pop();
    const bool state_ok = std::find(s.begin(), s.end(), cur.st.p) != s.end();
    const bool counter_ok = !m || cur.st.n == static_cast<long long>(*m);
    if (state_ok && counter_ok && outside_span(v.basis(), cur.st.x)) return cur.w;
    if (cur.w.size() == word_cap) continue;
    for (std::size_t x = 0; x < odca.num_letters(); ++x) {
      SimState child = sim_step(odca, cur.st, x);
      if (child.n > static_cast<long long>(counter_cap)) continue;
      Word cw = cur.w;
      cw.push_back(x);
      fifo.push({std::move(cw), std::move(child)});
    }
  }
  return std::nullopt;
}

std::optional<Word> lex_min_witness(const WeightedOdca& odca, const Configuration& c,
                                    const VectorSpace& v, const std::vector<std::size_t>& s,
                                    std::optional<std::size_t> m, std::size_t word_cap,
                                    std::size_t counter_cap) {
  return brute_reach(odca, c, v, s, m, word_cap, counter_cap);
}

std::size_t hankel_rank(const std::function<Rational(const Word&)>& f,
                        std::size_t alphabet_size, std::size_t depth) {
  std::vector<Word> words{Word{}};
  for (std::size_t from = 0, len = 0; len < depth; ++len) {
    const std::size_t end = words.size();
    for (std::size_t i = from; i < end; ++i) {
      for (std::size_t x = 0; x < alphabet_size; ++x) {
        Word w = words[i];
        w.push_back(x);
        words.push_back(std::move(w));
      }
    }
    from = end;
  }
  std::vector<Vector> h(words.size(), Vector(words.size()));
  for (std::size_t r = 0; r < words.size(); ++r) {
    for (std::size_t col = 0; col < words.size(); ++col) {
      Word uv = words[r];
      uv.insert(uv.end(), words[col].begin(), words[col].end());
      h[r][col] = f(uv);
    }
  }
  // From-scratch row reduction.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < words.size() && rank < words.size(); ++col) {
    std::size_t piv = rank;
    while (piv < h.size() && h[piv][col].is_zero()) ++piv;
    if (piv == h.size()) continue;
    std::swap(h[rank], h[piv]);
    for (std::size_t i = rank + 1; i < h.size(); ++i) {
      if (h[i][col].is_zero()) continue;
      const Rational f2 = h[i][col] / h[rank][col];
      for (std::size_t j = col; j < words.size(); ++j) h[i][j] -= f2 * h[rank][j];
    }
    ++rank;
  }
  return rank;
}

WeightedOdca random_odca(std::size_t num_q, std::size_t num_c, std::size_t alphabet_size,
                         const std::vector<Rational>& weight_pool, std::uint64_t seed) {
  if (num_q < 1 || num_c < 1 || alphabet_size < 1 || alphabet_size > 26) {
    throw InputError("random_odca: sizes out of range");
  }
  if (weight_pool.empty()) throw InputError("random_odca: empty weight pool");
  std::mt19937_64 gen(seed);
  auto pick = [&gen](std::size_t size) { return static_cast<std::size_t>(gen() % size); };

  WeightedOdca odca;
  for (std::size_t i = 0; i < alphabet_size; ++i) {
    odca.alphabet.push_back(static_cast<char>('a' + i));
  }
  for (std::size_t p = 0; p < num_c; ++p) odca.counter_names.push_back("p" + std::to_string(p));
  odca.initial_counter = 0;
  odca.delta0.assign(num_c, std::vector<CounterMove>(alphabet_size));
  odca.delta1.assign(num_c, std::vector<CounterMove>(alphabet_size));
  for (std::size_t p = 0; p < num_c; ++p) {
    for (std::size_t a = 0; a < alphabet_size; ++a) {
      odca.delta0[p][a] = {pick(num_c), static_cast<int>(pick(2))};
      odca.delta1[p][a] = {pick(num_c), static_cast<int>(pick(3)) - 1};
    }
  }
  odca.fsm_size = num_q;
  odca.lambda.resize(num_q);
  odca.eta.resize(num_q);
  for (std::size_t i = 0; i < num_q; ++i) odca.lambda[i] = weight_pool[pick(weight_pool.size())];
  for (std::size_t i = 0; i < num_q; ++i) odca.eta[i] = weight_pool[pick(weight_pool.size())];
  for (std::size_t a = 0; a < alphabet_size; ++a) {
    Matrix zero(num_q, num_q), pos(num_q, num_q);
    for (std::size_t i = 0; i < num_q; ++i) {
      for (std::size_t j = 0; j < num_q; ++j) zero.at(i, j) = weight_pool[pick(weight_pool.size())];
    }
    for (std::size_t i = 0; i < num_q; ++i) {
      for (std::size_t j = 0; j < num_q; ++j) pos.at(i, j) = weight_pool[pick(weight_pool.size())];
    }
    odca.delta_zero.push_back(std::move(zero));
    odca.delta_pos.push_back(std::move(pos));
  }
  return odca;
}

WeightedOdca random_odca(std::size_t num_q, std::size_t num_c, std::size_t alphabet_size,
                         std::uint64_t seed) {
  static const std::vector<Rational> kPool{Rational(-1), Rational(0), Rational(0), Rational(1),
                                           Rational(BigInt(1), BigInt(2))};
  return random_odca(num_q, num_c, alphabet_size, kPool, seed);
}

}  // namespace odca
