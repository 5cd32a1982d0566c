#include "odca/model.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "odca/errors.hpp"

namespace odca {

Word parse_word(const std::vector<char>& alphabet, const std::string& text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    std::size_t idx = alphabet.size();
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (alphabet[i] == c) {
        idx = i;
        break;
      }
    }
    if (idx == alphabet.size()) {
      throw InputError(std::string("symbol '") + c + "' is not in the alphabet");
    }
    w.push_back(idx);
  }
  return w;
}

std::string format_word(const std::vector<char>& alphabet, const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (std::size_t letter : w) s += alphabet.at(letter);
  return s;
}

std::vector<std::string> validate(const WeightedOdca& odca) {
  std::vector<std::string> bad;
  const std::size_t nc = odca.num_counter_states();
  const std::size_t na = odca.num_letters();
  const std::size_t nq = odca.fsm_size;

  if (na == 0) bad.push_back("alphabet is empty");
  if (std::set<char>(odca.alphabet.begin(), odca.alphabet.end()).size() != na) {
    bad.push_back("alphabet symbols are not distinct");
  }
  if (nc == 0) bad.push_back("no counter states");
  if (odca.initial_counter >= nc) bad.push_back("initial counter state out of range");

  auto check_delta = [&](const std::vector<std::vector<CounterMove>>& d, const char* name,
                         int lo) {
    if (d.size() != nc) {
      bad.push_back(std::string(name) + " has " + std::to_string(d.size()) +
                    " rows, expected " + std::to_string(nc));
      return;
    }
    for (std::size_t p = 0; p < nc; ++p) {
      if (d[p].size() != na) {
        bad.push_back(std::string(name) + " row " + odca.counter_names[p] + " has " +
                      std::to_string(d[p].size()) + " entries, expected " + std::to_string(na));
        continue;
      }
      for (std::size_t a = 0; a < na; ++a) {
        const CounterMove& mv = d[p][a];
        if (mv.target >= nc) {
          bad.push_back(std::string(name) + "(" + odca.counter_names[p] + "," +
                        odca.alphabet[a] + ") targets an unknown state");
        }
        if (mv.effect < lo || mv.effect > 1) {
          bad.push_back(std::string(name) + "(" + odca.counter_names[p] + "," +
                        odca.alphabet[a] + ") has effect " + std::to_string(mv.effect));
        }
      }
    }
  };
  check_delta(odca.delta0, "delta0", 0);
  check_delta(odca.delta1, "delta1", -1);

  if (odca.lambda.size() != nq) bad.push_back("lambda dimension mismatch");
  if (odca.eta.size() != nq) bad.push_back("eta dimension mismatch");
  auto check_mats = [&](const std::vector<Matrix>& ms, const char* name) {
    if (ms.size() != na) {
      bad.push_back(std::string(name) + " has " + std::to_string(ms.size()) +
                    " matrices, expected " + std::to_string(na));
      return;
    }
    for (std::size_t a = 0; a < na; ++a) {
      if (ms[a].rows != nq || ms[a].cols != nq) {
        bad.push_back(std::string(name) + "(" + odca.alphabet[a] + ") is " +
                      std::to_string(ms[a].rows) + "x" + std::to_string(ms[a].cols) +
                      ", expected " + std::to_string(nq) + "x" + std::to_string(nq));
      }
    }
  };
  check_mats(odca.delta_zero, "delta matrices (zero)");
  check_mats(odca.delta_pos, "delta matrices (positive)");
  return bad;
}

Configuration initial_config(const WeightedOdca& odca) {
  return Configuration{odca.lambda, odca.initial_counter, 0};
}

Configuration step(const WeightedOdca& odca, const Configuration& c, std::size_t letter) {
  if (letter >= odca.num_letters()) throw InputError("step: letter out of range");
  const bool pos = c.n > 0;
  const CounterMove& mv = odca.move(c.p, letter, pos);
  Configuration next;
  next.x = vec_mat(c.x, odca.matrix(letter, pos));
  next.p = mv.target;
  next.n = c.n + mv.effect;
  if (next.n < 0) throw InputError("step: counter went negative");
  return next;
}

RunResult run(const WeightedOdca& odca, const Configuration& c, const Word& w) {
  RunResult r;
  r.weight_effect = Matrix::identity(odca.fsm_size);
  r.min_counter = c.n;
  r.max_counter = c.n;
  Configuration cur = c;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (cur.n == 0) r.floating = false;
    const bool pos = cur.n > 0;
    r.weight_effect = mat_mul(r.weight_effect, odca.matrix(w[i], pos));
    cur = step(odca, cur, w[i]);
    r.min_counter = std::min(r.min_counter, cur.n);
    r.max_counter = std::max(r.max_counter, cur.n);
  }
  r.counter_effect = cur.n - c.n;
  r.final = std::move(cur);
  return r;
}

Rational eval(const WeightedOdca& odca, const Word& w) {
  return eval_config(odca, initial_config(odca), w);
}

Rational eval_config(const WeightedOdca& odca, const Configuration& c, const Word& w) {
  Configuration cur = c;
  for (std::size_t letter : w) cur = step(odca, cur, letter);
  return dot(cur.x, odca.eta);
}

Unfolding unfold(const WeightedOdca& odca, std::size_t M) {
  const std::size_t nc = odca.num_counter_states();
  const std::size_t na = odca.num_letters();
  const std::size_t nq = odca.fsm_size;
  const std::size_t levels = M + 1;

  Unfolding u;
  u.bound = M;
  u.fsm_size = nq;
  ControlledWa& wa = u.wa;
  wa.num_controls = nc * levels + 1;
  wa.dead_control = nc * levels;
  wa.initial_control = u.control_of(odca.initial_counter, 0);
  wa.wa_size = nq * levels;
  wa.num_letters = na;
  wa.ctrl.assign(wa.num_controls, std::vector<std::size_t>(na, wa.dead_control));
  wa.steps.assign(wa.num_controls, std::vector<std::vector<SparseEntry>>(na));
  wa.lambda.assign(wa.wa_size, Rational());
  wa.eta.assign(wa.wa_size, Rational());

  for (std::size_t q = 0; q < nq; ++q) wa.lambda[u.wa_index(q, 0)] = odca.lambda[q];
  for (std::size_t m = 0; m < levels; ++m) {
    for (std::size_t q = 0; q < nq; ++q) wa.eta[u.wa_index(q, m)] = odca.eta[q];
  }

  for (std::size_t p = 0; p < nc; ++p) {
    for (std::size_t m = 0; m < levels; ++m) {
      const std::size_t ctl = u.control_of(p, m);
      for (std::size_t a = 0; a < na; ++a) {
        const bool pos = m > 0;
        const CounterMove& mv = odca.move(p, a, pos);
        const long long next = static_cast<long long>(m) + mv.effect;
        if (next > static_cast<long long>(M)) continue;  // to the dead sink, zero rows
        wa.ctrl[ctl][a] = u.control_of(mv.target, static_cast<std::size_t>(next));
        const Matrix& d = odca.matrix(a, pos);
        auto& entries = wa.steps[ctl][a];
        for (std::size_t i = 0; i < nq; ++i) {
          for (std::size_t j = 0; j < nq; ++j) {
            if (!d.at(i, j).is_zero()) {
              entries.push_back({u.wa_index(i, m),
                                 u.wa_index(j, static_cast<std::size_t>(next)), d.at(i, j)});
            }
          }
        }
      }
    }
  }
  return u;
}

Unfolding unfold_within(const WeightedOdca& odca, const BigInt& M, std::size_t cell_cap) {
  const BigInt controls = BigInt(odca.num_counter_states()) * (M + 1) + 1;
  const BigInt per_control =
      BigInt(odca.num_letters()) * (BigInt(odca.fsm_size) * odca.fsm_size + 2);
  if (controls * per_control > cell_cap) {
    throw ResourceError("unfolding with counter bound " + M.str() + " would need more than " +
                        std::to_string(cell_cap) + " cells");
  }
  return unfold(odca, static_cast<std::size_t>(M));
}

UninitialisedWa underlying_wa(const WeightedOdca& odca) {
  const std::size_t nc = odca.num_counter_states();
  const std::size_t nq = odca.fsm_size;
  UninitialisedWa uwa;
  uwa.size = nc * nq;
  uwa.eta.assign(uwa.size, Rational());
  for (std::size_t p = 0; p < nc; ++p) {
    for (std::size_t i = 0; i < nq; ++i) uwa.eta[p * nq + i] = odca.eta[i];
  }
  for (std::size_t a = 0; a < odca.num_letters(); ++a) {
    Matrix m(uwa.size, uwa.size);
    for (std::size_t p = 0; p < nc; ++p) {
      const std::size_t q = odca.delta1[p][a].target;
      const Matrix& d = odca.delta_pos[a];
      for (std::size_t i = 0; i < nq; ++i) {
        for (std::size_t j = 0; j < nq; ++j) m.at(p * nq + i, q * nq + j) = d.at(i, j);
      }
    }
    uwa.delta.push_back(std::move(m));
  }
  return uwa;
}

std::pair<std::size_t, Vector> embed_config(const WeightedOdca& odca, const Configuration& c,
                                            std::size_t M) {
  if (c.n < 0 || static_cast<std::size_t>(c.n) > M) {
    throw InputError("embed_config: counter value exceeds the unfolding bound");
  }
  if (c.x.size() != odca.fsm_size) throw InputError("embed_config: vector dimension mismatch");
  const std::size_t nq = odca.fsm_size;
  Vector v(nq * (M + 1));
  for (std::size_t q = 0; q < nq; ++q) v[static_cast<std::size_t>(c.n) * nq + q] = c.x[q];
  return {c.p * (M + 1) + static_cast<std::size_t>(c.n), std::move(v)};
}

VectorSpace lift_space(const VectorSpace& v, std::size_t level, std::size_t M) {
  if (level > M) throw InputError("lift_space: level exceeds the unfolding bound");
  const std::size_t nq = v.ambient_dim();
  VectorSpace out(nq * (M + 1));
  for (const Vector& b : v.basis()) {
    Vector row(nq * (M + 1));
    for (std::size_t q = 0; q < nq; ++q) row[level * nq + q] = b[q];
    out.insert(row);
  }
  return out;
}

Rational eval_controlled(const ControlledWa& wa, const Word& w) {
  std::size_t control = wa.initial_control;
  Vector vec = wa.lambda;
  for (std::size_t letter : w) {
    if (letter >= wa.num_letters) throw InputError("eval_controlled: letter out of range");
    Vector next(wa.wa_size);
    for (const SparseEntry& e : wa.steps[control][letter]) {
      if (!vec[e.row].is_zero()) next[e.col] += vec[e.row] * e.w;
    }
    vec = std::move(next);
    control = wa.ctrl[control][letter];
  }
  return dot(vec, wa.eta);
}

}  // namespace odca
