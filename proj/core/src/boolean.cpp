#include "odca/boolean.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <set>
#include <string>
#include <tuple>

#include "odca/errors.hpp"

namespace odca {

namespace {

std::uint64_t width_mask(std::size_t bits) {
  return bits >= 64 ? ~0ull : (1ull << bits) - 1;
}

std::uint64_t mask_step(const BooleanOdca& b, std::uint64_t mask, std::size_t letter, bool pos) {
  const auto& rows = pos ? b.delta_pos[letter] : b.delta_zero[letter];
  std::uint64_t out = 0;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    out |= rows[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return out;
}

}  // namespace

std::vector<std::string> validate(const BooleanOdca& b) {
  std::vector<std::string> bad;
  const std::size_t nc = b.num_counter_states();
  const std::size_t na = b.num_letters();
  const std::size_t nq = b.fsm_size;

  if (na == 0) bad.push_back("alphabet is empty");
  if (std::set<char>(b.alphabet.begin(), b.alphabet.end()).size() != na) {
    bad.push_back("alphabet symbols are not distinct");
  }
  if (nc == 0) bad.push_back("no counter states");
  if (b.initial_counter >= nc) bad.push_back("initial counter state out of range");
  if (nq == 0) bad.push_back("no automaton states");
  if (nq > 64) bad.push_back("more than 64 automaton states");

  auto check_delta = [&](const std::vector<std::vector<CounterMove>>& d, const char* name,
                         int lo) {
    if (d.size() != nc) {
      bad.push_back(std::string(name) + " has " + std::to_string(d.size()) +
                    " rows, expected " + std::to_string(nc));
      return;
    }
    for (std::size_t p = 0; p < nc; ++p) {
      if (d[p].size() != na) {
        bad.push_back(std::string(name) + " row " + b.counter_names[p] + " has " +
                      std::to_string(d[p].size()) + " entries, expected " + std::to_string(na));
        continue;
      }
      for (std::size_t a = 0; a < na; ++a) {
        const CounterMove& mv = d[p][a];
        if (mv.target >= nc) {
          bad.push_back(std::string(name) + "(" + b.counter_names[p] + "," + b.alphabet[a] +
                        ") targets an unknown state");
        }
        if (mv.effect < lo || mv.effect > 1) {
          bad.push_back(std::string(name) + "(" + b.counter_names[p] + "," + b.alphabet[a] +
                        ") has effect " + std::to_string(mv.effect));
        }
      }
    }
  };
  check_delta(b.delta0, "delta0", 0);
  check_delta(b.delta1, "delta1", -1);

  const std::uint64_t wm = width_mask(nq);
  if ((b.lambda & ~wm) != 0) bad.push_back("lambda uses states beyond the automaton size");
  if ((b.eta & ~wm) != 0) bad.push_back("eta uses states beyond the automaton size");
  auto check_rows = [&](const std::vector<std::vector<std::uint64_t>>& table, const char* name) {
    if (table.size() != na) {
      bad.push_back(std::string(name) + " has " + std::to_string(table.size()) +
                    " tables, expected " + std::to_string(na));
      return;
    }
    for (std::size_t a = 0; a < na; ++a) {
      if (table[a].size() != nq) {
        bad.push_back(std::string(name) + "(" + b.alphabet[a] + ") has " +
                      std::to_string(table[a].size()) + " rows, expected " + std::to_string(nq));
        continue;
      }
      for (std::size_t i = 0; i < nq; ++i) {
        if ((table[a][i] & ~wm) != 0) {
          bad.push_back(std::string(name) + "(" + b.alphabet[a] + ") row " + std::to_string(i) +
                        " uses states beyond the automaton size");
        }
      }
    }
  };
  check_rows(b.delta_zero, "successor tables (zero)");
  check_rows(b.delta_pos, "successor tables (positive)");
  return bad;
}

bool bool_eval(const BooleanOdca& b, const Word& w) {
  std::uint64_t mask = b.lambda;
  std::size_t p = b.initial_counter;
  long long n = 0;
  for (std::size_t letter : w) {
    if (letter >= b.num_letters()) throw InputError("bool_eval: letter out of range");
    const bool pos = n > 0;
    mask = mask_step(b, mask, letter, pos);
    const CounterMove& mv = pos ? b.delta1[p][letter] : b.delta0[p][letter];
    p = mv.target;
    n += mv.effect;
    if (n < 0) throw InputError("bool_eval: counter went negative");
  }
  return (mask & b.eta) != 0;
}

DeterminismResult is_deterministic(const BooleanOdca& b,
                                   std::optional<std::size_t> counter_cap) {
  DeterminismResult res;
  if (counter_cap) {
    if (*counter_cap < 1) throw InputError("is_deterministic: counter cap must be positive");
    res.cap = BigInt(*counter_cap);
  } else {
    const BigInt configs = BigInt(b.num_counter_states()) * pow(BigInt(2), b.fsm_size);
    res.cap = configs * configs;
  }
  if (std::popcount(b.lambda) != 1) {
    res.deterministic = false;
    return res;
  }

  // The requested cap can be astronomically large, but counters above
  // (#reachable (p,mask) pairs)² + 2 only retrace pairs already seen at lower
  // counters, so exploring up to the smaller of the two gives the same
  // answer. Restart whenever the pair count outgrows the cap used so far.
  std::size_t pair_guess = 1;
  while (true) {
    BigInt explore_cap = BigInt(pair_guess) * pair_guess + 2;
    if (explore_cap > res.cap) explore_cap = res.cap;
    const long long kMaxCap = std::numeric_limits<long long>::max();
    const long long cap =
        explore_cap > kMaxCap ? kMaxCap : static_cast<long long>(explore_cap);

    std::set<std::pair<std::size_t, std::uint64_t>> pairs;
    std::set<std::tuple<std::size_t, std::uint64_t, long long>> seen;
    std::deque<std::tuple<std::size_t, std::uint64_t, long long>> queue;
    queue.push_back({b.initial_counter, b.lambda, 0});
    seen.insert(queue.front());
    bool ok = true;
    while (!queue.empty() && ok) {
      auto [p, mask, n] = queue.front();
      queue.pop_front();
      pairs.insert({p, mask});
      if (std::popcount(mask) >= 2) {
        ok = false;
        break;
      }
      const bool pos = n > 0;
      for (std::size_t a = 0; a < b.num_letters(); ++a) {
        const std::uint64_t mask2 = mask_step(b, mask, a, pos);
        if (mask2 == 0) continue;
        const CounterMove& mv = pos ? b.delta1[p][a] : b.delta0[p][a];
        const long long n2 = n + mv.effect;
        if (n2 < 0 || n2 > cap) continue;
        auto key = std::make_tuple(mv.target, mask2, n2);
        if (seen.insert(key).second) queue.push_back(key);
      }
    }
    if (!ok) {
      res.deterministic = false;
      return res;
    }
    if (BigInt(pairs.size()) * pairs.size() + 2 <= explore_cap || explore_cap == res.cap) {
      return res;
    }
    pair_guess = pairs.size();
  }
}

BooleanOdca determinize(const BooleanOdca& b) {
  if (b.fsm_size > 6) {
    throw ResourceError("determinize: subset construction needs 2^" +
                        std::to_string(b.fsm_size) + " states, limit is 64");
  }
  const std::size_t subsets = std::size_t{1} << b.fsm_size;

  BooleanOdca det;
  det.alphabet = b.alphabet;
  det.counter_names = b.counter_names;
  det.initial_counter = b.initial_counter;
  det.delta0 = b.delta0;
  det.delta1 = b.delta1;
  det.fsm_size = subsets;
  det.lambda = 1ull << b.lambda;
  for (std::size_t s = 0; s < subsets; ++s) {
    if ((s & b.eta) != 0) det.eta |= 1ull << s;
  }
  det.delta_zero.assign(b.num_letters(), std::vector<std::uint64_t>(subsets, 0));
  det.delta_pos = det.delta_zero;
  for (std::size_t a = 0; a < b.num_letters(); ++a) {
    for (std::size_t s = 0; s < subsets; ++s) {
      det.delta_zero[a][s] = 1ull << mask_step(b, s, a, false);
      det.delta_pos[a][s] = 1ull << mask_step(b, s, a, true);
    }
  }
  return det;
}

BooleanOdca reachable_part(const BooleanOdca& b) {
  std::vector<bool> keep(b.fsm_size, false);
  std::deque<std::size_t> queue;
  for (std::uint64_t rest = b.lambda; rest != 0; rest &= rest - 1) {
    const std::size_t i = static_cast<std::size_t>(std::countr_zero(rest));
    keep[i] = true;
    queue.push_back(i);
  }
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < b.num_letters(); ++a) {
      const std::uint64_t succ = b.delta_zero[a][i] | b.delta_pos[a][i];
      for (std::uint64_t rest = succ; rest != 0; rest &= rest - 1) {
        const std::size_t j = static_cast<std::size_t>(std::countr_zero(rest));
        if (!keep[j]) {
          keep[j] = true;
          queue.push_back(j);
        }
      }
    }
  }
  std::vector<std::size_t> renumber(b.fsm_size, 0);
  std::size_t count = 0;
  for (std::size_t i = 0; i < b.fsm_size; ++i) {
    if (keep[i]) renumber[i] = count++;
  }
  auto remap = [&](std::uint64_t mask) {
    std::uint64_t out = 0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const std::size_t i = static_cast<std::size_t>(std::countr_zero(rest));
      if (keep[i]) out |= 1ull << renumber[i];
    }
    return out;
  };

  BooleanOdca out;
  out.alphabet = b.alphabet;
  out.counter_names = b.counter_names;
  out.initial_counter = b.initial_counter;
  out.delta0 = b.delta0;
  out.delta1 = b.delta1;
  out.fsm_size = count;
  out.lambda = remap(b.lambda);
  out.eta = remap(b.eta);
  out.delta_zero.assign(b.num_letters(), std::vector<std::uint64_t>(count, 0));
  out.delta_pos = out.delta_zero;
  for (std::size_t a = 0; a < b.num_letters(); ++a) {
    for (std::size_t i = 0; i < b.fsm_size; ++i) {
      if (!keep[i]) continue;
      out.delta_zero[a][renumber[i]] = remap(b.delta_zero[a][i]);
      out.delta_pos[a][renumber[i]] = remap(b.delta_pos[a][i]);
    }
  }
  return out;
}

WeightedOdca embed_rational(const BooleanOdca& b) {
  if (!is_deterministic(b).deterministic) {
    throw InputError("embed_rational: machine is not deterministic");
  }
  WeightedOdca w;
  w.alphabet = b.alphabet;
  w.counter_names = b.counter_names;
  w.initial_counter = b.initial_counter;
  w.delta0 = b.delta0;
  w.delta1 = b.delta1;
  w.fsm_size = b.fsm_size;
  w.lambda.assign(b.fsm_size, Rational());
  w.eta.assign(b.fsm_size, Rational());
  for (std::size_t i = 0; i < b.fsm_size; ++i) {
    if ((b.lambda >> i) & 1) w.lambda[i] = Rational(1);
    if ((b.eta >> i) & 1) w.eta[i] = Rational(1);
  }
  for (std::size_t a = 0; a < b.num_letters(); ++a) {
    Matrix zero(b.fsm_size, b.fsm_size);
    Matrix pos(b.fsm_size, b.fsm_size);
    for (std::size_t i = 0; i < b.fsm_size; ++i) {
      for (std::size_t j = 0; j < b.fsm_size; ++j) {
        if ((b.delta_zero[a][i] >> j) & 1) zero.at(i, j) = Rational(1);
        if ((b.delta_pos[a][i] >> j) & 1) pos.at(i, j) = Rational(1);
      }
    }
    w.delta_zero.push_back(std::move(zero));
    w.delta_pos.push_back(std::move(pos));
  }
  return w;
}

EquivVerdict bool_equiv(const BooleanOdca& a, const BooleanOdca& b,
                        std::optional<std::size_t> bound_override, const SearchLimits& limits) {
  if (a.alphabet != b.alphabet) throw InputError("bool_equiv: alphabets differ");
  return odca_equiv(embed_rational(determinize(a)), embed_rational(determinize(b)),
                    bound_override, limits);
}

}  // namespace odca
