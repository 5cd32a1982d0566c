#include "odca/translate.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace odca {

namespace {

using TransMap = std::map<std::tuple<std::size_t, std::size_t, std::size_t>, OcaMove>;

// Iterates the (state, letter, *) slice of a transition map.
template <typename Fn>
void each_move(const TransMap& trans, std::size_t state, std::size_t letter, Fn&& fn) {
  auto it = trans.lower_bound({state, letter, 0});
  for (; it != trans.end(); ++it) {
    const auto& [i, a, j] = it->first;
    if (i != state || a != letter) break;
    if (it->second.weight.is_zero()) continue;
    fn(j, it->second);
  }
}

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  // Keeps the smaller index as the representative.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

struct SupportNode {
  std::vector<std::size_t> support;
  long long n = 0;
  std::size_t parent = 0;
  std::size_t letter = 0;
};

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

Word word_of(const std::vector<SupportNode>& nodes, std::size_t idx) {
  Word w;
  while (nodes[idx].parent != kNoParent) {
    w.push_back(nodes[idx].letter);
    idx = nodes[idx].parent;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

std::vector<std::string> validate(const WeightedOca& oca) {
  std::vector<std::string> bad;
  const std::size_t na = oca.num_letters();
  if (na == 0) bad.push_back("alphabet is empty");
  if (std::set<char>(oca.alphabet.begin(), oca.alphabet.end()).size() != na) {
    bad.push_back("alphabet symbols are not distinct");
  }
  if (oca.size == 0) bad.push_back("no states");
  if (oca.lambda.size() != oca.size) bad.push_back("lambda dimension mismatch");
  if (oca.eta.size() != oca.size) bad.push_back("eta dimension mismatch");

  auto check_trans = [&](const TransMap& trans, const char* name, int lo) {
    for (const auto& [key, mv] : trans) {
      const auto& [i, a, j] = key;
      if (i >= oca.size || j >= oca.size || a >= na) {
        bad.push_back(std::string(name) + " entry (" + std::to_string(i) + "," +
                      std::to_string(a) + "," + std::to_string(j) + ") is out of range");
        continue;
      }
      if (mv.effect < lo || mv.effect > 1) {
        bad.push_back(std::string(name) + " entry (" + std::to_string(i) + "," + oca.alphabet[a] +
                      "," + std::to_string(j) + ") has effect " + std::to_string(mv.effect));
      }
      if (mv.weight.is_zero()) {
        bad.push_back(std::string(name) + " entry (" + std::to_string(i) + "," + oca.alphabet[a] +
                      "," + std::to_string(j) + ") has weight 0; drop absent transitions");
      }
    }
  };
  check_trans(oca.trans0, "trans0", 0);
  check_trans(oca.trans1, "trans1", -1);
  return bad;
}

Rational oca_eval(const WeightedOca& oca, const Word& w) {
  std::map<std::pair<std::size_t, long long>, Rational> cur;
  for (std::size_t i = 0; i < oca.size; ++i) {
    if (!oca.lambda[i].is_zero()) cur[{i, 0}] = oca.lambda[i];
  }
  for (std::size_t letter : w) {
    if (letter >= oca.num_letters()) throw InputError("oca_eval: letter out of range");
    std::map<std::pair<std::size_t, long long>, Rational> next;
    for (const auto& [key, weight] : cur) {
      const auto& [i, n] = key;
      const TransMap& trans = n > 0 ? oca.trans1 : oca.trans0;
      each_move(trans, i, letter, [&](std::size_t j, const OcaMove& mv) {
        next[{j, n + mv.effect}] += weight * mv.weight;
      });
    }
    cur = std::move(next);
  }
  Rational out;
  for (const auto& [key, weight] : cur) out += weight * oca.eta[key.first];
  return out;
}

std::variant<Coloring, DeterminacyViolation> check_counter_determinacy(const WeightedOca& oca) {
  UnionFind classes(oca.size);
  std::vector<std::size_t> init;
  for (std::size_t i = 0; i < oca.size; ++i) {
    if (!oca.lambda[i].is_zero()) init.push_back(i);
  }
  if (init.empty()) return Coloring{classes.parent};

  // Counters above (#reachable supports)² + 2 revisit support/sign patterns
  // already seen lower, so neither the merge set nor the shortest violation
  // changes past that; grow the cap until the support count stops rising.
  std::size_t support_guess = 1;
  while (true) {
    const unsigned long long cap = static_cast<unsigned long long>(support_guess) * support_guess + 2;

    std::vector<SupportNode> nodes;
    std::set<std::pair<std::vector<std::size_t>, long long>> seen;
    std::set<std::vector<std::size_t>> supports;
    std::deque<std::size_t> queue;
    nodes.push_back({init, 0, kNoParent, 0});
    seen.insert({init, 0});
    queue.push_back(0);

    while (!queue.empty()) {
      const std::size_t idx = queue.front();
      queue.pop_front();
      const std::vector<std::size_t> support = nodes[idx].support;
      const long long n = nodes[idx].n;
      supports.insert(support);
      for (std::size_t k = 1; k < support.size(); ++k) classes.unite(support[0], support[k]);

      const TransMap& trans = n > 0 ? oca.trans1 : oca.trans0;
      for (std::size_t a = 0; a < oca.num_letters(); ++a) {
        std::set<int> effects;
        std::set<std::size_t> succ;
        for (std::size_t i : support) {
          each_move(trans, i, a, [&](std::size_t j, const OcaMove& mv) {
            effects.insert(mv.effect);
            succ.insert(j);
          });
        }
        if (effects.size() >= 2) {
          DeterminacyViolation v;
          v.word = word_of(nodes, idx);
          v.word.push_back(a);
          v.counter_a = n + *effects.begin();
          v.counter_b = n + *effects.rbegin();
          return v;
        }
        if (succ.empty()) continue;
        const long long n2 = n + *effects.begin();
        if (n2 < 0 || static_cast<unsigned long long>(n2) > cap) continue;
        std::vector<std::size_t> next(succ.begin(), succ.end());
        if (seen.insert({next, n2}).second) {
          nodes.push_back({std::move(next), n2, idx, a});
          queue.push_back(nodes.size() - 1);
        }
      }
    }
    if (static_cast<unsigned long long>(supports.size()) * supports.size() + 2 <= cap) break;
    support_guess = supports.size();
  }

  Coloring col;
  col.color.resize(oca.size);
  for (std::size_t i = 0; i < oca.size; ++i) col.color[i] = classes.find(i);
  return col;
}

WeightedOdca oca_to_odca(const WeightedOca& oca) {
  auto res = check_counter_determinacy(oca);
  if (std::holds_alternative<DeterminacyViolation>(res)) {
    const DeterminacyViolation& v = std::get<DeterminacyViolation>(res);
    throw DeterminacyError(
        v, "not counter-deterministic: runs over \"" + format_word(oca.alphabet, v.word) +
               "\" reach counters " + std::to_string(v.counter_a) + " and " +
               std::to_string(v.counter_b));
  }
  const Coloring& col = std::get<Coloring>(res);

  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < oca.size; ++i) {
    if (col.color[i] == i) reps.push_back(i);
  }
  std::vector<std::size_t> class_index(oca.size, 0);
  for (std::size_t c = 0; c < reps.size(); ++c) class_index[reps[c]] = c;
  std::vector<std::vector<std::size_t>> members(reps.size());
  for (std::size_t i = 0; i < oca.size; ++i) members[class_index[col.color[i]]].push_back(i);

  WeightedOdca out;
  out.alphabet = oca.alphabet;
  out.fsm_size = oca.size;
  out.lambda = oca.lambda;
  out.eta = oca.eta;
  for (std::size_t a = 0; a < oca.num_letters(); ++a) {
    Matrix zero(oca.size, oca.size);
    Matrix pos(oca.size, oca.size);
    for (const auto& [key, mv] : oca.trans0) {
      const auto& [i, la, j] = key;
      if (la == a) zero.at(i, j) = mv.weight;
    }
    for (const auto& [key, mv] : oca.trans1) {
      const auto& [i, la, j] = key;
      if (la == a) pos.at(i, j) = mv.weight;
    }
    out.delta_zero.push_back(std::move(zero));
    out.delta_pos.push_back(std::move(pos));
  }

  // Read the class's counter move off its first member that has one; a
  // missing move on some letter sends the class to a sink.
  const std::size_t nc = reps.size();
  out.delta0.assign(nc, std::vector<CounterMove>(oca.num_letters()));
  out.delta1 = out.delta0;
  bool need_sink = false;
  std::vector<std::vector<bool>> missing0(nc, std::vector<bool>(oca.num_letters(), false));
  std::vector<std::vector<bool>> missing1 = missing0;
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t a = 0; a < oca.num_letters(); ++a) {
      for (int region = 0; region < 2; ++region) {
        const TransMap& trans = region ? oca.trans1 : oca.trans0;
        bool found = false;
        CounterMove mv;
        for (std::size_t i : members[c]) {
          each_move(trans, i, a, [&](std::size_t j, const OcaMove& m) {
            if (!found) {
              mv.target = class_index[col.color[j]];
              mv.effect = m.effect;
              found = true;
            }
          });
          if (found) break;
        }
        if (!found) {
          need_sink = true;
          (region ? missing1 : missing0)[c][a] = true;
        } else {
          (region ? out.delta1 : out.delta0)[c][a] = mv;
        }
      }
    }
  }

  for (std::size_t c = 0; c < nc; ++c) out.counter_names.push_back("c" + std::to_string(reps[c]));
  if (need_sink) {
    const std::size_t sink = nc;
    out.counter_names.push_back("sink");
    out.delta0.push_back(std::vector<CounterMove>(oca.num_letters(), CounterMove{sink, 0}));
    out.delta1.push_back(std::vector<CounterMove>(oca.num_letters(), CounterMove{sink, 0}));
    for (std::size_t c = 0; c < nc; ++c) {
      for (std::size_t a = 0; a < oca.num_letters(); ++a) {
        if (missing0[c][a]) out.delta0[c][a] = CounterMove{sink, 0};
        if (missing1[c][a]) out.delta1[c][a] = CounterMove{sink, 0};
      }
    }
  }

  out.initial_counter = 0;
  for (std::size_t i = 0; i < oca.size; ++i) {
    if (!oca.lambda[i].is_zero()) {
      out.initial_counter = class_index[col.color[i]];
      break;
    }
  }
  return out;
}

WeightedOca odca_to_oca(const WeightedOdca& odca) {
  const std::size_t nq = odca.fsm_size;
  const std::size_t nc = odca.num_counter_states();
  WeightedOca oca;
  oca.alphabet = odca.alphabet;
  oca.size = nc * nq;
  oca.lambda.assign(oca.size, Rational());
  oca.eta.assign(oca.size, Rational());
  for (std::size_t i = 0; i < nq; ++i) {
    oca.lambda[odca.initial_counter * nq + i] = odca.lambda[i];
  }
  for (std::size_t p = 0; p < nc; ++p) {
    for (std::size_t i = 0; i < nq; ++i) oca.eta[p * nq + i] = odca.eta[i];
  }
  for (std::size_t p = 0; p < nc; ++p) {
    for (std::size_t a = 0; a < odca.num_letters(); ++a) {
      for (int region = 0; region < 2; ++region) {
        const CounterMove& mv = odca.move(p, a, region == 1);
        const Matrix& d = odca.matrix(a, region == 1);
        TransMap& trans = region ? oca.trans1 : oca.trans0;
        for (std::size_t i = 0; i < nq; ++i) {
          for (std::size_t j = 0; j < nq; ++j) {
            if (!d.at(i, j).is_zero()) {
              trans[{p * nq + i, a, mv.target * nq + j}] = OcaMove{mv.effect, d.at(i, j)};
            }
          }
        }
      }
    }
  }
  return oca;
}

}  // namespace odca
