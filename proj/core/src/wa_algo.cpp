#include "odca/wa_algo.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <unordered_map>

#include "odca/errors.hpp"

namespace odca {

SparseVec to_sparse(const Vector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  }
  return s;
}

Vector to_dense(const SparseVec& v, std::size_t dim) {
  Vector d(dim);
  for (const auto& [i, c] : v) d.at(i) = c;
  return d;
}

SparseVec sparse_step(const SparseVec& v, const std::vector<SparseEntry>& entries) {
  // Both v and entries are sorted by row index.
  std::map<std::size_t, Rational> acc;
  std::size_t e = 0;
  for (const auto& [row, c] : v) {
    while (e < entries.size() && entries[e].row < row) ++e;
    for (std::size_t k = e; k < entries.size() && entries[k].row == row; ++k) {
      acc[entries[k].col] += c * entries[k].w;
    }
  }
  SparseVec out;
  out.reserve(acc.size());
  for (auto& [i, c] : acc) {
    if (!c.is_zero()) out.emplace_back(i, std::move(c));
  }
  return out;
}

Rational sparse_dot(const SparseVec& v, const Vector& dense) {
  Rational r;
  for (const auto& [i, c] : v) {
    if (!dense[i].is_zero()) r += c * dense[i];
  }
  return r;
}

void SearchLimits::check(std::size_t nodes_created) const {
  if (nodes_created > node_cap) {
    throw ResourceError("saturation search exceeded its node budget of " +
                        std::to_string(node_cap));
  }
  if (deadline && std::chrono::steady_clock::now() > *deadline) {
    throw ResourceError("saturation search exceeded its deadline");
  }
}

namespace {

// y -= c·x (sorted merge, zero entries dropped).
void sparse_submul(SparseVec& y, const Rational& c, const SparseVec& x) {
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, -(c * x[j].second));
      ++j;
    } else {
      Rational val = y[i].second - c * x[j].second;
      if (!val.is_zero()) out.emplace_back(y[i].first, std::move(val));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

// Rows keyed by leading index, kept leading-reduced (not full RREF: only
// membership matters here, and witnesses are checked before insertion).
using Basis = std::map<std::size_t, SparseVec>;

bool basis_insert(Basis& basis, SparseVec v) {
  while (!v.empty()) {
    const std::size_t lead = v.front().first;
    auto it = basis.find(lead);
    if (it == basis.end()) {
      const Rational inv = Rational(1) / v.front().second;
      for (auto& [idx, c] : v) c *= inv;
      basis.emplace(lead, std::move(v));
      return true;
    }
    sparse_submul(v, v.front().second, it->second);
  }
  return false;
}

struct Node {
  std::size_t control;
  SparseVec vec;
  std::size_t parent;
  std::size_t letter;
};

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

Word word_of(const std::vector<Node>& nodes, std::size_t idx) {
  Word w;
  while (nodes[idx].parent != kNoParent) {
    w.push_back(nodes[idx].letter);
    idx = nodes[idx].parent;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::optional<Word> saturate(
    const ControlledWa& wa, std::size_t start_control, SparseVec start,
    const std::function<bool(std::size_t, const SparseVec&)>& is_witness,
    const SearchLimits& limits) {
  std::vector<Node> nodes;
  std::vector<Basis> bases(wa.num_controls);
  std::queue<std::size_t> fifo;

  auto visit = [&](std::size_t control, SparseVec vec, std::size_t parent,
                   std::size_t letter) -> std::optional<std::size_t> {
    limits.check(nodes.size() + 1);
    if (is_witness(control, vec)) {
      nodes.push_back({control, std::move(vec), parent, letter});
      return nodes.size() - 1;
    }
    if (basis_insert(bases[control], vec)) {
      nodes.push_back({control, std::move(vec), parent, letter});
      fifo.push(nodes.size() - 1);
    }
    return std::nullopt;
  };

  if (auto hit = visit(start_control, std::move(start), kNoParent, 0)) {
    return word_of(nodes, *hit);
  }
  while (!fifo.empty()) {
    const std::size_t cur = fifo.front();
    fifo.pop();
    for (std::size_t a = 0; a < wa.num_letters; ++a) {
      SparseVec child = sparse_step(nodes[cur].vec, wa.steps[nodes[cur].control][a]);
      const std::size_t target = wa.ctrl[nodes[cur].control][a];
      if (auto hit = visit(target, std::move(child), cur, a)) {
        return word_of(nodes, *hit);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Word> wa_covs_reach(const ControlledWa& wa, std::size_t start_control,
                                  const Vector& start, const TargetSpec& targets,
                                  const SearchLimits& limits) {
  if (start.size() != wa.wa_size) throw InputError("wa_covs_reach: start dimension mismatch");
  for (const auto& [control, space] : targets.per_control) {
    if (control >= wa.num_controls) throw InputError("wa_covs_reach: target control out of range");
    if (space.ambient_dim() != wa.wa_size) {
      throw InputError("wa_covs_reach: target space dimension mismatch");
    }
  }
  auto is_witness = [&](std::size_t control, const SparseVec& vec) {
    auto it = targets.per_control.find(control);
    if (it == targets.per_control.end()) return false;
    return !it->second.contains(to_dense(vec, wa.wa_size));
  };
  return saturate(wa, start_control, to_sparse(start), is_witness, limits);
}

namespace {

// Block-diagonal product over reachable control pairs, with
// eta = (eta_a | -eta_b) so one dot product decides disagreement.
struct Product {
  ControlledWa wa;
  Vector eta_diff;
};

Product build_product(const ControlledWa& a, const ControlledWa& b) {
  if (a.num_letters != b.num_letters) throw InputError("wa_equiv: alphabet size mismatch");
  Product prod;
  ControlledWa& p = prod.wa;
  p.wa_size = a.wa_size + b.wa_size;
  p.num_letters = a.num_letters;

  std::unordered_map<std::size_t, std::size_t> index_of;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto intern = [&](std::size_t ca, std::size_t cb) {
    const std::size_t key = ca * b.num_controls + cb;
    auto [it, fresh] = index_of.emplace(key, pairs.size());
    if (fresh) pairs.emplace_back(ca, cb);
    return it->second;
  };
  p.initial_control = intern(a.initial_control, b.initial_control);
  p.dead_control = intern(a.dead_control, b.dead_control);
  for (std::size_t cur = 0; cur < pairs.size(); ++cur) {
    const auto [ca, cb] = pairs[cur];
    p.ctrl.emplace_back();
    p.steps.emplace_back();
    for (std::size_t x = 0; x < p.num_letters; ++x) {
      p.ctrl[cur].push_back(intern(a.ctrl[ca][x], b.ctrl[cb][x]));
      std::vector<SparseEntry> entries = a.steps[ca][x];
      for (const SparseEntry& e : b.steps[cb][x]) {
        entries.push_back({e.row + a.wa_size, e.col + a.wa_size, e.w});
      }
      std::sort(entries.begin(), entries.end(),
                [](const SparseEntry& l, const SparseEntry& r) {
                  return l.row != r.row ? l.row < r.row : l.col < r.col;
                });
      p.steps[cur].push_back(std::move(entries));
    }
  }
  p.num_controls = pairs.size();

  p.lambda.assign(p.wa_size, Rational());
  for (std::size_t i = 0; i < a.wa_size; ++i) p.lambda[i] = a.lambda[i];
  for (std::size_t i = 0; i < b.wa_size; ++i) p.lambda[a.wa_size + i] = b.lambda[i];
  prod.eta_diff.assign(p.wa_size, Rational());
  for (std::size_t i = 0; i < a.wa_size; ++i) prod.eta_diff[i] = a.eta[i];
  for (std::size_t i = 0; i < b.wa_size; ++i) prod.eta_diff[a.wa_size + i] = -b.eta[i];
  p.eta = prod.eta_diff;
  return prod;
}

}  // namespace

std::optional<Word> wa_equiv(const ControlledWa& a, const ControlledWa& b,
                             const SearchLimits& limits) {
  Product prod = build_product(a, b);
  auto is_witness = [&](std::size_t, const SparseVec& vec) {
    return !sparse_dot(vec, prod.eta_diff).is_zero();
  };
  return saturate(prod.wa, prod.wa.initial_control, to_sparse(prod.wa.lambda), is_witness,
                  limits);
}

}  // namespace odca
