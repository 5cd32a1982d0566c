#include "odca/analysis.hpp"

#include <algorithm>

#include "odca/errors.hpp"

namespace odca {

WSpaceTable w_space_table(const WeightedOdca& odca) {
  const std::size_t nq = odca.fsm_size;
  const std::size_t nc = odca.num_counter_states();
  const std::size_t kn = nq * nc;
  const std::size_t rows = 2 * kn;  // rows ≥ kn feed the exact ones below kn
  const std::size_t ambient = nq + kn;
  const UninitialisedWa uwa = underlying_wa(odca);

  // Joint functionals φ_w = (x ↦ f(w,(x,p,m)) | y ↦ f_uwa(w,y)), grown
  // backwards from φ_ε = (η | η_uwa) for words up to length kn. Only new
  // directions are propagated; spans grow monotonically, so this is the
  // breadth-first exploration with span pruning.
  struct Cell {
    VectorSpace span;
    std::vector<Vector> fresh;
    explicit Cell(std::size_t dim) : span(dim) {}
  };
  std::vector<std::vector<Cell>> grid(nc, std::vector<Cell>(rows, Cell(ambient)));

  Vector seed(ambient);
  for (std::size_t i = 0; i < nq; ++i) seed[i] = odca.eta[i];
  for (std::size_t y = 0; y < kn; ++y) seed[nq + y] = uwa.eta[y];
  for (auto& row : grid) {
    for (Cell& cell : row) {
      if (cell.span.insert(seed)) cell.fresh.push_back(seed);
    }
  }

  for (std::size_t depth = 1; depth <= kn; ++depth) {
    std::vector<std::vector<std::vector<Vector>>> next(
        nc, std::vector<std::vector<Vector>>(rows));
    bool grew = false;
    for (std::size_t p = 0; p < nc; ++p) {
      for (std::size_t m = 0; m < rows; ++m) {
        for (std::size_t a = 0; a < odca.num_letters(); ++a) {
          const bool pos = m > 0;
          const CounterMove& mv = odca.move(p, a, pos);
          const long long m2 = static_cast<long long>(m) + mv.effect;
          if (m2 < 0 || m2 >= static_cast<long long>(rows)) continue;
          const Matrix& dm = odca.matrix(a, pos);
          const Matrix& du = uwa.delta[a];
          for (const Vector& phi : grid[mv.target][static_cast<std::size_t>(m2)].fresh) {
            const Vector t(phi.begin(), phi.begin() + nq);
            const Vector b(phi.begin() + nq, phi.end());
            const Vector t2 = mat_vec(dm, t);
            const Vector b2 = mat_vec(du, b);
            Vector phi2(ambient);
            for (std::size_t i = 0; i < nq; ++i) phi2[i] = t2[i];
            for (std::size_t y = 0; y < kn; ++y) phi2[nq + y] = b2[y];
            if (grid[p][m].span.insert(phi2)) {
              next[p][m].push_back(std::move(phi2));
              grew = true;
            }
          }
        }
      }
    }
    for (std::size_t p = 0; p < nc; ++p) {
      for (std::size_t m = 0; m < rows; ++m) grid[p][m].fresh = std::move(next[p][m]);
    }
    if (!grew) break;
  }

  WSpaceTable table;
  table.kn = kn;
  table.w.assign(nc, std::vector<VectorSpace>(kn, VectorSpace(nq)));
  for (std::size_t p = 0; p < nc; ++p) {
    for (std::size_t m = 0; m < kn; ++m) {
      const auto& basis = grid[p][m].span.basis();
      const std::size_t k = basis.size();
      Matrix t(nq, k), b(kn, k);
      for (std::size_t col = 0; col < k; ++col) {
        for (std::size_t i = 0; i < nq; ++i) t.at(i, col) = basis[col][i];
        for (std::size_t y = 0; y < kn; ++y) b.at(y, col) = basis[col][nq + y];
      }
      // x ∈ W iff the observations x·t are matched by y·b for some y.
      table.w[p][m] = preimage_space(image_space(b), t);
    }
  }
  return table;
}

RegularityResult is_regular(const WeightedOdca& odca, const SearchLimits& limits) {
  const std::size_t nq = odca.fsm_size;
  const std::size_t nc = odca.num_counter_states();
  const std::size_t kn = nq * nc;
  const WSpaceTable table = w_space_table(odca);

  const std::size_t window_lo = kn * kn + kn;
  const std::size_t window_hi = 2 * kn * kn + kn;
  const std::size_t M = window_hi + kn * kn;  // slack for the descending leg

  const Unfolding base = unfold_within(odca, BigInt(M), limits.unfold_cell_cap);
  const std::size_t levels = M + 1;

  // Duplicate every control with a sticky flag marking "the run has entered
  // the high window"; witnesses must end flagged at a low level outside W.
  ControlledWa fw;
  fw.num_controls = 2 * base.wa.num_controls;
  fw.dead_control = 2 * base.wa.dead_control;
  fw.initial_control = 2 * base.wa.initial_control;
  fw.wa_size = base.wa.wa_size;
  fw.num_letters = base.wa.num_letters;
  fw.lambda = base.wa.lambda;
  fw.eta = base.wa.eta;
  fw.ctrl.assign(fw.num_controls, std::vector<std::size_t>(fw.num_letters, fw.dead_control));
  fw.steps.assign(fw.num_controls, std::vector<std::vector<SparseEntry>>(fw.num_letters));
  for (std::size_t c = 0; c < base.wa.num_controls; ++c) {
    for (std::size_t a = 0; a < fw.num_letters; ++a) {
      const std::size_t t = base.wa.ctrl[c][a];
      for (std::size_t flag = 0; flag < 2; ++flag) {
        const std::size_t fc = 2 * c + flag;
        fw.steps[fc][a] = base.wa.steps[c][a];
        if (t == base.wa.dead_control) {
          fw.ctrl[fc][a] = fw.dead_control;
        } else {
          const std::size_t m2 = t % levels;
          const bool flagged = flag == 1 || (m2 >= window_lo && m2 <= window_hi);
          fw.ctrl[fc][a] = 2 * t + (flagged ? 1 : 0);
        }
      }
    }
  }

  TargetSpec targets;
  for (std::size_t p = 0; p < nc; ++p) {
    for (std::size_t m = 0; m < kn; ++m) {
      targets.per_control.emplace(2 * base.control_of(p, m) + 1,
                                  lift_space(table.at(p, m), m, M));
    }
  }

  const std::optional<Word> witness =
      wa_covs_reach(fw, fw.initial_control, fw.lambda, targets, limits);
  if (!witness) return RegularityResult{};

  RegularityResult result;
  result.regular = false;
  Configuration cur = initial_config(odca);
  std::size_t split = 0;
  for (std::size_t i = 0; i < witness->size(); ++i) {
    cur = step(odca, cur, (*witness)[i]);
    if (split == 0 && cur.n >= static_cast<long long>(window_lo) &&
        cur.n <= static_cast<long long>(window_hi)) {
      split = i + 1;
    }
  }
  if (split == 0 || cur.n >= static_cast<long long>(kn) ||
      table.at(cur.p, static_cast<std::size_t>(cur.n)).contains(cur.x)) {
    throw std::logic_error("is_regular: witness failed replay validation");
  }
  result.witness = {Word(witness->begin(), witness->begin() + split),
                    Word(witness->begin() + split, witness->end())};
  return result;
}

CoverResult covers(const WeightedOdca& coverer, const WeightedOdca& coveree,
                   std::optional<std::size_t> bound, const SearchLimits& limits) {
  if (coverer.alphabet != coveree.alphabet) throw InputError("covers: alphabet mismatch");
  const std::size_t nq1 = coveree.fsm_size;
  const std::size_t nq2 = coverer.fsm_size;
  const std::size_t nc1 = coveree.num_counter_states();
  const std::size_t nc2 = coverer.num_counter_states();

  CoverResult result;
  result.partner.assign(nc1, 0);
  result.alpha.assign(nc1, Matrix(nq1, nq2));

  for (std::size_t q = 0; q < nc1; ++q) {
    bool q_covered = false;
    std::size_t failed_j = 0;
    for (std::size_t p = 0; p < nc2 && !q_covered; ++p) {
      Matrix alphas(nq1, nq2);
      bool p_ok = true;
      for (std::size_t j = 0; j < nq1 && p_ok; ++j) {
        Vector unit(nq1);
        unit[j] = 1;
        std::vector<LinearEquation> eqs;
        bool solved = false;
        // First pass checks α = 0 (the zero-function test); afterwards each
        // counterexample contributes one independent equation, so the system
        // settles or turns inconsistent within nq2 + 1 rounds.
        for (std::size_t round = 0; round <= nq2 + 1; ++round) {
          const std::optional<Vector> alpha = solve_linear(eqs, nq2);
          if (!alpha) break;
          const EquivVerdict verdict =
              config_equiv(coverer, *alpha, p, coveree, unit, q, bound, limits);
          if (verdict.equivalent) {
            for (std::size_t i = 0; i < nq2; ++i) alphas.at(j, i) = (*alpha)[i];
            solved = true;
            break;
          }
          if (eqs.size() > nq2) {
            throw std::logic_error("covers: accumulated more independent equations than unknowns");
          }
          const Word& w = *verdict.witness;
          const RunResult r2 = run(coverer, Configuration{Vector(nq2), p, 0}, w);
          const RunResult r1 = run(coveree, Configuration{Vector(nq1), q, 0}, w);
          eqs.push_back({mat_vec(r2.weight_effect, coverer.eta),
                         mat_vec(r1.weight_effect, coveree.eta)[j]});
        }
        if (!solved) {
          p_ok = false;
          failed_j = j;
        }
      }
      if (p_ok) {
        q_covered = true;
        result.partner[q] = p;
        result.alpha[q] = std::move(alphas);
      }
    }
    if (!q_covered) {
      result.covered = false;
      result.failure = CoverFailure{q, failed_j};
      return result;
    }
  }
  return result;
}

CoverableResult coverable_equiv(const WeightedOdca& a, const WeightedOdca& b,
                                std::optional<std::size_t> bound, const SearchLimits& limits) {
  CoverableResult r;
  r.forward = covers(a, b, bound, limits);
  r.backward = covers(b, a, bound, limits);
  r.equivalent = r.forward.covered && r.backward.covered;
  return r;
}

}  // namespace odca
