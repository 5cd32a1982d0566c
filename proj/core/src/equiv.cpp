#include "odca/equiv.hpp"

#include <algorithm>

#include "odca/errors.hpp"

namespace odca {

BigInt theoretical_counter_bound(std::size_t K) {
  return 84 * boost::multiprecision::pow(BigInt(K), 24);
}

namespace {

struct StartOverride {
  Vector x;
  std::size_t p = 0;
};

EquivVerdict equiv_impl(const WeightedOdca& a, const WeightedOdca& b,
                        const std::optional<StartOverride>& start_a,
                        const std::optional<StartOverride>& start_b,
                        std::optional<std::size_t> bound_override, const SearchLimits& limits) {
  if (a.alphabet != b.alphabet) throw InputError("equiv: alphabet mismatch");
  const std::size_t K = std::max({a.fsm_size, b.fsm_size, a.num_counter_states(),
                                  b.num_counter_states(), std::size_t{1}});
  const BigInt theoretical = theoretical_counter_bound(K);

  EquivVerdict verdict;
  verdict.bound_used = bound_override ? BigInt(*bound_override) : theoretical;
  verdict.complete = !bound_override || BigInt(*bound_override) >= theoretical;

  Unfolding ua = unfold_within(a, verdict.bound_used, limits.unfold_cell_cap);
  Unfolding ub = unfold_within(b, verdict.bound_used, limits.unfold_cell_cap);
  const std::size_t M = ua.bound;
  if (start_a) {
    auto [control, vec] = embed_config(a, Configuration{start_a->x, start_a->p, 0}, M);
    ua.wa.initial_control = control;
    ua.wa.lambda = std::move(vec);
  }
  if (start_b) {
    auto [control, vec] = embed_config(b, Configuration{start_b->x, start_b->p, 0}, M);
    ub.wa.initial_control = control;
    ub.wa.lambda = std::move(vec);
  }

  verdict.witness = wa_equiv(ua.wa, ub.wa, limits);
  verdict.equivalent = !verdict.witness.has_value();
  if (verdict.witness) {
    const Configuration ca = start_a ? Configuration{start_a->x, start_a->p, 0}
                                     : initial_config(a);
    const Configuration cb = start_b ? Configuration{start_b->x, start_b->p, 0}
                                     : initial_config(b);
    if (eval_config(a, ca, *verdict.witness) == eval_config(b, cb, *verdict.witness)) {
      throw std::logic_error("equiv: witness failed replay validation");
    }
  }
  return verdict;
}

}  // namespace

EquivVerdict odca_equiv(const WeightedOdca& a, const WeightedOdca& b,
                        std::optional<std::size_t> bound_override, const SearchLimits& limits) {
  return equiv_impl(a, b, std::nullopt, std::nullopt, bound_override, limits);
}

EquivVerdict config_equiv(const WeightedOdca& a, const Vector& xa, std::size_t pa,
                          const WeightedOdca& b, const Vector& xb, std::size_t pb,
                          std::optional<std::size_t> bound_override, const SearchLimits& limits) {
  if (xa.size() != a.fsm_size || xb.size() != b.fsm_size) {
    throw InputError("config_equiv: vector dimension mismatch");
  }
  if (pa >= a.num_counter_states() || pb >= b.num_counter_states()) {
    throw InputError("config_equiv: counter state out of range");
  }
  return equiv_impl(a, b, StartOverride{xa, pa}, StartOverride{xb, pb}, bound_override, limits);
}

}  // namespace odca
