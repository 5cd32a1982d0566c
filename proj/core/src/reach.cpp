#include "odca/reach.hpp"

#include <algorithm>
#include <set>

#include "odca/errors.hpp"

namespace odca {

namespace {

std::size_t product_size(const WeightedOdca& odca) {
  return odca.fsm_size * odca.num_counter_states();
}

void check_instance(const WeightedOdca& odca, const Configuration& c, const VectorSpace& v,
                    const std::vector<std::size_t>& s) {
  if (v.ambient_dim() != odca.fsm_size) throw InputError("covs: space dimension mismatch");
  if (c.x.size() != odca.fsm_size) throw InputError("covs: configuration dimension mismatch");
  if (c.p >= odca.num_counter_states() || c.n < 0) throw InputError("covs: bad configuration");
  for (std::size_t p : s) {
    if (p >= odca.num_counter_states()) throw InputError("covs: target state out of range");
  }
}

void validate_witness(const WeightedOdca& odca, const Configuration& c, const VectorSpace& v,
                      const std::vector<std::size_t>& s, std::optional<std::size_t> m,
                      std::size_t peak_cap, const Word& z) {
  Configuration cur = c;
  long long peak = c.n;
  for (std::size_t letter : z) {
    cur = step(odca, cur, letter);
    peak = std::max(peak, cur.n);
  }
  const bool at_target = std::find(s.begin(), s.end(), cur.p) != s.end() &&
                         (!m || cur.n == static_cast<long long>(*m));
  if (!at_target || v.contains(cur.x) || peak > static_cast<long long>(peak_cap)) {
    throw std::logic_error("covs: witness failed replay validation");
  }
}

}  // namespace

std::size_t counter_bound_reach(const WeightedOdca& odca, std::size_t n, std::size_t m) {
  const std::size_t k = product_size(odca);
  return std::max(n, m) + k * k;
}

std::size_t counter_bound_cover(const WeightedOdca& odca, std::size_t n) {
  const std::size_t k = product_size(odca);
  return std::max(n, k) + k * k;
}

ReachResult covs_reach(const WeightedOdca& odca, const Configuration& c, const VectorSpace& v,
                       const std::vector<std::size_t>& s, std::size_t m,
                       std::optional<std::size_t> bound_override, const SearchLimits& limits) {
  check_instance(odca, c, v, s);
  const std::size_t def = counter_bound_reach(odca, static_cast<std::size_t>(c.n), m);
  const std::size_t bound = bound_override.value_or(def);
  const bool complete = !bound_override || *bound_override >= def;
  if (static_cast<long long>(bound) < c.n) {
    throw InputError("covs_reach: bound below the start counter value");
  }

  ReachResult result;
  result.bound_used = bound;
  result.complete = complete;
  if (m > bound) return result;  // target level not representable within the bound

  const Unfolding u = unfold_within(odca, BigInt(bound), limits.unfold_cell_cap);
  TargetSpec targets;
  const VectorSpace lifted = lift_space(v, m, bound);
  for (std::size_t p : std::set<std::size_t>(s.begin(), s.end())) {
    targets.per_control.emplace(u.control_of(p, m), lifted);
  }
  auto [control, start] = embed_config(odca, c, bound);
  result.witness = wa_covs_reach(u.wa, control, start, targets, limits);
  if (result.witness) validate_witness(odca, c, v, s, m, bound, *result.witness);
  return result;
}

ReachResult covs_cover(const WeightedOdca& odca, const Configuration& c, const VectorSpace& v,
                       const std::vector<std::size_t>& s,
                       std::optional<std::size_t> bound_override, const SearchLimits& limits) {
  check_instance(odca, c, v, s);
  const std::size_t def = counter_bound_cover(odca, static_cast<std::size_t>(c.n));
  const std::size_t bound = bound_override.value_or(def);
  const bool complete = !bound_override || *bound_override >= def;
  if (static_cast<long long>(bound) < c.n) {
    throw InputError("covs_cover: bound below the start counter value");
  }

  ReachResult result;
  result.bound_used = bound;
  result.complete = complete;

  const Unfolding u = unfold_within(odca, BigInt(bound), limits.unfold_cell_cap);
  TargetSpec targets;
  for (std::size_t level = 0; level <= bound; ++level) {
    const VectorSpace lifted = lift_space(v, level, bound);
    for (std::size_t p : std::set<std::size_t>(s.begin(), s.end())) {
      targets.per_control.emplace(u.control_of(p, level), lifted);
    }
  }
  auto [control, start] = embed_config(odca, c, bound);
  result.witness = wa_covs_reach(u.wa, control, start, targets, limits);
  if (result.witness) validate_witness(odca, c, v, s, std::nullopt, bound, *result.witness);
  return result;
}

}  // namespace odca
