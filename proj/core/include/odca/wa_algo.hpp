#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "odca/linalg.hpp"
#include "odca/model.hpp"

namespace odca {

// Index-sorted, zero-free sparse vector. The unfolded automata are huge but
// any reachable weight vector lives in a single counter-level block.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

SparseVec to_sparse(const Vector& v);
Vector to_dense(const SparseVec& v, std::size_t dim);
SparseVec sparse_step(const SparseVec& v, const std::vector<SparseEntry>& entries);
Rational sparse_dot(const SparseVec& v, const Vector& dense);

struct SearchLimits {
  std::size_t node_cap = 2'000'000;
  std::size_t unfold_cell_cap = 64'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void check(std::size_t nodes_created) const;  // throws ResourceError
};

// Per-control target spaces; controls absent from the map are not targets.
struct TargetSpec {
  std::map<std::size_t, VectorSpace> per_control;
};

// First word (in length-then-lexicographic order, letters ordered by index)
// whose run from (start_control, start) ends at a target control with a
// vector outside that control's space; nullopt if none exists. Nodes whose
// vector is spanned by already-explored vectors at the same control are
// pruned, which bounds the search by wa_size vectors per control.
std::optional<Word> wa_covs_reach(const ControlledWa& wa, std::size_t start_control,
                                  const Vector& start, const TargetSpec& targets,
                                  const SearchLimits& limits = {});

// Minimal word distinguishing the two automata (same alphabet size), nullopt
// if they agree everywhere. Runs the same saturation on the product.
std::optional<Word> wa_equiv(const ControlledWa& a, const ControlledWa& b,
                             const SearchLimits& limits = {});

}  // namespace odca
