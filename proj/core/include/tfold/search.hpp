#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tfold/bigint.hpp"
#include "tfold/families.hpp"
#include "tfold/gf.hpp"
#include "tfold/plane.hpp"
#include "tfold/point_set.hpp"

namespace tfold {

struct SearchOptions {
  /// Line-count and capacity pruning. When off, every subset of the target
  /// size is enumerated and checked directly.
  bool pruning = true;
  /// Restrict the smallest chosen point to orbit minima under the group
  /// generated by `permutations` (each must be a collineation of the plane).
  bool symmetry = false;
  std::vector<std::vector<PointIndex>> permutations;
  unsigned workers = 1;
  std::uint64_t node_budget = 1'000'000'000;
};

struct SearchTask {
  PlanePtr plane;
  std::uint64_t t = 0;
  /// Extremal size and secant parameter; empty when the bound is not attainable.
  std::optional<std::uint64_t> size;
  std::optional<std::uint64_t> b;
  SearchOptions options;
};

/// Requires 1 <= t <= n. Fills in the target size from the exact bound.
SearchTask make_search_task(PlanePtr plane, std::uint64_t t, SearchOptions options = {});

struct SearchResult {
  /// Minimal t-fold blocking sets of the target size with two-valued
  /// spectrum, sorted lexicographically by member list.
  std::vector<PointSet> sets;
  /// Minimal t-fold blocking sets of the target size whose spectrum is not
  /// two-valued. Expected to stay empty: extremal size forces a two-valued spectrum.
  std::vector<PointSet> anomalies;
  /// Approximate under multiple workers.
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  double wall_seconds = 0.0;
  /// The search space was exhausted within the node budget.
  bool complete = false;
  /// The bound was not attainable, so there was nothing to search.
  bool vacuous = false;
  bool symmetry_reduced = false;
};

/// Depth-first include/exclude search over points in index order. Requires a
/// positive node budget and at least one worker.
SearchResult exhaustive_extremal_search(const SearchTask& task);

struct CertificationEntry {
  std::uint64_t t = 0;
  bool attainable = false;
  std::optional<BigInt> bound;
  std::optional<BigInt> b;
  std::size_t found = 0;
  std::map<FamilyLabel, std::size_t> families;
  bool complete = false;
  /// From classify_prime_power; empty when the order is not a prime power.
  std::optional<bool> expected;
  std::optional<FamilyLabel> expected_family;
  bool matches = false;
  std::uint64_t nodes = 0;
};

struct CertificationReport {
  std::uint64_t order = 0;
  std::optional<PrimePower> prime_power;
  std::vector<CertificationEntry> entries;
  bool passed = false;
};

/// Runs the extremal search for every t in [t_first, t_last] and compares the
/// t values with nonempty results, and their family labels, to the closed-form
/// classification.
CertificationReport certify_no_other_t(const PlanePtr& plane, std::uint64_t t_first, std::uint64_t t_last,
                                       const SearchOptions& options = {});

}  // namespace tfold
