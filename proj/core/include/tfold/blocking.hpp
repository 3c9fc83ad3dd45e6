#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tfold/plane.hpp"
#include "tfold/point_set.hpp"

namespace tfold {

/// Number of lines meeting a point set in each possible size 0..n+1.
class Spectrum {
 public:
  explicit Spectrum(std::uint64_t order) : order_(order), counts_(order + 2, 0) {}

  std::uint64_t order() const { return order_; }
  std::uint64_t count(std::size_t size) const { return size < counts_.size() ? counts_[size] : 0; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  void add_line(std::size_t size) { ++counts_.at(size); }

  /// Sizes with nonzero count, ascending.
  std::vector<std::size_t> support() const;
  std::optional<std::size_t> min_size() const;
  std::uint64_t total_lines() const;
  /// Σ size · count, which equals |S|(n+1) by double counting.
  std::uint64_t incidence_sum() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::uint64_t order_;
  std::vector<std::uint64_t> counts_;
};

/// |S ∩ L| for every line L, in line order.
std::vector<std::size_t> line_intersections(const IncidencePlane& plane, const PointSet& s);

Spectrum spectrum(const IncidencePlane& plane, const PointSet& s);

/// Every line meets S in at least t points and some line in exactly t.
/// Requires 1 <= t <= n+1.
bool is_t_fold_blocking(const IncidencePlane& plane, const PointSet& s, std::uint64_t t);

/// Every point of S lies on a line meeting S in exactly t points. Throws
/// std::invalid_argument when S is not a t-fold blocking set.
bool is_minimal(const IncidencePlane& plane, const PointSet& s, std::uint64_t t);

/// Support of the spectrum is contained in {t, b+1} and both values occur.
bool is_two_valued(const Spectrum& spec, std::uint64_t t, std::uint64_t b);

/// First line meeting S in fewer than t points.
std::optional<LineIndex> first_line_below(const IncidencePlane& plane, const PointSet& s, std::uint64_t t);
/// First point of S on no line meeting S in exactly t points.
std::optional<PointIndex> first_point_without_tangent(const IncidencePlane& plane, const PointSet& s,
                                                      std::uint64_t t);

}  // namespace tfold
