#include "tfold/blocking.hpp"

#include <stdexcept>
#include <string>

namespace tfold {
namespace {

void check_t(const IncidencePlane& plane, std::uint64_t t) {
  if (t < 1 || t > plane.order() + 1) {
    throw std::invalid_argument("t = " + std::to_string(t) + " outside 1.." + std::to_string(plane.order() + 1));
  }
}

}  // namespace

std::vector<std::size_t> Spectrum::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i]) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> Spectrum::min_size() const {
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i]) return i;
  }
  return std::nullopt;
}

std::uint64_t Spectrum::total_lines() const {
  std::uint64_t total = 0;
  for (auto c : counts_) total += c;
  return total;
}

std::uint64_t Spectrum::incidence_sum() const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) total += i * counts_[i];
  return total;
}

std::vector<std::size_t> line_intersections(const IncidencePlane& plane, const PointSet& s) {
  require_same_plane(plane, s);
  std::vector<std::size_t> out(plane.line_count());
  for (LineIndex l = 0; l < plane.line_count(); ++l) {
    out[l] = plane.line_mask(l).intersection_count(s.mask());
  }
  return out;
}

Spectrum spectrum(const IncidencePlane& plane, const PointSet& s) {
  Spectrum spec(plane.order());
  for (std::size_t c : line_intersections(plane, s)) spec.add_line(c);
  return spec;
}

bool is_t_fold_blocking(const IncidencePlane& plane, const PointSet& s, std::uint64_t t) {
  check_t(plane, t);
  const Spectrum spec = spectrum(plane, s);
  const auto lowest = spec.min_size();
  return lowest && *lowest >= t && spec.count(t) > 0;
}

std::optional<PointIndex> first_point_without_tangent(const IncidencePlane& plane, const PointSet& s,
                                                      std::uint64_t t) {
  check_t(plane, t);
  const auto counts = line_intersections(plane, s);
  PointMask covered(plane.point_count());
  for (LineIndex l = 0; l < counts.size(); ++l) {
    if (counts[l] == t) covered |= plane.line_mask(l);
  }
  for (PointIndex p : s.indices()) {
    if (!covered.test(p)) return p;
  }
  return std::nullopt;
}

bool is_minimal(const IncidencePlane& plane, const PointSet& s, std::uint64_t t) {
  if (!is_t_fold_blocking(plane, s, t)) {
    throw std::invalid_argument("minimality is defined only for t-fold blocking sets (t = " +
                                std::to_string(t) + ")");
  }
  return !first_point_without_tangent(plane, s, t).has_value();
}

bool is_two_valued(const Spectrum& spec, std::uint64_t t, std::uint64_t b) {
  bool saw_t = false;
  bool saw_secant = false;
  for (std::size_t size : spec.support()) {
    if (size == t) saw_t = true;
    if (size == b + 1) saw_secant = true;
    if (size != t && size != b + 1) return false;
  }
  return saw_t && saw_secant;
}

std::optional<LineIndex> first_line_below(const IncidencePlane& plane, const PointSet& s, std::uint64_t t) {
  const auto counts = line_intersections(plane, s);
  for (LineIndex l = 0; l < counts.size(); ++l) {
    if (counts[l] < t) return l;
  }
  return std::nullopt;
}

}  // namespace tfold
