#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "tfold/plane.hpp"
#include "tfold/point_mask.hpp"

namespace tfold {

/// A subset of the points of a plane, kept as a membership mask.
class PointSet {
 public:
  explicit PointSet(PlanePtr plane);
  PointSet(PlanePtr plane, std::span<const PointIndex> points);
  PointSet(PlanePtr plane, PointMask mask);

  const IncidencePlane& plane() const { return *plane_; }
  const PlanePtr& plane_ptr() const { return plane_; }
  const PointMask& mask() const { return mask_; }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(PointIndex p) const { return p < mask_.size() && mask_.test(p); }
  void insert(PointIndex p);
  void erase(PointIndex p);

  /// Members in increasing order.
  std::vector<PointIndex> indices() const { return mask_.indices(); }
  PointSet complement() const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.plane_ == b.plane_ && a.mask_ == b.mask_;
  }

 private:
  PlanePtr plane_;
  PointMask mask_;
  std::size_t size_ = 0;
};

/// Throws std::invalid_argument unless s was built over plane (same object or
/// identical incidence).
void require_same_plane(const IncidencePlane& plane, const PointSet& s);

// Text format: "order <n>", "size <m>", then the sorted member indices on one line.
void write_point_set(const PointSet& s, std::ostream& out);
void save_point_set(const PointSet& s, const std::filesystem::path& path);
/// Reads a point set over plane; throws FormatError on malformed input or an
/// order mismatch.
PointSet parse_point_set(std::istream& in, PlanePtr plane);
PointSet load_point_set(const std::filesystem::path& path, PlanePtr plane);

}  // namespace tfold
