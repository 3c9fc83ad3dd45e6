#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tfold/gf.hpp"
#include "tfold/point_mask.hpp"

namespace tfold {

using PointIndex = std::uint32_t;
using LineIndex = std::uint32_t;

/// Homogeneous coordinates, normalized so the first nonzero entry is 1.
struct ProjPoint {
  std::array<FieldElement, 3> coords;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// Scales v so its first nonzero coordinate is 1. Throws std::domain_error
/// for the zero vector.
ProjPoint normalize(const Field& field, std::array<FieldElement, 3> v);

/// Largest plane order accepted by the Desarguesian builder.
inline constexpr std::uint64_t kMaxDesarguesianOrder = 128;
/// Largest plane order accepted for explicit incidence structures.
inline constexpr std::uint64_t kMaxPlaneOrder = 1024;

/// A projective plane of order n given by its lines as sorted lists of point
/// indices in 0..n^2+n. Immutable after construction.
class IncidencePlane {
 public:
  /// Checks that the order is in range, every index is a valid point and no
  /// line repeats a point. The plane axioms themselves are left to
  /// verify_plane_axioms so that defective structures can be inspected.
  IncidencePlane(std::uint64_t order, std::vector<std::vector<PointIndex>> lines);

  std::uint64_t order() const { return order_; }
  std::size_t point_count() const { return point_lines_.size(); }
  std::size_t line_count() const { return lines_.size(); }

  std::span<const PointIndex> line(LineIndex l) const { return lines_.at(l); }
  const std::vector<std::vector<PointIndex>>& lines() const { return lines_; }
  const PointMask& line_mask(LineIndex l) const { return masks_.at(l); }
  std::span<const LineIndex> lines_through_point(PointIndex p) const { return point_lines_.at(p); }
  /// The unique line through two distinct points.
  LineIndex line_through(PointIndex a, PointIndex b) const;

  /// Present only for planes produced by build_desarguesian_plane.
  bool has_coordinates() const { return field_ != nullptr; }
  const Field& field() const;
  const ProjPoint& coordinates(PointIndex p) const;
  std::optional<PointIndex> index_of(const ProjPoint& point) const;

  /// Incidence equality; coordinates are ignored.
  friend bool operator==(const IncidencePlane& a, const IncidencePlane& b) {
    return a.order_ == b.order_ && a.lines_ == b.lines_;
  }

 private:
  friend std::shared_ptr<const IncidencePlane> build_desarguesian_plane(const Field& field);

  std::uint64_t order_;
  std::vector<std::vector<PointIndex>> lines_;
  std::vector<PointMask> masks_;
  std::vector<std::vector<LineIndex>> point_lines_;

  std::shared_ptr<const Field> field_;
  std::vector<ProjPoint> coords_;
  std::vector<PointIndex> index_by_code_;
};

using PlanePtr = std::shared_ptr<const IncidencePlane>;

/// PG(2,q): points are normalized triples indexed in lexicographic order of
/// their coordinates; line i is the dual triple of point i.
PlanePtr build_desarguesian_plane(const Field& field);

struct AxiomReport {
  enum class Failure { None, LineCount, PairUncovered, PairRepeated, LineSize, PointDegree };

  Failure failure = Failure::None;
  std::string message;
  std::optional<LineIndex> line;
  std::optional<PointIndex> point;
  std::optional<std::pair<PointIndex, PointIndex>> pair;

  bool passed() const { return failure == Failure::None; }
};

/// Exhaustive check of the projective-plane axioms; reports the first
/// counterexample found.
AxiomReport verify_plane_axioms(const IncidencePlane& plane);

/// Plane-file reader. Throws FormatError with the offending input line.
PlanePtr parse_plane(std::istream& in);
PlanePtr load_plane(const std::filesystem::path& path);
void write_plane(const IncidencePlane& plane, std::ostream& out);
void save_plane(const IncidencePlane& plane, const std::filesystem::path& path);

}  // namespace tfold
