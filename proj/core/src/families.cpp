#include "tfold/families.hpp"

#include <stdexcept>
#include <string>

#include "tfold/bigint.hpp"
#include "tfold/blocking.hpp"

namespace tfold {
namespace {

const Field& square_order_field(const IncidencePlane& plane) {
  if (!plane.has_coordinates()) {
    throw std::invalid_argument("construction needs a coordinatized Desarguesian plane");
  }
  const Field& f = plane.field();
  if (f.degree() % 2 != 0) {
    throw std::domain_error("construction needs PG(2,q^2): field degree must be even");
  }
  return f;
}

std::optional<std::uint64_t> square_root(std::uint64_t n) {
  auto r = exact_sqrt(BigInt(n));
  if (!r) return std::nullopt;
  return static_cast<std::uint64_t>(*r);
}

bool spectrum_is_one_or_secant(const IncidencePlane& plane, const PointSet& s, std::uint64_t root) {
  const Spectrum spec = spectrum(plane, s);
  for (std::size_t size : spec.support()) {
    if (size != 1 && size != root + 1) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(FamilyLabel label) {
  switch (label) {
    case FamilyLabel::Unital: return "Unital";
    case FamilyLabel::BaerComplement: return "BaerComplement";
    case FamilyLabel::PlaneMinusPoint: return "PlaneMinusPoint";
    case FamilyLabel::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

std::optional<FamilyLabel> family_from_string(std::string_view name) {
  for (auto label : {FamilyLabel::Unital, FamilyLabel::BaerComplement, FamilyLabel::PlaneMinusPoint,
                     FamilyLabel::Unclassified}) {
    if (to_string(label) == name) return label;
  }
  return std::nullopt;
}

PointSet hermitian_unital(const PlanePtr& plane) {
  const Field& f = square_order_field(*plane);
  PointSet s(plane);
  for (PointIndex p = 0; p < plane->point_count(); ++p) {
    const auto& c = plane->coordinates(p).coords;
    const FieldElement sum =
        f.add(f.add(f.relative_norm(c[0]), f.relative_norm(c[1])), f.relative_norm(c[2]));
    if (sum.is_zero()) s.insert(p);
  }
  return s;
}

PointSet baer_subplane(const PlanePtr& plane) {
  const Field& f = square_order_field(*plane);
  PointSet s(plane);
  for (PointIndex p = 0; p < plane->point_count(); ++p) {
    // Stored coordinates are already normalized.
    const auto& c = plane->coordinates(p).coords;
    if (f.in_base_subfield(c[0]) && f.in_base_subfield(c[1]) && f.in_base_subfield(c[2])) s.insert(p);
  }
  return s;
}

PointSet baer_complement(const PlanePtr& plane) { return baer_subplane(plane).complement(); }

PointSet plane_minus_point(const PlanePtr& plane, PointIndex removed) {
  if (removed >= plane->point_count()) {
    throw std::out_of_range("point index " + std::to_string(removed) + " out of range");
  }
  PointSet s(plane, PointMask(plane->point_count()).complement());
  s.erase(removed);
  return s;
}

bool has_baer_subplane_spectrum(const IncidencePlane& plane, const PointSet& s) {
  const auto root = square_root(plane.order());
  if (!root) return false;
  if (s.size() != plane.order() + *root + 1) return false;
  return spectrum_is_one_or_secant(plane, s, *root);
}

bool has_unital_spectrum(const IncidencePlane& plane, const PointSet& s) {
  const auto root = square_root(plane.order());
  if (!root) return false;
  if (s.size() != plane.order() * *root + 1) return false;
  return spectrum_is_one_or_secant(plane, s, *root);
}

FamilyLabel characterize(const IncidencePlane& plane, const PointSet& s, std::uint64_t /*t*/) {
  require_same_plane(plane, s);
  const std::uint64_t n = plane.order();
  if (s.size() == n * n + n) return FamilyLabel::PlaneMinusPoint;
  if (has_baer_subplane_spectrum(plane, s.complement())) return FamilyLabel::BaerComplement;
  if (has_unital_spectrum(plane, s)) return FamilyLabel::Unital;
  return FamilyLabel::Unclassified;
}

}  // namespace tfold
