#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "tfold/plane.hpp"
#include "tfold/point_set.hpp"

namespace tfold {

enum class FamilyLabel { Unital, BaerComplement, PlaneMinusPoint, Unclassified };

std::string_view to_string(FamilyLabel label);
std::optional<FamilyLabel> family_from_string(std::string_view name);

// The Hermitian and Baer constructions need a Desarguesian plane PG(2,q^2),
// i.e. coordinates over a field of even degree.

/// Points (x:y:z) with N(x) + N(y) + N(z) = 0, N the relative norm to GF(q).
PointSet hermitian_unital(const PlanePtr& plane);

/// Points with all normalized coordinates in GF(q).
PointSet baer_subplane(const PlanePtr& plane);

PointSet baer_complement(const PlanePtr& plane);

/// Every point except one; works on any plane.
PointSet plane_minus_point(const PlanePtr& plane, PointIndex removed);

/// Names the extremal family S belongs to, judged by size and line
/// intersection pattern. t is accepted for symmetry with the verifier and does
/// not influence the label.
FamilyLabel characterize(const IncidencePlane& plane, const PointSet& s, std::uint64_t t);

/// Size n + √n + 1 with every line meeting the set in 1 or √n + 1 points.
bool has_baer_subplane_spectrum(const IncidencePlane& plane, const PointSet& s);
/// Size n√n + 1 with every line meeting the set in 1 or √n + 1 points.
bool has_unital_spectrum(const IncidencePlane& plane, const PointSet& s);

}  // namespace tfold
