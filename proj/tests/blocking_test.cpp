#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "tfold/blocking.hpp"
#include "tfold/families.hpp"
#include "tfold/gf.hpp"
#include "tfold/plane.hpp"

namespace tfold {
namespace {

PlanePtr pg(std::uint64_t q) {
  const auto pp = *as_prime_power(q);
  return build_desarguesian_plane(make_field(pp.p, pp.k));
}

// Per-line counts straight from the point lists, no masks.
Spectrum naive_spectrum(const IncidencePlane& plane, const PointSet& s) {
  Spectrum spec(plane.order());
  for (LineIndex l = 0; l < plane.line_count(); ++l) {
    std::size_t c = 0;
    for (PointIndex p : plane.line(l)) c += s.contains(p);
    spec.add_line(c);
  }
  return spec;
}

TEST(Spectrum, EmptyAndFull) {
  const auto p = pg(3);
  const PointSet none(p);
  EXPECT_EQ(spectrum(*p, none).count(0), 13u);
  EXPECT_EQ(spectrum(*p, none).support(), std::vector<std::size_t>{0});
  const PointSet all = none.complement();
  EXPECT_EQ(spectrum(*p, all).count(4), 13u);
  EXPECT_EQ(spectrum(*p, all).support(), std::vector<std::size_t>{4});
}

TEST(Spectrum, FanoLine) {
  const auto p = pg(2);
  const PointSet line(p, p->line(0));
  const Spectrum s = spectrum(*p, line);
  EXPECT_EQ(s.count(3), 1u);
  EXPECT_EQ(s.count(1), 6u);
  EXPECT_EQ(s.support(), (std::vector<std::size_t>{1, 3}));
}

TEST(Spectrum, DoubleCountingOnRandomSets) {
  std::mt19937 rng(11);
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    const auto p = pg(q);
    for (int trial = 0; trial < 40; ++trial) {
      PointSet s(p);
      for (PointIndex x = 0; x < p->point_count(); ++x) {
        if (rng() % 3 == 0) s.insert(x);
      }
      const Spectrum spec = spectrum(*p, s);
      EXPECT_EQ(spec, naive_spectrum(*p, s));
      EXPECT_EQ(spec.total_lines(), q * q + q + 1);
      EXPECT_EQ(spec.incidence_sum(), s.size() * (q + 1));
    }
  }
}

TEST(Blocking, FanoMinusPoint) {
  const auto p = pg(2);
  const PointSet s = plane_minus_point(p, 0);
  EXPECT_TRUE(is_t_fold_blocking(*p, s, 2));
  EXPECT_FALSE(is_t_fold_blocking(*p, s, 1));
  EXPECT_FALSE(is_t_fold_blocking(*p, s, 3));
  EXPECT_TRUE(is_minimal(*p, s, 2));
}

TEST(Blocking, TRange) {
  const auto p = pg(2);
  const PointSet all = PointSet(p).complement();
  EXPECT_THROW(is_t_fold_blocking(*p, all, 0), std::invalid_argument);
  EXPECT_THROW(is_t_fold_blocking(*p, all, 4), std::invalid_argument);
  EXPECT_TRUE(is_t_fold_blocking(*p, all, 3));  // t = n+1 edge case
}

TEST(Blocking, UnitalIsOneFold) {
  const auto p = pg(4);
  const PointSet u = hermitian_unital(p);
  EXPECT_TRUE(is_t_fold_blocking(*p, u, 1));
  EXPECT_TRUE(is_minimal(*p, u, 1));
  EXPECT_TRUE(is_two_valued(spectrum(*p, u), 1, 2));
}

TEST(Blocking, MinimalityExamples) {
  const auto p3 = pg(3);
  for (PointIndex x = 0; x < p3->point_count(); ++x) EXPECT_TRUE(is_minimal(*p3, plane_minus_point(p3, x), 3));
  const auto p4 = pg(4);
  EXPECT_TRUE(is_minimal(*p4, baer_complement(p4), 2));
  EXPECT_TRUE(is_two_valued(spectrum(*p4, baer_complement(p4)), 2, 3));
}

TEST(Blocking, MinimalityNeedsBlockingSet) {
  const auto p = pg(2);
  const PointSet all = PointSet(p).complement();
  EXPECT_THROW(is_minimal(*p, all, 2), std::invalid_argument);
}

TEST(Blocking, NonMinimalDetected) {
  // A line plus one outside point: every line through the extra point meets
  // the set twice, so that point has no tangent.
  const auto p = pg(3);
  PointSet s(p, p->line(0));
  PointIndex extra = 0;
  while (p->line_mask(0).test(extra)) ++extra;
  s.insert(extra);
  ASSERT_TRUE(is_t_fold_blocking(*p, s, 1));
  EXPECT_FALSE(is_minimal(*p, s, 1));
  EXPECT_EQ(first_point_without_tangent(*p, s, 1), extra);
}

TEST(Blocking, TwoValued) {
  const auto p = pg(2);
  const PointSet line(p, p->line(0));
  EXPECT_FALSE(is_two_valued(spectrum(*p, line), 1, 1));
  EXPECT_TRUE(is_two_valued(spectrum(*p, line), 1, 2));
  EXPECT_FALSE(is_two_valued(spectrum(*p, PointSet(p).complement()), 2, 2));
}

TEST(Blocking, MonotoneInT) {
  const auto p = pg(4);
  const PointSet s = baer_complement(p);
  const std::size_t lowest = *spectrum(*p, s).min_size();
  for (std::uint64_t t = 1; t <= 5; ++t) {
    EXPECT_EQ(is_t_fold_blocking(*p, s, t), t == lowest);
    EXPECT_EQ(first_line_below(*p, s, t).has_value(), t > lowest);
  }
}

TEST(Blocking, PlaneMismatch) {
  const auto a = pg(3);
  const auto b = pg(4);
  EXPECT_THROW(spectrum(*b, PointSet(a)), std::invalid_argument);
  // Same incidence through a different object is accepted.
  EXPECT_NO_THROW(spectrum(*pg(3), PointSet(a)));
}

}  // namespace
}  // namespace tfold
