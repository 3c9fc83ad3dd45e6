#include <gtest/gtest.h>

#include <sstream>

#include "tfold/error.hpp"
#include "tfold/gf.hpp"
#include "tfold/plane.hpp"

namespace tfold {
namespace {

const char* kFano =
    "# Fano plane\n"
    "order 2\n"
    "0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n";

PlanePtr fano() {
  std::istringstream in(kFano);
  return parse_plane(in);
}

PlanePtr pg(std::uint64_t q) {
  const auto pp = *as_prime_power(q);
  return build_desarguesian_plane(make_field(pp.p, pp.k));
}

TEST(Plane, DesarguesianCounts) {
  const auto f2 = pg(2);
  EXPECT_EQ(f2->point_count(), 7u);
  EXPECT_EQ(f2->line_count(), 7u);
  for (LineIndex l = 0; l < 7; ++l) EXPECT_EQ(f2->line(l).size(), 3u);
  const auto f4 = pg(4);
  EXPECT_EQ(f4->point_count(), 21u);
  for (LineIndex l = 0; l < 21; ++l) EXPECT_EQ(f4->line(l).size(), 5u);
}

TEST(Plane, DesarguesianPassesAxioms) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto p = pg(q);
    const auto report = verify_plane_axioms(*p);
    EXPECT_TRUE(report.passed()) << q << ": " << report.message;
  }
}

TEST(Plane, IncidenceMatchesDotProduct) {
  for (std::uint64_t q : {3, 4}) {
    const auto p = pg(q);
    const Field& f = p->field();
    for (LineIndex l = 0; l < p->line_count(); ++l) {
      const auto& dual = p->coordinates(l).coords;
      for (PointIndex x = 0; x < p->point_count(); ++x) {
        const auto& c = p->coordinates(x).coords;
        const FieldElement dot = f.add(f.add(f.mul(dual[0], c[0]), f.mul(dual[1], c[1])), f.mul(dual[2], c[2]));
        EXPECT_EQ(dot.is_zero(), p->line_mask(l).test(x));
      }
    }
  }
}

TEST(Plane, CoordinatesNormalizedAndSorted) {
  const auto p = pg(9);
  const Field& f = p->field();
  for (PointIndex i = 0; i < p->point_count(); ++i) {
    const auto& pt = p->coordinates(i);
    EXPECT_EQ(normalize(f, pt.coords), pt);
    EXPECT_EQ(p->index_of(pt), i);
    if (i) EXPECT_LT(p->coordinates(i - 1), pt);
  }
}

TEST(Plane, DeterministicIndexing) { EXPECT_EQ(*pg(8), *pg(8)); }

TEST(Plane, DualCounts) {
  for (std::uint64_t q : {2, 3, 5}) {
    const auto p = pg(q);
    std::size_t by_lines = 0, by_points = 0;
    for (LineIndex l = 0; l < p->line_count(); ++l) by_lines += p->line(l).size();
    for (PointIndex x = 0; x < p->point_count(); ++x) by_points += p->lines_through_point(x).size();
    EXPECT_EQ(by_lines, (q + 1) * (q * q + q + 1));
    EXPECT_EQ(by_points, by_lines);
  }
}

TEST(Plane, LinesThroughPoint) {
  const auto f = fano();
  for (PointIndex x = 0; x < 7; ++x) EXPECT_EQ(f->lines_through_point(x).size(), 3u);
  for (PointIndex a = 0; a < 7; ++a) {
    for (PointIndex b = 0; b < 7; ++b) {
      if (a == b) continue;
      const LineIndex l = f->line_through(a, b);
      EXPECT_EQ(l, f->line_through(b, a));
      EXPECT_TRUE(f->line_mask(l).test(a) && f->line_mask(l).test(b));
    }
  }
  EXPECT_THROW(f->line_through(3, 3), std::invalid_argument);
  const auto p4 = pg(4);
  for (PointIndex x = 0; x < 21; ++x) EXPECT_EQ(p4->lines_through_point(x).size(), 5u);
}

TEST(Plane, FanoFileLoads) {
  const auto f = fano();
  EXPECT_EQ(f->order(), 2u);
  EXPECT_TRUE(verify_plane_axioms(*f).passed());
  EXPECT_FALSE(f->has_coordinates());
}

TEST(Plane, DeletedIncidenceReportsUncoveredPair) {
  auto lines = fano()->lines();
  lines[0] = {0, 1};  // drop point 2 from line {0,1,2}
  const IncidencePlane broken(2, lines);
  const auto report = verify_plane_axioms(broken);
  ASSERT_FALSE(report.passed());
  EXPECT_EQ(report.failure, AxiomReport::Failure::PairUncovered);
  ASSERT_TRUE(report.pair);
  EXPECT_EQ(*report.pair, std::make_pair(PointIndex{0}, PointIndex{2}));
}

TEST(Plane, RepeatedPairReported) {
  auto lines = fano()->lines();
  lines[1] = {0, 1, 4};
  const auto report = verify_plane_axioms(IncidencePlane(2, lines));
  EXPECT_FALSE(report.passed());
}

TEST(PlaneFile, RejectsBadCardinality) {
  std::istringstream in("order 2\n0 1 2 3 4\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n");
  try {
    parse_plane(in);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("line cardinality"), std::string::npos);
  }
}

TEST(PlaneFile, RejectsMalformedInput) {
  for (const char* bad : {"", "order x\n", "ordre 2\n", "order 2\n0 1 2\n",
                          "order 2\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n0 1 2\n",
                          "order 2\n0 1 9\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n",
                          "order 2\n0 1 1\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n",
                          "order 2\n0 1 -2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(parse_plane(in), FormatError) << bad;
  }
}

TEST(PlaneFile, AxiomViolationNamesFileLines) {
  // Right cardinalities, but {0,1,2} appears twice.
  std::istringstream in("order 2\n0 1 2\n0 1 2\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n");
  try {
    parse_plane(in);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("axioms"), std::string::npos);
    EXPECT_GT(e.line(), 0u);
  }
}

TEST(PlaneFile, RoundTrip) {
  for (std::uint64_t q : {2, 3, 7}) {
    const auto p = pg(q);
    std::stringstream buf;
    write_plane(*p, buf);
    EXPECT_EQ(*parse_plane(buf), *p);
  }
  const auto tmp = std::filesystem::temp_directory_path() / "tfold_plane_roundtrip.txt";
  save_plane(*pg(3), tmp);
  EXPECT_EQ(*load_plane(tmp), *pg(3));
  std::filesystem::remove(tmp);
}

TEST(PlaneFile, WriterFormatIsExact) {
  std::ostringstream out;
  write_plane(*fano(), out);
  EXPECT_EQ(out.str(), "order 2\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n");
}

TEST(Plane, BuilderRejectsLargeFields) { EXPECT_THROW(build_desarguesian_plane(make_field(2, 8)), std::invalid_argument); }

}  // namespace
}  // namespace tfold
