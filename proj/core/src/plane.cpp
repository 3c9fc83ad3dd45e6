#include "tfold/plane.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tfold/error.hpp"

namespace tfold {

ProjPoint normalize(const Field& field, std::array<FieldElement, 3> v) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (v[i].is_zero()) continue;
    const FieldElement s = field.inv(v[i]);
    for (std::size_t j = i; j < 3; ++j) v[j] = field.mul(v[j], s);
    return ProjPoint{std::move(v)};
  }
  throw std::domain_error("the zero vector is not a projective point");
}

IncidencePlane::IncidencePlane(std::uint64_t order, std::vector<std::vector<PointIndex>> lines)
    : order_(order), lines_(std::move(lines)) {
  if (order < 2 || order > kMaxPlaneOrder) {
    throw std::invalid_argument("plane order must be in 2.." + std::to_string(kMaxPlaneOrder));
  }
  const std::size_t n_points = order * order + order + 1;
  point_lines_.resize(n_points);
  masks_.reserve(lines_.size());
  for (LineIndex l = 0; l < lines_.size(); ++l) {
    auto& pts = lines_[l];
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
      throw std::invalid_argument("line " + std::to_string(l) + " repeats a point");
    }
    PointMask mask(n_points);
    for (PointIndex p : pts) {
      if (p >= n_points) {
        throw std::invalid_argument("line " + std::to_string(l) + " has point index out of range");
      }
      mask.set(p);
      point_lines_[p].push_back(l);
    }
    masks_.push_back(std::move(mask));
  }
}

LineIndex IncidencePlane::line_through(PointIndex a, PointIndex b) const {
  if (a == b) throw std::invalid_argument("line_through needs two distinct points");
  const auto& la = point_lines_.at(a);
  const auto& lb = point_lines_.at(b);
  auto i = la.begin();
  auto j = lb.begin();
  while (i != la.end() && j != lb.end()) {
    if (*i == *j) return *i;
    if (*i < *j) ++i; else ++j;
  }
  throw std::runtime_error("points " + std::to_string(a) + " and " + std::to_string(b) +
                           " share no line");
}

const Field& IncidencePlane::field() const {
  if (!field_) throw std::logic_error("plane has no coordinates");
  return *field_;
}

const ProjPoint& IncidencePlane::coordinates(PointIndex p) const {
  if (!field_) throw std::logic_error("plane has no coordinates");
  return coords_.at(p);
}

std::optional<PointIndex> IncidencePlane::index_of(const ProjPoint& point) const {
  if (!field_) return std::nullopt;
  const std::uint64_t q = order_;
  std::uint64_t code = 0;
  for (const auto& c : point.coords) {
    if (!field_->contains(c)) return std::nullopt;
    code = code * q + field_->rank(c);
  }
  const PointIndex idx = index_by_code_[code];
  if (idx == UINT32_MAX) return std::nullopt;
  return idx;
}

PlanePtr build_desarguesian_plane(const Field& field) {
  if (field.order() > kMaxDesarguesianOrder) {
    throw std::invalid_argument("build_desarguesian_plane: field order exceeds " +
                                std::to_string(kMaxDesarguesianOrder));
  }
  const FieldTables gf(field);
  const std::uint32_t q = gf.size();
  const std::uint32_t one = gf.one();
  const auto code = [q](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    return (static_cast<std::size_t>(x) * q + y) * q + z;
  };

  // Normalized triples in lexicographic order of ranks.
  std::vector<std::array<std::uint32_t, 3>> pts;
  std::vector<PointIndex> index_by_code(static_cast<std::size_t>(q) * q * q, UINT32_MAX);
  for (std::uint32_t x = 0; x < q; ++x) {
    for (std::uint32_t y = 0; y < q; ++y) {
      for (std::uint32_t z = 0; z < q; ++z) {
        const std::uint32_t lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead != one) continue;
        index_by_code[code(x, y, z)] = static_cast<PointIndex>(pts.size());
        pts.push_back({x, y, z});
      }
    }
  }

  const auto lookup = [&](std::array<std::uint32_t, 3> v) {
    const std::uint32_t lead = v[0] != 0 ? v[0] : (v[1] != 0 ? v[1] : v[2]);
    const std::uint32_t s = gf.inv(lead);
    return index_by_code[code(gf.mul(v[0], s), gf.mul(v[1], s), gf.mul(v[2], s))];
  };

  // Line [a:b:c] consists of u + λv (λ ∈ F) and v for a kernel basis {u, v}.
  std::vector<std::vector<PointIndex>> lines;
  lines.reserve(pts.size());
  for (const auto& [a, b, c] : pts) {
    std::array<std::uint32_t, 3> u{}, v{};
    if (a == one) {
      u = {gf.neg(b), one, 0};
      v = {gf.neg(c), 0, one};
    } else if (b == one) {
      u = {one, 0, 0};
      v = {0, gf.neg(c), one};
    } else {
      u = {one, 0, 0};
      v = {0, one, 0};
    }
    std::vector<PointIndex> line;
    line.reserve(q + 1);
    for (std::uint32_t lambda = 0; lambda < q; ++lambda) {
      line.push_back(lookup({gf.add(u[0], gf.mul(lambda, v[0])), gf.add(u[1], gf.mul(lambda, v[1])),
                             gf.add(u[2], gf.mul(lambda, v[2]))}));
    }
    line.push_back(lookup(v));
    lines.push_back(std::move(line));
  }

  auto plane = std::make_shared<IncidencePlane>(q, std::move(lines));
  plane->field_ = std::make_shared<const Field>(field);
  plane->coords_.reserve(pts.size());
  for (const auto& [x, y, z] : pts) {
    plane->coords_.push_back(ProjPoint{{field.unrank(x), field.unrank(y), field.unrank(z)}});
  }
  plane->index_by_code_ = std::move(index_by_code);
  return plane;
}

AxiomReport verify_plane_axioms(const IncidencePlane& plane) {
  AxiomReport report;
  const std::uint64_t n = plane.order();
  const std::size_t n_points = plane.point_count();

  if (plane.line_count() != n_points) {
    report.failure = AxiomReport::Failure::LineCount;
    report.message = "expected " + std::to_string(n_points) + " lines, found " +
                     std::to_string(plane.line_count());
    return report;
  }

  // For each point P count, for every other point Q, the lines through both.
  std::vector<std::uint32_t> common(n_points, 0);
  for (PointIndex p = 0; p < n_points; ++p) {
    std::fill(common.begin(), common.end(), 0);
    for (LineIndex l : plane.lines_through_point(p)) {
      for (PointIndex other : plane.line(l)) ++common[other];
    }
    for (PointIndex other = p + 1; other < n_points; ++other) {
      if (common[other] == 1) continue;
      report.failure = common[other] == 0 ? AxiomReport::Failure::PairUncovered
                                          : AxiomReport::Failure::PairRepeated;
      report.pair = std::make_pair(p, other);
      report.message = "points " + std::to_string(p) + " and " + std::to_string(other) + " lie on " +
                       std::to_string(common[other]) + " common lines";
      return report;
    }
  }

  for (LineIndex l = 0; l < plane.line_count(); ++l) {
    if (plane.line(l).size() != n + 1) {
      report.failure = AxiomReport::Failure::LineSize;
      report.line = l;
      report.message = "line " + std::to_string(l) + " has " + std::to_string(plane.line(l).size()) +
                       " points, expected " + std::to_string(n + 1);
      return report;
    }
  }
  for (PointIndex p = 0; p < n_points; ++p) {
    if (plane.lines_through_point(p).size() != n + 1) {
      report.failure = AxiomReport::Failure::PointDegree;
      report.point = p;
      report.message = "point " + std::to_string(p) + " lies on " +
                       std::to_string(plane.lines_through_point(p).size()) + " lines, expected " +
                       std::to_string(n + 1);
      return report;
    }
  }
  return report;
}

namespace {

bool skip_line(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  return first == std::string::npos || s[first] == '#';
}

std::uint64_t parse_uint(const std::string& token, std::size_t line_no, const char* what) {
  std::uint64_t v = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw FormatError(line_no, std::string("malformed ") + what + " '" + token + "'");
  }
  return v;
}

}  // namespace

PlanePtr parse_plane(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  std::optional<std::uint64_t> order;
  std::vector<std::vector<PointIndex>> lines;
  std::vector<std::size_t> source_line;

  while (std::getline(in, text)) {
    ++line_no;
    if (skip_line(text)) continue;
    std::istringstream tokens(text);
    std::string tok;
    if (!order) {
      std::string value, extra;
      if (!(tokens >> tok) || tok != "order" || !(tokens >> value) || (tokens >> extra)) {
        throw FormatError(line_no, "expected header 'order <n>'");
      }
      order = parse_uint(value, line_no, "order");
      if (*order < 2 || *order > kMaxPlaneOrder) {
        throw FormatError(line_no, "plane order must be in 2.." + std::to_string(kMaxPlaneOrder));
      }
      continue;
    }
    const std::uint64_t n = *order;
    const std::uint64_t n_points = n * n + n + 1;
    if (lines.size() == n_points) {
      throw FormatError(line_no, "order mismatch: more than " + std::to_string(n_points) + " lines");
    }
    std::vector<PointIndex> pts;
    while (tokens >> tok) {
      const std::uint64_t p = parse_uint(tok, line_no, "point index");
      if (p >= n_points) {
        throw FormatError(line_no, "point index " + tok + " out of range 0.." + std::to_string(n_points - 1));
      }
      pts.push_back(static_cast<PointIndex>(p));
    }
    if (pts.size() != n + 1) {
      throw FormatError(line_no, "line cardinality " + std::to_string(pts.size()) + " != n+1 = " +
                                     std::to_string(n + 1));
    }
    auto sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw FormatError(line_no, "line repeats a point");
    }
    lines.push_back(std::move(pts));
    source_line.push_back(line_no);
  }

  if (!order) throw FormatError(0, "empty plane file");
  const std::uint64_t n_points = *order * *order + *order + 1;
  if (lines.size() != n_points) {
    throw FormatError(0, "order mismatch: expected " + std::to_string(n_points) + " lines, found " +
                             std::to_string(lines.size()));
  }

  auto plane = std::make_shared<const IncidencePlane>(*order, std::move(lines));
  const AxiomReport report = verify_plane_axioms(*plane);
  if (!report.passed()) {
    std::size_t where = 0;
    if (report.line) where = source_line[*report.line];
    if (report.pair && !plane->lines_through_point(report.pair->first).empty()) {
      where = source_line[plane->lines_through_point(report.pair->first).front()];
    }
    std::string msg = "plane axioms violated: " + report.message;
    if (report.pair) {
      // Name every file line through the first point so the defect can be located.
      msg += " (lines through point " + std::to_string(report.pair->first) + " at file lines";
      for (LineIndex l : plane->lines_through_point(report.pair->first)) {
        msg += " " + std::to_string(source_line[l]);
      }
      msg += ")";
    }
    throw FormatError(where, msg);
  }
  return plane;
}

PlanePtr load_plane(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open plane file " + path.string());
  return parse_plane(in);
}

void write_plane(const IncidencePlane& plane, std::ostream& out) {
  out << "order " << plane.order() << '\n';
  for (const auto& line : plane.lines()) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << ' ';
      out << line[i];
    }
    out << '\n';
  }
}

void save_plane(const IncidencePlane& plane, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write plane file " + path.string());
  write_plane(plane, out);
  if (!out) throw std::runtime_error("error writing plane file " + path.string());
}

}  // namespace tfold
