#include "tfold/point_set.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tfold/error.hpp"

namespace tfold {

PointSet::PointSet(PlanePtr plane) : plane_(std::move(plane)) {
  if (!plane_) throw std::invalid_argument("PointSet needs a plane");
  mask_ = PointMask(plane_->point_count());
}

PointSet::PointSet(PlanePtr plane, std::span<const PointIndex> points) : PointSet(std::move(plane)) {
  for (PointIndex p : points) insert(p);
}

PointSet::PointSet(PlanePtr plane, PointMask mask) : PointSet(std::move(plane)) {
  if (mask.size() != mask_.size()) throw std::invalid_argument("mask size does not match the plane");
  mask_ = std::move(mask);
  size_ = mask_.count();
}

void PointSet::insert(PointIndex p) {
  if (p >= mask_.size()) throw std::out_of_range("point index " + std::to_string(p) + " out of range");
  if (!mask_.test(p)) {
    mask_.set(p);
    ++size_;
  }
}

void PointSet::erase(PointIndex p) {
  if (p >= mask_.size()) throw std::out_of_range("point index " + std::to_string(p) + " out of range");
  if (mask_.test(p)) {
    mask_.reset(p);
    --size_;
  }
}

PointSet PointSet::complement() const { return PointSet(plane_, mask_.complement()); }

void require_same_plane(const IncidencePlane& plane, const PointSet& s) {
  if (&s.plane() != &plane && !(s.plane() == plane)) {
    throw std::invalid_argument("point set belongs to a different plane");
  }
}

void write_point_set(const PointSet& s, std::ostream& out) {
  out << "order " << s.plane().order() << '\n' << "size " << s.size() << '\n';
  const auto idx = s.indices();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out << ' ';
    out << idx[i];
  }
  out << '\n';
}

void save_point_set(const PointSet& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write point-set file " + path.string());
  write_point_set(s, out);
  if (!out) throw std::runtime_error("error writing point-set file " + path.string());
}

namespace {

std::uint64_t header_value(std::istream& in, std::size_t line_no, const std::string& key) {
  std::string text;
  if (!std::getline(in, text)) throw FormatError(line_no, "missing '" + key + " <value>' line");
  std::istringstream tokens(text);
  std::string k, v, extra;
  std::uint64_t value = 0;
  if (!(tokens >> k) || k != key || !(tokens >> v) || (tokens >> extra)) {
    throw FormatError(line_no, "expected '" + key + " <value>'");
  }
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw FormatError(line_no, "malformed " + key + " '" + v + "'");
  }
  return value;
}

}  // namespace

PointSet parse_point_set(std::istream& in, PlanePtr plane) {
  const std::uint64_t order = header_value(in, 1, "order");
  if (order != plane->order()) {
    throw FormatError(1, "order mismatch: set is over order " + std::to_string(order) +
                             ", plane has order " + std::to_string(plane->order()));
  }
  const std::uint64_t size = header_value(in, 2, "size");
  std::string text;
  std::getline(in, text);
  std::istringstream tokens(text);
  PointSet s(plane);
  std::string tok;
  std::int64_t prev = -1;
  std::uint64_t count = 0;
  while (tokens >> tok) {
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), p);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw FormatError(3, "malformed point index '" + tok + "'");
    }
    if (p >= plane->point_count()) throw FormatError(3, "point index " + tok + " out of range");
    if (static_cast<std::int64_t>(p) <= prev) throw FormatError(3, "point indices must be strictly increasing");
    prev = static_cast<std::int64_t>(p);
    s.insert(static_cast<PointIndex>(p));
    ++count;
  }
  if (count != size) {
    throw FormatError(3, "size line says " + std::to_string(size) + " but " + std::to_string(count) +
                             " indices are listed");
  }
  return s;
}

PointSet load_point_set(const std::filesystem::path& path, PlanePtr plane) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open point-set file " + path.string());
  return parse_point_set(in, std::move(plane));
}

}  // namespace tfold
