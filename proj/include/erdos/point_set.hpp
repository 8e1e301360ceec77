#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "erdos/compression.hpp"
#include "erdos/error.hpp"
#include "erdos/rational.hpp"

namespace erdos {

/// Finite list of points of one common dimension. Duplicate points are
/// allowed; duplicate_pair_count() reports them.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::size_t dim, std::vector<RationalVector> points, std::string label = {})
      : dim_(dim), points_(std::move(points)), label_(std::move(label)) {
    if (dim_ < 1) throw Error(ErrorCode::InvalidArgument, "point set dimension must be >= 1");
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (points_[i].dim() != dim_)
        throw Error(ErrorCode::MixedDimensions, "point " + std::to_string(i) + " has dimension " +
                                                    std::to_string(points_[i].dim()) + ", expected " +
                                                    std::to_string(dim_));
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<RationalVector>& points() const noexcept { return points_; }
  const RationalVector& operator[](std::size_t i) const { return points_[i]; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  std::size_t pair_count() const noexcept {
    const std::size_t n = points_.size();
    return n < 2 ? 0 : n * (n - 1) / 2;
  }

  /// Number of unordered pairs of coincident points.
  std::size_t duplicate_pair_count() const {
    std::map<std::vector<Rational>, std::size_t> seen;
    for (const auto& p : points_) ++seen[p.coords()];
    std::size_t pairs = 0;
    for (const auto& [coords, count] : seen) pairs += count * (count - 1) / 2;
    return pairs;
  }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.dim_ == b.dim_ && a.label_ == b.label_ && a.points_ == b.points_;
  }

 private:
  std::size_t dim_ = 1;
  std::vector<RationalVector> points_;
  std::string label_;
};

// CSV point format:
//   # dim=k
//   # label=<text>        (optional)
//   x1,x2,...,xk          one point per line; integers or p/q
// Other lines starting with '#' and blank lines are ignored.

inline void write_point_set(std::ostream& os, const PointSet& ps) {
  os << "# dim=" << ps.dim() << '\n';
  if (!ps.label().empty()) os << "# label=" << ps.label() << '\n';
  for (const auto& p : ps.points()) os << p.to_string() << '\n';
}

inline std::string point_set_to_string(const PointSet& ps) {
  std::ostringstream os;
  write_point_set(os, ps);
  return os.str();
}

inline PointSet read_point_set(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  std::string label;
  std::vector<RationalVector> points;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line[0] == '#') {
      auto body = line.substr(1);
      body.erase(0, body.find_first_not_of(' '));
      if (body.rfind("dim=", 0) == 0) {
        try {
          std::size_t used = 0;
          const long long d = std::stoll(body.substr(4), &used);
          if (d < 1 || used != body.size() - 4) throw std::invalid_argument("dim");
          dim = static_cast<std::size_t>(d);
        } catch (const std::exception&) {
          throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad dim header");
        }
      } else if (body.rfind("label=", 0) == 0) {
        label = body.substr(6);
      }
      continue;
    }
    if (dim == 0)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": point before '# dim=k' header");
    std::vector<Rational> coords;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      const auto field = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      try {
        coords.push_back(parse_rational(field));
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (coords.size() != dim)
      throw Error(ErrorCode::MixedDimensions, "line " + std::to_string(line_no) + ": expected " +
                                                  std::to_string(dim) + " coordinates, got " +
                                                  std::to_string(coords.size()));
    points.emplace_back(std::move(coords));
  }
  if (dim == 0) throw Error(ErrorCode::ParseError, "missing '# dim=k' header");
  return PointSet(dim, std::move(points), std::move(label));
}

inline PointSet point_set_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_point_set(is);
}

inline PointSet load_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  return read_point_set(in);
}

inline void save_point_set(const PointSet& ps, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  write_point_set(out, ps);
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
}

}  // namespace erdos
