#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "erdos/error.hpp"
#include "erdos/rational.hpp"

namespace erdos {

/// An ordered tuple of exact rational coordinates.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  static RationalVector from_integers(std::span<const long long> values) {
    std::vector<Rational> coords;
    coords.reserve(values.size());
    for (long long v : values) coords.push_back(make_rational(v));
    return RationalVector(std::move(coords));
  }
  static RationalVector from_integers(std::initializer_list<long long> values) {
    return from_integers(std::span<const long long>(values.begin(), values.size()));
  }

  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  bool has_zero_coordinate() const {
    for (const auto& c : coords_)
      if (c == 0) return true;
    return false;
  }

  Rational norm_squared() const {
    Rational sum = 0;
    for (const auto& c : coords_) sum += c * c;
    return sum;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ',';
      out += format_rational(coords_[i]);
    }
    return out;
  }

  friend bool operator==(const RationalVector& a, const RationalVector& b) {
    return a.coords_ == b.coords_;
  }

 private:
  std::vector<Rational> coords_;
};

/// Compression scale, always >= 1.
class Scale {
 public:
  explicit Scale(Rational m) : m_(std::move(m)) {
    if (m_ < 1) throw Error(ErrorCode::ScaleTooSmall, "scale must be >= 1, got " + format_rational(m_));
  }
  explicit Scale(long long m) : Scale(make_rational(m)) {}

  const Rational& value() const noexcept { return m_; }

 private:
  Rational m_;
};

namespace detail {

inline void require_compression_domain(const RationalVector& v) {
  if (v.dim() < 2)
    throw Error(ErrorCode::DimensionTooSmall, "compression needs dim >= 2, got " + std::to_string(v.dim()));
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i] == 0) throw Error(ErrorCode::ZeroCoordinate, "coordinate " + std::to_string(i) + " is zero");
  }
}

}  // namespace detail

/// Coordinate-wise x_i -> m / x_i. Applying it twice with the same scale
/// returns the input.
inline RationalVector compress(const RationalVector& v, const Scale& s) {
  detail::require_compression_domain(v);
  std::vector<Rational> out;
  out.reserve(v.dim());
  for (const auto& x : v.coords()) out.emplace_back(s.value() / x);
  return RationalVector(std::move(out));
}

/// Sum of the compressed coordinates, sum_i m / x_i.
inline Rational mass(const RationalVector& v, const Scale& s) {
  detail::require_compression_domain(v);
  Rational sum = 0;
  for (const auto& x : v.coords()) sum += s.value() / x;
  return sum;
}

/// Squared Euclidean length of x - compress(x, m), evaluated term by term.
inline Rational gap_squared(const RationalVector& v, const Scale& s) {
  detail::require_compression_domain(v);
  Rational sum = 0;
  for (const auto& x : v.coords()) {
    Rational d = x - s.value() / x;
    sum += d * d;
  }
  return sum;
}

/// Floating approximation of the gap; all comparisons should go through
/// gap_squared instead.
inline double gap(const RationalVector& v, const Scale& s) { return sqrt_to_double(gap_squared(v, s)); }

/// The expanded form sum x_i^2 + m^2 sum 1/x_i^2 - 2mn. Must agree with
/// gap_squared exactly; kept as a separate evaluation route so the two can
/// cross-check each other.
inline Rational gap_squared_via_identity(const RationalVector& v, const Scale& s) {
  detail::require_compression_domain(v);
  Rational squares = 0;
  Rational inverse_squares = 0;
  for (const auto& x : v.coords()) {
    const Rational sq = x * x;
    squares += sq;
    inverse_squares += 1 / sq;
  }
  const Rational& m = s.value();
  return Rational(squares + m * m * inverse_squares - 2 * m * static_cast<long>(v.dim()));
}

}  // namespace erdos
