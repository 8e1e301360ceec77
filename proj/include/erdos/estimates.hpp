#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "erdos/compression.hpp"
#include "erdos/error.hpp"
#include "erdos/rational.hpp"

namespace erdos {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Tuple of positive integers with dim >= 2. `distinct()` records whether
/// the coordinates are pairwise different; the mass and gap estimates only
/// hold in that case.
class NaturalVector {
 public:
  explicit NaturalVector(std::vector<std::uint64_t> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2)
      throw Error(ErrorCode::DimensionTooSmall, "natural vector needs dim >= 2");
    for (auto c : coords_) {
      if (c == 0) throw Error(ErrorCode::NonPositiveInput, "natural vector coordinates must be >= 1");
      // keeps x^2 and sums of squares inside 64 bits before promotion
      if (c > (std::uint64_t{1} << 31))
        throw Error(ErrorCode::InvalidArgument, "natural vector coordinate too large");
    }
    distinct_ = std::set<std::uint64_t>(coords_.begin(), coords_.end()).size() == coords_.size();
  }

  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<std::uint64_t>& coords() const noexcept { return coords_; }
  bool distinct() const noexcept { return distinct_; }
  std::uint64_t inf() const { return *std::min_element(coords_.begin(), coords_.end()); }
  std::uint64_t sup() const { return *std::max_element(coords_.begin(), coords_.end()); }

  NaturalVector squared() const {
    std::vector<std::uint64_t> sq;
    sq.reserve(coords_.size());
    for (auto c : coords_) sq.push_back(c * c);
    return NaturalVector(std::move(sq), distinct_);
  }

  RationalVector to_rational() const {
    std::vector<Rational> out;
    out.reserve(coords_.size());
    for (auto c : coords_) out.emplace_back(Integer(static_cast<unsigned long>(c)));
    return RationalVector(std::move(out));
  }

 private:
  NaturalVector(std::vector<std::uint64_t> coords, bool distinct)
      : coords_(std::move(coords)), distinct_(distinct) {}

  std::vector<std::uint64_t> coords_;
  bool distinct_ = false;
};

namespace detail {

inline void require_distinct(const NaturalVector& v) {
  if (!v.distinct())
    throw Error(ErrorCode::NonDistinctCoordinates,
                "estimate requires pairwise distinct coordinates");
}

inline Rational integer_rational(std::uint64_t value) { return Rational(Integer(static_cast<unsigned long>(value))); }

}  // namespace detail

/// Exact H_x = 1 + 1/2 + ... + 1/x.
inline Rational harmonic_number(long long x) {
  if (x < 1) throw Error(ErrorCode::NonPositiveInput, "harmonic_number needs x >= 1");
  Rational sum = 0;
  for (long long n = 1; n <= x; ++n) sum += Rational(1, static_cast<unsigned long>(n));
  return sum;
}

/// Running H_1, H_2, ... without recomputing from scratch; sweeps over a
/// range of x use this instead of calling harmonic_number repeatedly.
class HarmonicAccumulator {
 public:
  const Rational& advance() {
    ++x_;
    sum_ += Rational(1, static_cast<unsigned long>(x_));
    return sum_;
  }
  long long x() const noexcept { return x_; }
  const Rational& value() const noexcept { return sum_; }

 private:
  long long x_ = 0;
  Rational sum_ = 0;
};

/// ln(x) + gamma.
inline double harmonic_approx(long long x) {
  if (x < 1) throw Error(ErrorCode::NonPositiveInput, "harmonic_approx needs x >= 1");
  return std::log(static_cast<double>(x)) + kEulerGamma;
}

/// m * sum_{k=0}^{n-1} 1 / (inf + k). Never below mass(v, m) for distinct
/// coordinates: the i-th smallest coordinate is at least inf + i.
inline Rational mass_upper_bound(const NaturalVector& v, const Scale& s) {
  detail::require_distinct(v);
  const std::uint64_t inf = v.inf();
  Rational sum = 0;
  for (std::uint64_t k = 0; k < v.dim(); ++k) sum += 1 / detail::integer_rational(inf + k);
  return Rational(s.value() * sum);
}

/// m * sum_{k=0}^{n-1} 1 / (sup - k). Distinctness forces sup >= n, so every
/// denominator is positive.
inline Rational mass_lower_bound(const NaturalVector& v, const Scale& s) {
  detail::require_distinct(v);
  const std::uint64_t sup = v.sup();
  Rational sum = 0;
  for (std::uint64_t k = 0; k < v.dim(); ++k) sum += 1 / detail::integer_rational(sup - k);
  return Rational(s.value() * sum);
}

struct LogFormBounds {
  double lower;  // m * log(1 - (n-1)/sup)^-1
  double upper;  // m * log(1 + (n-1)/inf)
};

/// Logarithmic forms of the mass estimates. Display only: they hide
/// constants and are not inequalities against mass().
inline LogFormBounds mass_bounds_log_form(const NaturalVector& v, const Scale& s) {
  detail::require_distinct(v);
  const double m = to_double(s.value());
  const double n1 = static_cast<double>(v.dim() - 1);
  const double sup = static_cast<double>(v.sup());
  const double inf = static_cast<double>(v.inf());
  return LogFormBounds{-m * std::log1p(-n1 / sup), m * std::log1p(n1 / inf)};
}

/// n sup^2 + m^2 * mass_upper_bound(squares, 1) - 2mn, never below
/// gap_squared(v, m).
inline Rational gap_sq_upper_bound(const NaturalVector& v, const Scale& s) {
  detail::require_distinct(v);
  const Rational& m = s.value();
  const Rational n = detail::integer_rational(v.dim());
  const Rational sup = detail::integer_rational(v.sup());
  return Rational(n * sup * sup + m * m * mass_upper_bound(v.squared(), Scale(1)) - 2 * m * n);
}

/// n inf^2 + m^2 * mass_lower_bound(squares, 1) - 2mn; may be negative,
/// never above gap_squared(v, m).
inline Rational gap_sq_lower_bound(const NaturalVector& v, const Scale& s) {
  detail::require_distinct(v);
  const Rational& m = s.value();
  const Rational n = detail::integer_rational(v.dim());
  const Rational inf = detail::integer_rational(v.inf());
  return Rational(n * inf * inf + m * m * mass_lower_bound(v.squared(), Scale(1)) - 2 * m * n);
}

}  // namespace erdos
