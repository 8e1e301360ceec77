#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "erdos/error.hpp"
#include "erdos/point_set.hpp"
#include "erdos/rational.hpp"

namespace erdos {

/// Largest point count (times dimension) any generator will materialize.
inline constexpr std::uint64_t kDefaultPointBudget = std::uint64_t{1} << 22;

/// Uniform draw from [0, bound) using only the raw std::mt19937_64 stream
/// (rejection of the biased tail), so sequences are identical on every
/// standard library. std::uniform_int_distribution gives no such promise.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::InvalidArgument, "draw_below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

namespace detail {

inline std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t budget) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > budget / base)
      throw Error(ErrorCode::BudgetExceeded, "configuration exceeds point budget of " + std::to_string(budget));
    result *= base;
  }
  return result;
}

// Visits every tuple in [lo, hi]^k in lexicographic order.
template <class Visit>
void for_each_box_point(std::size_t k, long long lo, long long hi, Visit visit) {
  std::vector<long long> p(k, lo);
  while (true) {
    visit(p);
    std::size_t t = k;
    while (t > 0 && p[t - 1] == hi) p[--t] = lo;
    if (t == 0) return;
    ++p[t - 1];
  }
}

inline RationalVector integer_point(const std::vector<long long>& coords) {
  return RationalVector::from_integers(std::span<const long long>(coords));
}

}  // namespace detail

/// The side^k lattice points {0, ..., side-1}^k in lexicographic order.
inline PointSet generate_grid(std::uint64_t side, std::size_t k, std::uint64_t budget = kDefaultPointBudget) {
  if (side < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "grid needs side >= 1 and k >= 1");
  const std::uint64_t count = detail::checked_power(side, k, budget);
  std::vector<RationalVector> points;
  points.reserve(count);
  detail::for_each_box_point(k, 0, static_cast<long long>(side) - 1,
                             [&](const std::vector<long long>& p) { points.push_back(detail::integer_point(p)); });
  return PointSet(k, std::move(points), "grid side=" + std::to_string(side) + " k=" + std::to_string(k));
}

/// n points with integer coordinates uniform on [0, coord_bound]^k.
/// Generator: std::mt19937_64 seeded with `seed`, coordinates drawn in
/// point-major order via draw_below.
inline PointSet generate_random(std::uint64_t n, std::size_t k, std::uint64_t coord_bound, std::uint64_t seed,
                                std::uint64_t budget = kDefaultPointBudget) {
  if (n < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "random set needs n >= 1 and k >= 1");
  if (n > budget / k) throw Error(ErrorCode::BudgetExceeded, "configuration exceeds point budget");
  std::mt19937_64 rng(seed);
  std::vector<RationalVector> points;
  points.reserve(n);
  std::vector<long long> coords(k);
  for (std::uint64_t i = 0; i < n; ++i) {
    for (auto& c : coords) c = static_cast<long long>(draw_below(rng, coord_bound + 1));
    points.push_back(detail::integer_point(coords));
  }
  return PointSet(k, std::move(points),
                  "random n=" + std::to_string(n) + " k=" + std::to_string(k) + " bound=" +
                      std::to_string(coord_bound) + " seed=" + std::to_string(seed));
}

/// Denominator resolution of the random half of generate_concentrated.
inline constexpr std::int64_t kConcentratedResolution = std::int64_t{1} << 20;

/// Positive lattice points (all coordinates >= 1) with norm <= radius,
/// nearest to the origin first, ties broken lexicographically.
inline std::vector<std::vector<long long>> positive_lattice_by_norm(std::size_t k, const Rational& radius,
                                                                    std::uint64_t budget = kDefaultPointBudget) {
  std::vector<std::vector<long long>> out;
  const Integer r_floor = floor_rational(radius).get_num();
  if (r_floor < 1) return out;
  if (!r_floor.fits_slong_p()) throw Error(ErrorCode::BudgetExceeded, "radius too large");
  const long long hi = r_floor.get_si();
  detail::checked_power(static_cast<std::uint64_t>(hi), k, budget);
  const Rational r2 = radius * radius;
  detail::for_each_box_point(k, 1, hi, [&](const std::vector<long long>& p) {
    Integer norm2 = 0;
    for (long long c : p) norm2 += Integer(static_cast<long>(c)) * Integer(static_cast<long>(c));
    if (Rational(norm2) <= r2) out.push_back(p);
  });
  auto norm2 = [](const std::vector<long long>& p) {
    long long s = 0;
    for (long long c : p) s += c * c;
    return s;
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const auto na = norm2(a), nb = norm2(b);
    return na != nb ? na < nb : a < b;
  });
  return out;
}

/// n points within `radius` of the origin: the n/2 positive lattice points
/// nearest the origin, then n/2 seeded random rational points of norm
/// <= radius that are not positive lattice points. Random coordinates are
/// radius * u / 2^20 with u uniform on [-2^20, 2^20] (std::mt19937_64).
inline PointSet generate_concentrated(std::uint64_t n, std::size_t k, const Rational& radius, std::uint64_t seed,
                                      std::uint64_t budget = kDefaultPointBudget) {
  if (n % 2 != 0) throw Error(ErrorCode::OddCount, "concentrated set needs even n, got " + std::to_string(n));
  if (n == 0 || k < 1) throw Error(ErrorCode::InvalidArgument, "concentrated set needs n >= 2 and k >= 1");
  if (radius <= 0) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  if (n > budget / k) throw Error(ErrorCode::BudgetExceeded, "configuration exceeds point budget");
  const std::uint64_t half = n / 2;

  auto lattice = positive_lattice_by_norm(k, radius, budget);
  if (lattice.size() < half)
    throw Error(ErrorCode::RadiusTooSmall, "only " + std::to_string(lattice.size()) +
                                               " positive lattice points within radius, need " + std::to_string(half));
  std::vector<RationalVector> points;
  points.reserve(n);
  for (std::uint64_t i = 0; i < half; ++i) points.push_back(detail::integer_point(lattice[i]));

  std::mt19937_64 rng(seed);
  const std::int64_t res = kConcentratedResolution;
  const Integer res2 = Integer(static_cast<long>(res)) * Integer(static_cast<long>(res));
  std::vector<std::int64_t> u(k);
  while (points.size() < n) {
    Integer norm2 = 0;
    for (auto& v : u) {
      v = static_cast<std::int64_t>(draw_below(rng, 2 * static_cast<std::uint64_t>(res) + 1)) - res;
      norm2 += Integer(static_cast<long>(v)) * Integer(static_cast<long>(v));
    }
    if (norm2 > res2) continue;
    std::vector<Rational> coords;
    coords.reserve(k);
    bool positive_lattice = true;
    for (auto v : u) {
      coords.push_back(Rational(radius * make_rational(v, res)));
      if (coords.back() < 1 || coords.back().get_den() != 1) positive_lattice = false;
    }
    if (positive_lattice) continue;
    points.emplace_back(std::move(coords));
  }
  return PointSet(k, std::move(points),
                  "concentrated n=" + std::to_string(n) + " k=" + std::to_string(k) + " radius=" +
                      format_rational(radius) + " seed=" + std::to_string(seed));
}

}  // namespace erdos
