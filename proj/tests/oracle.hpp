#pragma once

// Test-only reference computations. Deliberately naive: no integer
// embedding, no chunking, no bucketing, so they share no code path with the
// counting kernels they check.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "erdos/erdos.hpp"

namespace erdos::oracle {

inline Rational squared_distance(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t t = 0; t < a.dim(); ++t) s += (a[t] - b[t]) * (a[t] - b[t]);
  return s;
}

struct Census {
  std::size_t distinct = 0;
  std::size_t unit_pairs = 0;
};

inline Census brute_census(const PointSet& ps) {
  std::set<Rational> seen;
  Census c;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      const Rational d = squared_distance(ps[i], ps[j]);
      if (d != 0) seen.insert(d);
      if (d == 1) ++c.unit_pairs;
    }
  }
  c.distinct = seen.size();
  return c;
}

/// Random rational point set: coordinates a/b with b drawn from `dens` so
/// that unit distances (including non-axis ones like (3/5, 4/5)) occur.
inline PointSet random_rational_set(std::mt19937_64& rng, std::size_t n, std::size_t k, std::int64_t span,
                                    const std::vector<std::int64_t>& dens) {
  std::vector<RationalVector> pts;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> c;
    const std::int64_t den = dens[draw_below(rng, dens.size())];
    for (std::size_t t = 0; t < k; ++t) {
      const std::int64_t num = static_cast<std::int64_t>(draw_below(rng, static_cast<std::uint64_t>(span * den + 1)));
      c.push_back(make_rational(num, den));
    }
    pts.emplace_back(std::move(c));
  }
  return PointSet(k, std::move(pts));
}

}  // namespace erdos::oracle
