#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "erdos/error.hpp"
#include "erdos/parallel.hpp"
#include "erdos/point_set.hpp"
#include "erdos/rational.hpp"

namespace erdos {

struct CensusResult {
  std::size_t n_points = 0;
  std::size_t pair_count = 0;
  std::size_t distinct_count = 0;
  std::size_t unit_pair_count = 0;
  std::size_t duplicate_pair_count = 0;

  friend bool operator==(const CensusResult&, const CensusResult&) = default;
};

/// Upper bound on dimension for the bucketed unit-pair search, which visits
/// 3^k neighbour cells per point.
inline constexpr std::size_t kMaxBucketDimension = 12;

namespace detail {

// A point set rescaled by the common denominator L of all coordinates, so
// that squared distances become integers: d^2 = S / L^2. Only built when
// every S provably fits in int64; otherwise the exact rational path is used.
struct IntegerEmbedding {
  std::size_t dim = 0;
  std::int64_t scale = 1;  // L
  std::vector<std::int64_t> coords;  // row-major, n * dim

  std::int64_t at(std::size_t point, std::size_t axis) const { return coords[point * dim + axis]; }

  std::int64_t squared_distance(std::size_t i, std::size_t j) const {
    std::int64_t sum = 0;
    const std::int64_t* a = &coords[i * dim];
    const std::int64_t* b = &coords[j * dim];
    for (std::size_t t = 0; t < dim; ++t) {
      const std::int64_t d = a[t] - b[t];
      sum += d * d;
    }
    return sum;
  }

  std::int64_t unit() const { return scale * scale; }
};

inline std::optional<IntegerEmbedding> embed_integers(const PointSet& ps) {
  Integer lcm = 1;
  for (const auto& p : ps.points())
    for (const auto& c : p.coords()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  if (lcm > Integer(std::int64_t{1} << 30)) return std::nullopt;

  // k * (2 * max|c|)^2 must stay below 2^62.
  const double limit = std::sqrt(std::ldexp(1.0, 62) / (4.0 * static_cast<double>(ps.dim())));
  const Integer max_abs(static_cast<unsigned long>(std::min(limit, 4.0e18)));

  IntegerEmbedding e;
  e.dim = ps.dim();
  e.scale = lcm.get_si();
  e.coords.reserve(ps.size() * ps.dim());
  for (const auto& p : ps.points()) {
    for (const auto& c : p.coords()) {
      Integer scaled = c.get_num() * (lcm / c.get_den());
      if (abs(scaled) > max_abs) return std::nullopt;
      e.coords.push_back(scaled.get_si());
    }
  }
  return e;
}

inline Rational rational_squared_distance(const RationalVector& a, const RationalVector& b) {
  Rational sum = 0;
  for (std::size_t t = 0; t < a.dim(); ++t) {
    Rational d = a[t] - b[t];
    sum += d * d;
  }
  return sum;
}

inline std::vector<RowRange> pair_rows(std::size_t n, unsigned workers) {
  return split_rows(n, resolve_workers(workers), [n](std::size_t i) { return n - i - 1; });
}

template <class T>
std::size_t count_distinct_nonzero(std::vector<T>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](const T& v) { return v != 0; }));
}

// Sorted, deduplicated squared distances over pairs i < j, merged from
// per-chunk sets so the result does not depend on the chunking.
template <class T, class Distance>
std::vector<T> distinct_pair_values(std::size_t n, unsigned workers, Distance distance) {
  const auto ranges = pair_rows(n, workers);
  std::vector<std::vector<T>> parts(ranges.size());
  run_chunks(ranges, [&](std::size_t c, RowRange r) {
    auto& out = parts[c];
    for (std::size_t i = r.begin; i < r.end; ++i)
      for (std::size_t j = i + 1; j < n; ++j) out.push_back(distance(i, j));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  });
  std::vector<T> merged;
  for (auto& p : parts) {
    std::vector<T> next;
    next.reserve(merged.size() + p.size());
    std::set_union(merged.begin(), merged.end(), p.begin(), p.end(), std::back_inserter(next));
    merged = std::move(next);
  }
  return merged;
}

inline void require_pairs(const PointSet& ps) {
  if (ps.size() < 2)
    throw Error(ErrorCode::EmptyOrSingleton, "need at least two points, got " + std::to_string(ps.size()));
}

}  // namespace detail

/// All n(n-1)/2 exact squared distances, pairs (i, j) with i < j in
/// lexicographic order.
inline std::vector<Rational> pairwise_squared_distances(const PointSet& ps) {
  detail::require_pairs(ps);
  std::vector<Rational> out;
  out.reserve(ps.pair_count());
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      out.push_back(detail::rational_squared_distance(ps[i], ps[j]));
  return out;
}

/// Number of different nonzero pairwise distances (coincident points do
/// not contribute a distance).
inline std::size_t distinct_distance_count(const PointSet& ps, unsigned workers = 1) {
  detail::require_pairs(ps);
  if (auto e = detail::embed_integers(ps)) {
    auto values = detail::distinct_pair_values<std::int64_t>(
        ps.size(), workers, [&](std::size_t i, std::size_t j) { return e->squared_distance(i, j); });
    return detail::count_distinct_nonzero(values);
  }
  auto values = detail::distinct_pair_values<Rational>(ps.size(), workers, [&](std::size_t i, std::size_t j) {
    return detail::rational_squared_distance(ps[i], ps[j]);
  });
  return detail::count_distinct_nonzero(values);
}

/// Unordered pairs at distance exactly 1, by comparing every pair.
inline std::size_t unit_pair_count(const PointSet& ps, unsigned workers = 1) {
  const std::size_t n = ps.size();
  const auto ranges = detail::pair_rows(n, workers);
  std::vector<std::size_t> counts(ranges.size(), 0);
  if (auto e = detail::embed_integers(ps)) {
    const std::int64_t unit = e->unit();
    run_chunks(ranges, [&](std::size_t c, RowRange r) {
      for (std::size_t i = r.begin; i < r.end; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (e->squared_distance(i, j) == unit) ++counts[c];
    });
  } else {
    run_chunks(ranges, [&](std::size_t c, RowRange r) {
      for (std::size_t i = r.begin; i < r.end; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (detail::rational_squared_distance(ps[i], ps[j]) == 1) ++counts[c];
    });
  }
  std::size_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

/// Distinct squared distances over cross pairs (a_s, b_t). Zero is counted
/// when a point appears in both sets.
inline std::size_t bipartite_distinct_distance_count(const PointSet& a, const PointSet& b, unsigned workers = 1) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptyInput, "bipartite count needs two nonempty sets");
  if (a.dim() != b.dim())
    throw Error(ErrorCode::MixedDimensions, "bipartite sets have dimensions " + std::to_string(a.dim()) + " and " +
                                                std::to_string(b.dim()));
  const auto ranges = split_rows(a.size(), resolve_workers(workers), [&](std::size_t) { return b.size(); });

  // Joint embedding keeps both sets on one common denominator.
  std::vector<RationalVector> joint = a.points();
  joint.insert(joint.end(), b.points().begin(), b.points().end());
  const PointSet both(a.dim(), std::move(joint));
  const auto e = detail::embed_integers(both);
  const std::size_t offset = a.size();

  if (e) {
    std::vector<std::vector<std::int64_t>> ints(ranges.size());
    run_chunks(ranges, [&](std::size_t c, RowRange r) {
      auto& out = ints[c];
      for (std::size_t i = r.begin; i < r.end; ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out.push_back(e->squared_distance(i, offset + j));
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    });
    std::vector<std::int64_t> merged;
    for (auto& p : ints) merged.insert(merged.end(), p.begin(), p.end());
    std::sort(merged.begin(), merged.end());
    return static_cast<std::size_t>(std::unique(merged.begin(), merged.end()) - merged.begin());
  }
  std::vector<std::vector<Rational>> parts(ranges.size());
  run_chunks(ranges, [&](std::size_t c, RowRange r) {
    auto& out = parts[c];
    for (std::size_t i = r.begin; i < r.end; ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out.push_back(detail::rational_squared_distance(a[i], b[j]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  });
  std::vector<Rational> merged;
  for (auto& p : parts) merged.insert(merged.end(), p.begin(), p.end());
  std::sort(merged.begin(), merged.end());
  return static_cast<std::size_t>(std::unique(merged.begin(), merged.end()) - merged.begin());
}

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct CellHash {
  std::size_t operator()(const std::vector<std::int64_t>& key) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : key) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Calls visit(offset) for every offset in {-1, 0, 1}^dim.
template <class Visit>
void for_each_neighbour_offset(std::size_t dim, Visit visit) {
  std::vector<int> offset(dim, -1);
  while (true) {
    visit(offset);
    std::size_t t = 0;
    while (t < dim && offset[t] == 1) offset[t++] = -1;
    if (t == dim) return;
    ++offset[t];
  }
}

template <class Key, class Map, class Distance>
std::size_t bucketed_unit_pairs(std::size_t n, std::size_t dim, const std::vector<Key>& cells, const Map& buckets,
                                unsigned workers, Distance is_unit) {
  const auto ranges = split_rows(n, resolve_workers(workers), [](std::size_t) { return 1; });
  std::vector<std::size_t> counts(ranges.size(), 0);
  run_chunks(ranges, [&](std::size_t c, RowRange r) {
    Key probe;
    for (std::size_t i = r.begin; i < r.end; ++i) {
      for_each_neighbour_offset(dim, [&](const std::vector<int>& offset) {
        probe = cells[i];
        for (std::size_t t = 0; t < dim; ++t) probe[t] += offset[t];
        auto it = buckets.find(probe);
        if (it == buckets.end()) return;
        for (std::size_t j : it->second)
          if (j > i && is_unit(i, j)) ++counts[c];
      });
    }
  });
  std::size_t total = 0;
  for (auto v : counts) total += v;
  return total;
}

}  // namespace detail

/// Same value as unit_pair_count, computed by hashing points into unit
/// cells (floor of each coordinate) and only comparing points whose cells
/// differ by at most one step on every axis.
inline std::size_t accelerated_unit_pair_count(const PointSet& ps, unsigned workers = 1) {
  const std::size_t n = ps.size();
  const std::size_t dim = ps.dim();
  if (n < 2) return 0;
  if (dim > kMaxBucketDimension)
    throw Error(ErrorCode::BudgetExceeded, "bucketed search supports dim <= " + std::to_string(kMaxBucketDimension));

  if (auto e = detail::embed_integers(ps)) {
    using Key = std::vector<std::int64_t>;
    std::vector<Key> cells(n, Key(dim));
    std::unordered_map<Key, std::vector<std::size_t>, detail::CellHash> buckets;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < dim; ++t) cells[i][t] = detail::floor_div(e->at(i, t), e->scale);
      buckets[cells[i]].push_back(i);
    }
    const std::int64_t unit = e->unit();
    return detail::bucketed_unit_pairs<Key>(
        n, dim, cells, buckets, workers, [&](std::size_t i, std::size_t j) { return e->squared_distance(i, j) == unit; });
  }

  using Key = std::vector<Integer>;
  std::vector<Key> cells(n, Key(dim));
  std::map<Key, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < dim; ++t) cells[i][t] = floor_rational(ps[i][t]).get_num();
    buckets[cells[i]].push_back(i);
  }
  return detail::bucketed_unit_pairs<Key>(
      n, dim, cells, buckets, workers,
      [&](std::size_t i, std::size_t j) { return detail::rational_squared_distance(ps[i], ps[j]) == 1; });
}

/// Distinct count, unit pairs (bucketed) and duplicate bookkeeping in one
/// result. Sets with fewer than two points give an all-zero census.
inline CensusResult census(const PointSet& ps, unsigned workers = 1) {
  CensusResult r;
  r.n_points = ps.size();
  r.pair_count = ps.pair_count();
  if (ps.size() < 2) return r;
  r.distinct_count = distinct_distance_count(ps, workers);
  r.unit_pair_count = accelerated_unit_pair_count(ps, workers);
  r.duplicate_pair_count = ps.duplicate_pair_count();
  return r;
}

}  // namespace erdos
