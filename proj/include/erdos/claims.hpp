#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "erdos/census.hpp"
#include "erdos/compression.hpp"
#include "erdos/error.hpp"
#include "erdos/estimates.hpp"
#include "erdos/generators.hpp"
#include "erdos/parallel.hpp"
#include "erdos/point_set.hpp"
#include "erdos/rational.hpp"

namespace erdos {

// ---------------------------------------------------------------------------
// Bound formulas

/// n, k plus the two slack parameters that stand in for the o(1) exponent
/// (epsilon) and the implied constant.
struct BoundParams {
  std::uint64_t n = 2;
  std::uint64_t k = 2;
  double epsilon = 0.0;
  double constant = 1.0;

  void validate() const {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "bound parameters need n >= 2");
    if (k < 2) throw Error(ErrorCode::InvalidArgument, "bound parameters need k >= 2");
    if (!(epsilon >= 0) || !std::isfinite(epsilon)) throw Error(ErrorCode::InvalidArgument, "epsilon must be >= 0");
    if (!(constant > 0) || !std::isfinite(constant)) throw Error(ErrorCode::InvalidArgument, "constant must be > 0");
  }
};

/// constant * (sqrt(k) / 2) * n^(1 - epsilon).
inline double unit_distance_bound(const BoundParams& p) {
  p.validate();
  return p.constant * std::sqrt(static_cast<double>(p.k)) / 2.0 *
         std::pow(static_cast<double>(p.n), 1.0 - p.epsilon);
}

/// constant * (sqrt(k) / 2) * n^(2/k - epsilon).
inline double distinct_distance_bound(const BoundParams& p) {
  p.validate();
  return p.constant * std::sqrt(static_cast<double>(p.k)) / 2.0 *
         std::pow(static_cast<double>(p.n), 2.0 / static_cast<double>(p.k) - p.epsilon);
}

enum class CorollaryVariant { DimN, Dim2N, DimNSquared };

inline CorollaryVariant parse_corollary_variant(std::string_view name) {
  if (name == "dim_n") return CorollaryVariant::DimN;
  if (name == "dim_2n") return CorollaryVariant::Dim2N;
  if (name == "dim_n_squared") return CorollaryVariant::DimNSquared;
  throw Error(ErrorCode::UnknownVariant, "unknown corollary variant '" + std::string(name) + "'");
}

/// Distinct-distance lower bounds for n points in R^n, R^{2n} and R^{n^2}.
inline double corollary_bound(std::uint64_t n, CorollaryVariant variant, double epsilon) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "corollary bounds need n >= 2");
  if (!(epsilon >= 0)) throw Error(ErrorCode::InvalidArgument, "epsilon must be >= 0");
  const double x = static_cast<double>(n);
  switch (variant) {
    case CorollaryVariant::DimN:
      return std::pow(x, 2.0 / x + 0.5 - epsilon) / 2.0;
    case CorollaryVariant::Dim2N:
      return std::sqrt(2.0) / 2.0 * std::pow(x, 1.0 / x + 0.5 - epsilon);
    case CorollaryVariant::DimNSquared:
      return std::pow(x, 2.0 / (x * x) + 1.0 - epsilon) / 2.0;
  }
  throw Error(ErrorCode::UnknownVariant, "unknown corollary variant");
}

inline double corollary_bound(std::uint64_t n, std::string_view variant, double epsilon) {
  return corollary_bound(n, parse_corollary_variant(variant), epsilon);
}

// ---------------------------------------------------------------------------
// Verdicts

/// One counterexample: the vectors involved, the scale, and the exact values
/// that make it a violation.
struct Witness {
  std::string kind;
  std::vector<RationalVector> vectors;
  Rational scale = 1;
  std::map<std::string, Rational> values;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ClaimVerdict {
  std::string claim_id;
  std::string domain_description;
  std::uint64_t checked_count = 0;
  std::uint64_t violation_count = 0;  // total found; `violations` keeps the first `cap`
  bool asserted = true;               // false for exploratory searches
  std::vector<Witness> violations;

  friend bool operator==(const ClaimVerdict&, const ClaimVerdict&) = default;
};

inline constexpr std::size_t kDefaultViolationCap = 100;

/// Search space guard: number of candidate vectors an exhaustive search may
/// enumerate.
inline constexpr std::uint64_t kDefaultSearchBudget = 20000;

namespace detail {

// Appends chunk verdict parts in chunk order, keeping the first `cap`
// witnesses overall.
inline void merge_parts(ClaimVerdict& into, std::vector<ClaimVerdict>& parts, std::size_t cap) {
  for (auto& part : parts) {
    into.checked_count += part.checked_count;
    into.violation_count += part.violation_count;
    for (auto& w : part.violations) {
      if (into.violations.size() >= cap) break;
      into.violations.push_back(std::move(w));
    }
  }
}

inline Rational sum_of_squares(const RationalVector& v) {
  Rational s = 0;
  for (const auto& c : v.coords()) s += c * c;
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Transference search

namespace detail {

inline std::vector<RationalVector> natural_box(std::uint64_t coord_limit, std::size_t dim, bool require_distinct,
                                               std::uint64_t budget) {
  checked_power(coord_limit, dim, std::max<std::uint64_t>(budget, 1) * 64);
  std::vector<RationalVector> out;
  for_each_box_point(dim, 1, static_cast<long long>(coord_limit), [&](const std::vector<long long>& p) {
    if (require_distinct) {
      auto sorted = p;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
    }
    out.push_back(integer_point(p));
  });
  if (out.size() > budget)
    throw Error(ErrorCode::BudgetExceeded, "search space of " + std::to_string(out.size()) +
                                               " vectors exceeds budget " + std::to_string(budget));
  return out;
}

}  // namespace detail

/// Checks "G(x) < G(y) iff |x| < |y|" at scale 1 over every ordered pair of
/// natural vectors in [1, coord_limit]^dim. Two witness kinds:
///   norm_less_gap_not_less   |x|^2 < |y|^2 but G^2(x) >= G^2(y)
///   gap_less_norm_not_less   G^2(x) < G^2(y) but |x|^2 >= |y|^2
/// Pairs are visited lexicographically; the verdict is not asserted, since a
/// violation here is a finding rather than a defect.
inline ClaimVerdict transference_search(std::uint64_t coord_limit, std::size_t dim, bool require_distinct,
                                        unsigned workers = 1, std::size_t cap = kDefaultViolationCap,
                                        std::uint64_t budget = kDefaultSearchBudget) {
  if (coord_limit < 1) throw Error(ErrorCode::InvalidArgument, "coord_limit must be >= 1");
  if (dim < 2) throw Error(ErrorCode::DimensionTooSmall, "transference search needs dim >= 2");
  const auto vectors = detail::natural_box(coord_limit, dim, require_distinct, budget);
  const Scale unit_scale(1);

  std::vector<Rational> norms, gaps;
  norms.reserve(vectors.size());
  gaps.reserve(vectors.size());
  for (const auto& v : vectors) {
    norms.push_back(v.norm_squared());
    gaps.push_back(gap_squared(v, unit_scale));
  }

  const std::size_t count = vectors.size();
  const auto ranges = split_rows(count, resolve_workers(workers), [](std::size_t) { return 1; });
  std::vector<ClaimVerdict> parts(ranges.size());
  run_chunks(ranges, [&](std::size_t c, RowRange r) {
    auto& part = parts[c];
    for (std::size_t i = r.begin; i < r.end; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        ++part.checked_count;
        if (i == j) continue;
        const char* kind = nullptr;
        if (norms[i] < norms[j] && gaps[i] >= gaps[j])
          kind = "norm_less_gap_not_less";
        else if (gaps[i] < gaps[j] && norms[i] >= norms[j])
          kind = "gap_less_norm_not_less";
        if (!kind) continue;
        ++part.violation_count;
        if (part.violations.size() < cap) {
          part.violations.push_back(Witness{kind,
                                            {vectors[i], vectors[j]},
                                            1,
                                            {{"gap_sq_x", gaps[i]},
                                             {"gap_sq_y", gaps[j]},
                                             {"norm_sq_x", norms[i]},
                                             {"norm_sq_y", norms[j]}}});
        }
      }
    }
  });

  ClaimVerdict verdict;
  verdict.claim_id = "transference";
  verdict.domain_description = "ordered pairs in [1," + std::to_string(coord_limit) + "]^" + std::to_string(dim) +
                               (require_distinct ? ", pairwise distinct coordinates" : "") + ", scale 1";
  verdict.asserted = false;
  detail::merge_parts(verdict, parts, cap);
  return verdict;
}

// ---------------------------------------------------------------------------
// Inequality and identity sweeps

namespace detail {

// Strictly increasing tuples of [1, coord_limit] with sizes 2..dim_max,
// ordered by size then lexicographically.
inline std::vector<std::vector<std::uint64_t>> increasing_tuples(std::uint64_t coord_limit, std::size_t dim_max,
                                                                 std::uint64_t budget) {
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t size = 2; size <= dim_max && size <= coord_limit; ++size) {
    std::vector<std::uint64_t> t(size);
    std::iota(t.begin(), t.end(), 1);
    while (true) {
      out.push_back(t);
      if (out.size() > budget) throw Error(ErrorCode::BudgetExceeded, "sweep domain exceeds budget");
      std::size_t i = size;
      while (i > 0 && t[i - 1] == coord_limit - (size - i)) --i;
      if (i == 0) break;
      ++t[i - 1];
      for (std::size_t j = i; j < size; ++j) t[j] = t[j - 1] + 1;
    }
  }
  return out;
}

inline std::vector<Scale> to_scales(const std::vector<Rational>& scales) {
  if (scales.empty()) throw Error(ErrorCode::InvalidArgument, "at least one scale required");
  std::vector<Scale> out;
  for (const auto& m : scales) out.emplace_back(m);
  return out;
}

inline std::string join_scales(const std::vector<Rational>& scales) {
  std::string s;
  for (std::size_t i = 0; i < scales.size(); ++i) s += (i ? "," : "") + format_rational(scales[i]);
  return s;
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultSweepBudget = 2'000'000;

/// Exact check of
///   mass_lower_bound <= mass <= mass_upper_bound
///   gap_sq_lower_bound <= gap_squared <= gap_sq_upper_bound
///   gap_squared == gap_squared_via_identity
/// over every set of distinct naturals <= coord_limit with 2..dim_max
/// elements and every scale. checked_count counts (vector, scale) pairs.
inline ClaimVerdict inequality_sweep(std::uint64_t coord_limit, std::size_t dim_max, const std::vector<Rational>& scales,
                                     unsigned workers = 1, std::size_t cap = kDefaultViolationCap,
                                     std::uint64_t budget = kDefaultSweepBudget) {
  if (dim_max < 2) throw Error(ErrorCode::DimensionTooSmall, "dim_max must be >= 2");
  const auto scale_list = detail::to_scales(scales);
  const auto tuples = detail::increasing_tuples(coord_limit, dim_max, budget);

  const auto ranges = split_rows(tuples.size(), resolve_workers(workers), [](std::size_t) { return 1; });
  std::vector<ClaimVerdict> parts(ranges.size());
  run_chunks(ranges, [&](std::size_t c, RowRange r) {
    auto& part = parts[c];
    for (std::size_t i = r.begin; i < r.end; ++i) {
      const NaturalVector nv(tuples[i]);
      const RationalVector v = nv.to_rational();
      for (const auto& s : scale_list) {
        ++part.checked_count;
        const Rational m = mass(v, s);
        const Rational g2 = gap_squared(v, s);
        const Rational g2_identity = gap_squared_via_identity(v, s);
        const Rational m_lo = mass_lower_bound(nv, s), m_hi = mass_upper_bound(nv, s);
        const Rational g_lo = gap_sq_lower_bound(nv, s), g_hi = gap_sq_upper_bound(nv, s);
        auto report = [&](const char* kind, const Rational& lhs, const Rational& rhs) {
          ++part.violation_count;
          if (part.violations.size() < cap)
            part.violations.push_back(Witness{kind, {v}, s.value(), {{"lhs", lhs}, {"rhs", rhs}}});
        };
        if (!(m_lo <= m)) report("mass_lower", m_lo, m);
        if (!(m <= m_hi)) report("mass_upper", m, m_hi);
        if (!(g_lo <= g2)) report("gap_lower", g_lo, g2);
        if (!(g2 <= g_hi)) report("gap_upper", g2, g_hi);
        if (g2 != g2_identity) report("identity", g2, g2_identity);
      }
    }
  });

  ClaimVerdict verdict;
  verdict.claim_id = "inequalities";
  verdict.domain_description = "distinct naturals <= " + std::to_string(coord_limit) + ", dim 2.." +
                               std::to_string(dim_max) + ", scales {" + detail::join_scales(scales) + "}";
  detail::merge_parts(verdict, parts, cap);
  return verdict;
}

/// gap_squared == gap_squared_via_identity for every vector in
/// [1, coord_limit]^dim (all orderings, repeats allowed) and every scale.
inline ClaimVerdict identity_sweep(std::uint64_t coord_limit, const std::vector<std::size_t>& dims,
                                   const std::vector<Rational>& scales, unsigned workers = 1,
                                   std::size_t cap = kDefaultViolationCap, std::uint64_t budget = kDefaultSweepBudget) {
  if (coord_limit < 1) throw Error(ErrorCode::InvalidArgument, "coord_limit must be >= 1");
  if (dims.empty()) throw Error(ErrorCode::InvalidArgument, "at least one dimension required");
  const auto scale_list = detail::to_scales(scales);
  std::vector<RationalVector> vectors;
  for (auto d : dims) {
    if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "identity sweep needs dim >= 2");
    auto box = detail::natural_box(coord_limit, d, false, budget);
    vectors.insert(vectors.end(), box.begin(), box.end());
  }

  const auto ranges = split_rows(vectors.size(), resolve_workers(workers), [](std::size_t) { return 1; });
  std::vector<ClaimVerdict> parts(ranges.size());
  run_chunks(ranges, [&](std::size_t c, RowRange r) {
    auto& part = parts[c];
    for (std::size_t i = r.begin; i < r.end; ++i) {
      for (const auto& s : scale_list) {
        ++part.checked_count;
        const Rational direct = gap_squared(vectors[i], s);
        const Rational expanded = gap_squared_via_identity(vectors[i], s);
        if (direct == expanded) continue;
        ++part.violation_count;
        if (part.violations.size() < cap)
          part.violations.push_back(Witness{"identity", {vectors[i]}, s.value(), {{"lhs", direct}, {"rhs", expanded}}});
      }
    }
  });

  ClaimVerdict verdict;
  verdict.claim_id = "identity";
  std::string dim_text;
  for (std::size_t i = 0; i < dims.size(); ++i) dim_text += (i ? "," : "") + std::to_string(dims[i]);
  verdict.domain_description = "[1," + std::to_string(coord_limit) + "]^d for d in {" + dim_text + "}, scales {" +
                               detail::join_scales(scales) + "}";
  detail::merge_parts(verdict, parts, cap);
  return verdict;
}

/// Random rational vector for the involution check: numerators in
/// [-50, 50] \ {0}, denominators in [1, 20], dim in [2, 6].
inline RationalVector random_rational_vector(std::mt19937_64& rng) {
  const std::size_t dim = 2 + static_cast<std::size_t>(draw_below(rng, 5));
  std::vector<Rational> coords;
  coords.reserve(dim);
  for (std::size_t t = 0; t < dim; ++t) {
    std::int64_t num = 0;
    while (num == 0) num = static_cast<std::int64_t>(draw_below(rng, 101)) - 50;
    const std::int64_t den = 1 + static_cast<std::int64_t>(draw_below(rng, 20));
    coords.push_back(make_rational(num, den));
  }
  return RationalVector(std::move(coords));
}

/// compress(compress(v, m), m) == v on `samples` seeded random rational
/// vectors; scale m = a/b with a in [b, 4b], b in [1, 6].
inline ClaimVerdict involution_check(std::uint64_t samples, std::uint64_t seed, std::size_t cap = kDefaultViolationCap) {
  std::mt19937_64 rng(seed);
  ClaimVerdict verdict;
  verdict.claim_id = "involution";
  verdict.domain_description =
      std::to_string(samples) + " random rational vectors, seed " + std::to_string(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const RationalVector v = random_rational_vector(rng);
    const std::int64_t b = 1 + static_cast<std::int64_t>(draw_below(rng, 6));
    const std::int64_t a = b + static_cast<std::int64_t>(draw_below(rng, static_cast<std::uint64_t>(3 * b + 1)));
    const Scale s(make_rational(a, b));
    ++verdict.checked_count;
    const RationalVector back = compress(compress(v, s), s);
    if (back == v) continue;
    ++verdict.violation_count;
    if (verdict.violations.size() < cap) verdict.violations.push_back(Witness{"involution", {v, back}, s.value(), {}});
  }
  return verdict;
}

/// 0 < H_x - (ln x + gamma) < 1/(2x) for x = 1..limit, with H_x exact and
/// the double approximation converted exactly to a rational.
inline ClaimVerdict harmonic_check(std::uint64_t limit, std::size_t cap = kDefaultViolationCap) {
  if (limit < 1) throw Error(ErrorCode::NonPositiveInput, "harmonic check needs limit >= 1");
  ClaimVerdict verdict;
  verdict.claim_id = "harmonic";
  verdict.domain_description = "x = 1.." + std::to_string(limit);
  HarmonicAccumulator h;
  for (std::uint64_t x = 1; x <= limit; ++x) {
    const Rational& exact = h.advance();
    const Rational approx(harmonic_approx(static_cast<long long>(x)));
    const Rational diff = exact - approx;
    const Rational upper(1, static_cast<unsigned long>(2 * x));
    ++verdict.checked_count;
    if (diff > 0 && diff < upper) continue;
    ++verdict.violation_count;
    if (verdict.violations.size() < cap)
      verdict.violations.push_back(Witness{"harmonic",
                                           {},
                                           1,
                                           {{"x", Rational(static_cast<unsigned long>(x))},
                                            {"difference", diff},
                                            {"upper", upper}}});
  }
  return verdict;
}

/// Recomputes a witness from its vectors alone, along a different route than
/// the search used, and reports whether it is a genuine violation.
inline bool reverify(const ClaimVerdict& verdict, const Witness& w) {
  const std::string& id = verdict.claim_id;
  if (id == "transference") {
    if (w.vectors.size() != 2) return false;
    const Scale s(1);
    const Rational nx = detail::sum_of_squares(w.vectors[0]);
    const Rational ny = detail::sum_of_squares(w.vectors[1]);
    const Rational gx = gap_squared_via_identity(w.vectors[0], s);
    const Rational gy = gap_squared_via_identity(w.vectors[1], s);
    if (w.kind == "norm_less_gap_not_less") return nx < ny && gx >= gy;
    if (w.kind == "gap_less_norm_not_less") return gx < gy && nx >= ny;
    return false;
  }
  if (id == "inequalities" || id == "identity") {
    if (w.vectors.size() != 1) return false;
    const RationalVector& v = w.vectors[0];
    const Scale s(w.scale);
    if (w.kind == "identity") return gap_squared(v, s) != gap_squared_via_identity(v, s);
    std::vector<std::uint64_t> naturals;
    for (const auto& c : v.coords()) {
      if (c.get_den() != 1 || c < 1) return false;
      naturals.push_back(c.get_num().get_ui());
    }
    const NaturalVector nv(naturals);
    // mass as the coordinate sum of the compressed vector
    const RationalVector compressed = compress(v, s);
    Rational m = 0;
    for (const auto& c : compressed.coords()) m += c;
    const Rational g2 = gap_squared_via_identity(v, s);
    if (w.kind == "mass_lower") return mass_lower_bound(nv, s) > m;
    if (w.kind == "mass_upper") return m > mass_upper_bound(nv, s);
    if (w.kind == "gap_lower") return gap_sq_lower_bound(nv, s) > g2;
    if (w.kind == "gap_upper") return g2 > gap_sq_upper_bound(nv, s);
    return false;
  }
  if (id == "involution") {
    if (w.vectors.empty()) return false;
    const Scale s(w.scale);
    return !(compress(compress(w.vectors[0], s), s) == w.vectors[0]);
  }
  if (id == "harmonic") {
    auto it = w.values.find("x");
    if (it == w.values.end() || it->second.get_den() != 1 || it->second < 1) return false;
    const long long x = it->second.get_num().get_si();
    const Rational diff = harmonic_number(x) - Rational(harmonic_approx(x));
    return !(diff > 0 && diff < Rational(1, static_cast<unsigned long>(2 * x)));
  }
  return false;
}

// ---------------------------------------------------------------------------
// Bound report

enum class ConfigKind { Grid, Random, Concentrated };

inline std::string_view to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::Grid: return "grid";
    case ConfigKind::Random: return "random";
    case ConfigKind::Concentrated: return "concentrated";
  }
  return "grid";
}

inline ConfigKind parse_config_kind(std::string_view name) {
  if (name == "grid") return ConfigKind::Grid;
  if (name == "random") return ConfigKind::Random;
  if (name == "concentrated") return ConfigKind::Concentrated;
  throw Error(ErrorCode::InvalidArgument, "unknown configuration kind '" + std::string(name) + "'");
}

/// Recipe for one point set in a sweep.
struct PointSetDescriptor {
  ConfigKind kind = ConfigKind::Grid;
  std::uint64_t side = 2;         // grid
  std::size_t k = 2;
  std::uint64_t n = 2;            // random, concentrated
  std::uint64_t coord_bound = 10; // random
  Rational radius = 1;            // concentrated
  std::uint64_t seed = 0;

  PointSet materialize() const {
    switch (kind) {
      case ConfigKind::Grid: return generate_grid(side, k);
      case ConfigKind::Random: return generate_random(n, k, coord_bound, seed);
      case ConfigKind::Concentrated: return generate_concentrated(n, k, radius, seed);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown configuration kind");
  }
};

struct ReportRow {
  std::string config_label;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t measured_distinct = 0;
  std::uint64_t measured_bipartite_distinct = 0;
  std::uint64_t measured_unit_pairs = 0;
  double bound_distinct = 0;
  double bound_unit = 0;
  double ratio_distinct = 0;
  double ratio_unit = 0;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct BoundReport {
  std::string experiment;
  std::map<std::string, std::string> params;
  std::vector<ReportRow> rows;
  bool trend_ok = false;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Rounds to `digits` significant decimal digits; report reals are stored
/// this way so that the serialized text is the whole value.
inline double round_significant(double value, int digits = 12) {
  if (value == 0 || !std::isfinite(value)) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

/// Ratios measured/bound must be positive and non-decreasing as n grows.
inline bool ratios_non_decreasing(const std::vector<ReportRow>& rows) {
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows[a].n < rows[b].n; });
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!(rows[order[i]].ratio_distinct > 0)) return false;
    if (i > 0 && rows[order[i]].ratio_distinct < rows[order[i - 1]].ratio_distinct) return false;
  }
  return true;
}

/// Censuses every configuration and sets its counts against the bound
/// formulas evaluated at the configuration's (n, k), with epsilon and
/// constant taken from `params`.
inline BoundReport bound_report(const std::vector<PointSetDescriptor>& sweep, const BoundParams& params,
                                unsigned workers = 1, std::string experiment = "bound_report") {
  if (sweep.empty()) throw Error(ErrorCode::EmptyInput, "bound report needs a nonempty sweep");
  BoundReport report;
  report.experiment = std::move(experiment);
  for (const auto& d : sweep) {
    const PointSet ps = d.materialize();
    BoundParams p = params;
    p.n = ps.size();
    p.k = ps.dim();
    p.validate();
    const CensusResult c = census(ps, workers);

    ReportRow row;
    row.config_label = ps.label();
    row.n = c.n_points;
    row.k = ps.dim();
    row.measured_distinct = c.distinct_count;
    row.measured_bipartite_distinct = bipartite_distinct_distance_count(ps, ps, workers);
    row.measured_unit_pairs = c.unit_pair_count;
    row.bound_distinct = round_significant(distinct_distance_bound(p));
    row.bound_unit = round_significant(unit_distance_bound(p));
    row.ratio_distinct = round_significant(static_cast<double>(row.measured_distinct) / row.bound_distinct);
    row.ratio_unit = round_significant(static_cast<double>(row.measured_unit_pairs) / row.bound_unit);
    report.rows.push_back(std::move(row));
  }
  report.trend_ok = ratios_non_decreasing(report.rows);
  return report;
}

}  // namespace erdos
