// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "erdos/erdos.hpp"

using namespace erdos;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %-34s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string counts(const ClaimVerdict& v) {
  return "checked=" + std::to_string(v.checked_count) + " violations=" + std::to_string(v.violation_count);
}

std::size_t count_kind(const ClaimVerdict& v, const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& w : v.violations)
    if (w.kind.rfind(prefix, 0) == 0) ++n;
  return n;
}

const std::vector<Rational> kScales{Rational(1), Rational(2), Rational(3)};

}  // namespace

int main() {
  criterion(1, "gap identity", [] {
    const auto t = std::chrono::steady_clock::now();
    const ClaimVerdict v = identity_sweep(8, {2, 3, 4}, kScales);
    const double secs = seconds_since(t);
    const bool ok = v.violation_count == 0 && v.checked_count == (64 + 512 + 4096) * 3 && secs < 60.0;
    return Outcome{ok, counts(v)};
  });

  criterion(2, "involution", [] {
    const ClaimVerdict v = involution_check(1000, 2026);
    return Outcome{v.violation_count == 0 && v.checked_count == 1000, counts(v)};
  });

  // One sweep feeds criteria 3 and 4; every kind of violation is counted.
  const ClaimVerdict sweep = inequality_sweep(12, 5, kScales, 1, 1'000'000);

  criterion(3, "mass bounds + saturation", [&] {
    std::size_t saturation_failures = 0, saturation_checked = 0;
    for (std::uint64_t start = 1; start <= 12; ++start) {
      for (std::size_t n = 2; n <= 5; ++n) {
        std::vector<std::uint64_t> run;
        for (std::size_t i = 0; i < n; ++i) run.push_back(start + i);
        const NaturalVector nv(run);
        for (const auto& m : kScales) {
          const Scale s(m);
          const Rational exact = mass(nv.to_rational(), s);
          ++saturation_checked;
          if (mass_upper_bound(nv, s) != exact || mass_lower_bound(nv, s) != exact) ++saturation_failures;
        }
      }
    }
    const std::size_t mass_violations = count_kind(sweep, "mass_");
    const bool ok = sweep.checked_count == (66 + 220 + 495 + 792) * 3 && mass_violations == 0 &&
                    saturation_failures == 0 && sweep.violation_count == sweep.violations.size();
    return Outcome{ok, "checked=" + std::to_string(sweep.checked_count) + " mass_violations=" +
                           std::to_string(mass_violations) + " saturation_checked=" +
                           std::to_string(saturation_checked) + " saturation_failures=" +
                           std::to_string(saturation_failures)};
  });

  criterion(4, "gap bounds", [&] {
    const std::size_t gap_violations = count_kind(sweep, "gap_");
    const std::size_t identity_violations = count_kind(sweep, "identity");
    return Outcome{gap_violations == 0 && identity_violations == 0 && sweep.violation_count == sweep.violations.size(),
                   "checked=" + std::to_string(sweep.checked_count) + " gap_violations=" +
                       std::to_string(gap_violations) + " identity_violations=" + std::to_string(identity_violations)};
  });

  criterion(5, "harmonic estimate", [] {
    const auto t = std::chrono::steady_clock::now();
    const ClaimVerdict v = harmonic_check(100000);
    const double secs = seconds_since(t);
    return Outcome{v.violation_count == 0 && v.checked_count == 100000 && secs < 10.0, counts(v)};
  });

  criterion(6, "census fixtures", [] {
    bool ok = true;
    const CensusResult g2 = census(generate_grid(2, 2));
    const CensusResult g3 = census(generate_grid(3, 2));
    ok &= g2.distinct_count == 2 && g2.unit_pair_count == 4;
    ok &= g3.distinct_count == 5 && g3.unit_pair_count == 12;
    std::size_t formula_failures = 0;
    for (std::uint64_t m = 2; m <= 10; ++m) {
      const PointSet g = generate_grid(m, 2);
      const std::size_t expected = 2 * m * (m - 1);
      if (unit_pair_count(g) != expected || accelerated_unit_pair_count(g) != expected) ++formula_failures;
    }
    ok &= formula_failures == 0;
    return Outcome{ok, "2x2=(" + std::to_string(g2.distinct_count) + "," + std::to_string(g2.unit_pair_count) +
                           ") 3x3=(" + std::to_string(g3.distinct_count) + "," +
                           std::to_string(g3.unit_pair_count) + ") grid-formula failures=" +
                           std::to_string(formula_failures)};
  });

  criterion(7, "accelerated == brute force", [] {
    std::mt19937_64 rng(7);
    std::size_t mismatches = 0, total_units = 0;
    for (int set = 0; set < 200; ++set) {
      const std::size_t n = 2 + draw_below(rng, 511);
      const std::size_t k = 2 + set % 2;
      PointSet ps;
      if (set % 4 == 3) {
        // half-integer and fifth coordinates so diagonal unit pairs like (3/5, 4/5) appear
        std::vector<RationalVector> pts;
        const std::int64_t dens[] = {1, 2, 5};
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<Rational> c;
          const std::int64_t den = dens[draw_below(rng, 3)];
          for (std::size_t t = 0; t < k; ++t)
            c.push_back(make_rational(static_cast<std::int64_t>(draw_below(rng, static_cast<std::uint64_t>(6 * den + 1))), den));
          pts.emplace_back(std::move(c));
        }
        ps = PointSet(k, std::move(pts));
      } else {
        ps = generate_random(n, k, 3 + draw_below(rng, 10), rng());
      }
      const std::size_t brute = unit_pair_count(ps);
      total_units += brute;
      if (accelerated_unit_pair_count(ps) != brute) ++mismatches;
    }
    return Outcome{mismatches == 0 && total_units > 0,
                   "sets=200 mismatches=" + std::to_string(mismatches) + " unit_pairs_seen=" + std::to_string(total_units)};
  });

  criterion(8, "transference search", [] {
    const ClaimVerdict v3 = transference_search(3, 3, false);
    const auto x = RationalVector::from_integers({1, 1, 3});
    const auto y = RationalVector::from_integers({2, 2, 2});
    bool found = false, reverified = true;
    for (const auto& w : v3.violations) {
      reverified &= reverify(v3, w);
      if (w.vectors[0] == x && w.vectors[1] == y && w.values.at("gap_sq_x") == Rational(64, 9) &&
          w.values.at("gap_sq_y") == Rational(27, 4))
        found = true;
    }
    const ClaimVerdict v2 = transference_search(2, 2, false);
    return Outcome{found && reverified && v2.violation_count == 0,
                   "3^3 violations=" + std::to_string(v3.violation_count) + " contains (1,1,3)/(2,2,2)=" +
                       (found ? "yes" : "no") + " 2^2 violations=" + std::to_string(v2.violation_count)};
  });

  criterion(9, "trend report", [] {
    const auto t = std::chrono::steady_clock::now();
    std::vector<PointSetDescriptor> descriptors;
    for (std::uint64_t side : {4u, 8u, 16u, 32u}) {
      PointSetDescriptor d;
      d.side = side;
      descriptors.push_back(d);
    }
    const BoundReport r = bound_report(descriptors, BoundParams{2, 2, 0.2, 1.0});
    const double secs = seconds_since(t);
    std::string ratios;
    bool positive = true, non_decreasing = true;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%s%.4f", i ? "," : "", r.rows[i].ratio_distinct);
      ratios += buf;
      positive &= r.rows[i].ratio_distinct > 0;
      if (i) non_decreasing &= r.rows[i].ratio_distinct >= r.rows[i - 1].ratio_distinct;
    }
    return Outcome{positive && non_decreasing && r.trend_ok && secs < 120.0, "ratios=" + ratios};
  });

  criterion(10, "determinism + round-trip", [] {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "erdos_acceptance";
    fs::create_directories(dir);
    std::vector<PointSetDescriptor> descriptors(3);
    descriptors[0].side = 5;
    descriptors[1].kind = ConfigKind::Random;
    descriptors[1].n = 200;
    descriptors[1].seed = 9;
    descriptors[2].kind = ConfigKind::Concentrated;
    descriptors[2].n = 40;
    descriptors[2].radius = Rational(6);
    descriptors[2].seed = 9;
    const BoundParams p{2, 2, 0.1, 1.0};

    const BoundReport serial = bound_report(descriptors, p, 1);
    const BoundReport parallel = bound_report(descriptors, p, 4);
    write_report(serial, dir / "a.json");
    write_report(bound_report(descriptors, p, 1), dir / "b.json");
    write_report(parallel, dir / "c.json");
    bool ok = read_text_file(dir / "a.json") == read_text_file(dir / "b.json");
    ok &= read_text_file(dir / "a.csv") == read_text_file(dir / "b.csv");
    ok &= read_text_file(dir / "a.json") == read_text_file(dir / "c.json");
    ok &= read_report(dir / "a.json") == serial;

    std::size_t point_set_failures = 0;
    for (const auto& d : descriptors) {
      const PointSet ps = d.materialize();
      save_point_set(ps, (dir / "points.csv").string());
      if (!(load_point_set((dir / "points.csv").string()) == ps)) ++point_set_failures;
      if (!(d.materialize() == ps)) ++point_set_failures;
      if (!(census(ps, 1) == census(ps, 3))) ++point_set_failures;
    }
    ok &= point_set_failures == 0;
    ok &= canonical_dump(to_json(transference_search(4, 3, false, 1))) ==
          canonical_dump(to_json(transference_search(4, 3, false, 4)));
    ok &= inequality_sweep(10, 4, kScales, 1) == inequality_sweep(10, 4, kScales, 3);
    return Outcome{ok, "point_set_failures=" + std::to_string(point_set_failures)};
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "OK", failures);
  return failures == 0 ? 0 : 1;
}
