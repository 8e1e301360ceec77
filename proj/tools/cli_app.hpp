#pragma once

#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "erdos/erdos.hpp"

namespace erdos::cli {

enum ExitCode : int { kOk = 0, kViolations = 1, kInputError = 2 };

struct ExperimentConfig {
  std::string command;
  std::optional<std::string> input_path;
  std::optional<std::string> input2_path;
  std::optional<std::string> output_path;

  std::string point;  // compress / mass / gap
  std::string m = "1";

  // gen / report
  std::string kind = "grid";
  std::size_t k = 2;
  std::uint64_t n = 2;
  std::uint64_t side = 2;
  std::vector<std::uint64_t> sides;
  std::vector<std::uint64_t> ns;
  std::uint64_t coord_bound = 10;
  std::string radius = "2";
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  double constant = 1.0;

  // verify
  std::string suite = "inequalities";
  std::uint64_t coord_limit = 3;
  std::size_t dim = 3;
  std::size_t dim_max = 5;
  std::vector<std::string> scales{"1", "2", "3"};
  std::vector<std::size_t> dims{2, 3, 4};
  std::uint64_t samples = 1000;
  std::uint64_t limit = 100000;
  bool require_distinct = false;
  std::size_t cap = kDefaultViolationCap;

  unsigned workers = 0;  // 0: ERDOS_LAB_WORKERS or 1
};

namespace detail {

inline RationalVector parse_point(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::InvalidArgument, "--point is required");
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    coords.push_back(parse_rational(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return RationalVector(std::move(coords));
}

inline std::vector<Rational> parse_scales(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  for (const auto& t : texts) out.push_back(parse_rational(t));
  return out;
}

inline void emit(const Json& j, const ExperimentConfig& config, std::ostream& out) {
  const std::string text = canonical_dump(j);
  out << text;
  if (config.output_path) write_text_file(*config.output_path, text);
}

inline std::map<std::string, std::string> echo_params(const ExperimentConfig& c, const std::vector<std::uint64_t>& sizes) {
  auto real = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
  };
  std::string size_text;
  for (std::size_t i = 0; i < sizes.size(); ++i) size_text += (i ? "," : "") + std::to_string(sizes[i]);
  std::map<std::string, std::string> p{{"command", c.command}, {"constant", real(c.constant)}, {"epsilon", real(c.epsilon)},
                                       {"k", std::to_string(c.k)}, {"kind", c.kind}, {"sizes", size_text}};
  if (c.kind == "random") {
    p["coord_bound"] = std::to_string(c.coord_bound);
    p["seed"] = std::to_string(c.seed);
  } else if (c.kind == "concentrated") {
    p["radius"] = format_rational(parse_rational(c.radius));
    p["seed"] = std::to_string(c.seed);
  }
  return p;
}

inline int run_compress_family(const ExperimentConfig& c, std::ostream& out) {
  const RationalVector v = parse_point(c.point);
  const Scale s(parse_rational(c.m));
  if (c.command == "compress") {
    out << compress(v, s).to_string() << '\n';
  } else if (c.command == "mass") {
    out << format_rational(mass(v, s)) << '\n';
  } else {
    const Rational g2 = gap_squared(v, s);
    Json j{{"gap", round_significant(sqrt_to_double(g2))},
           {"gap_squared", format_rational(g2)},
           {"gap_squared_via_identity", format_rational(gap_squared_via_identity(v, s))},
           {"m", format_rational(s.value())},
           {"point", erdos::detail::vector_to_json(v)}};
    emit(j, c, out);
  }
  return kOk;
}

inline int run_census(const ExperimentConfig& c, std::ostream& out) {
  if (!c.input_path) throw Error(ErrorCode::InvalidArgument, "census needs --in");
  const PointSet ps = load_point_set(*c.input_path);
  const unsigned workers = resolve_workers(c.workers);
  Json j = to_json(census(ps, workers));
  j["k"] = ps.dim();
  j["label"] = ps.label();
  if (c.input2_path) {
    const PointSet other = load_point_set(*c.input2_path);
    j["bipartite_distinct"] = bipartite_distinct_distance_count(ps, other, workers);
  }
  emit(j, c, out);
  return kOk;
}

inline int run_gen(const ExperimentConfig& c, std::ostream& out) {
  PointSetDescriptor d;
  d.kind = parse_config_kind(c.kind);
  d.side = c.side;
  d.k = c.k;
  d.n = c.n;
  d.coord_bound = c.coord_bound;
  d.radius = parse_rational(c.radius);
  d.seed = c.seed;
  const PointSet ps = d.materialize();
  if (c.output_path)
    save_point_set(ps, *c.output_path);
  else
    write_point_set(out, ps);
  return kOk;
}

inline int run_verify(const ExperimentConfig& c, std::ostream& out) {
  const unsigned workers = resolve_workers(c.workers);
  ClaimVerdict v;
  if (c.suite == "inequalities") {
    v = inequality_sweep(c.coord_limit, c.dim_max, parse_scales(c.scales), workers, c.cap);
  } else if (c.suite == "identity") {
    v = identity_sweep(c.coord_limit, c.dims, parse_scales(c.scales), workers, c.cap);
  } else if (c.suite == "involution") {
    v = involution_check(c.samples, c.seed, c.cap);
  } else if (c.suite == "harmonic") {
    v = harmonic_check(c.limit, c.cap);
  } else if (c.suite == "transference") {
    v = transference_search(c.coord_limit, c.dim, c.require_distinct, workers, c.cap);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + c.suite + "'");
  }
  emit(to_json(v), c, out);
  return v.asserted && v.violation_count > 0 ? kViolations : kOk;
}

inline int run_report(const ExperimentConfig& c, std::ostream& out) {
  const ConfigKind kind = parse_config_kind(c.kind);
  const auto& sizes = kind == ConfigKind::Grid ? c.sides : c.ns;
  if (sizes.empty())
    throw Error(ErrorCode::EmptyInput, kind == ConfigKind::Grid ? "report needs --sides" : "report needs --ns");
  std::vector<PointSetDescriptor> sweep;
  for (auto size : sizes) {
    PointSetDescriptor d;
    d.kind = kind;
    d.k = c.k;
    d.side = size;
    d.n = size;
    d.coord_bound = c.coord_bound;
    d.radius = parse_rational(c.radius);
    d.seed = c.seed;
    sweep.push_back(d);
  }
  BoundParams p;
  p.k = c.k;
  p.epsilon = c.epsilon;
  p.constant = c.constant;
  p.validate();
  BoundReport r = bound_report(sweep, p, resolve_workers(c.workers), std::string(to_string(kind)) + "_sweep");
  r.params = echo_params(c, sizes);
  out << canonical_dump(to_json(r));
  if (c.output_path) write_report(r, *c.output_path);
  return kOk;
}

}  // namespace detail

/// Dispatches a validated config. Library errors become exit code 2 with a
/// one-line diagnostic on `err`.
inline int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "compress" || config.command == "mass" || config.command == "gap")
      return detail::run_compress_family(config, out);
    if (config.command == "census") return detail::run_census(config, out);
    if (config.command == "gen") return detail::run_gen(config, out);
    if (config.command == "verify") return detail::run_verify(config, out);
    if (config.command == "report") return detail::run_report(config, out);
    throw Error(ErrorCode::InvalidArgument, "unknown command '" + config.command + "'");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

/// Builds the CLI11 parser bound to `config`.
inline void configure(CLI::App& app, ExperimentConfig& c) {
  app.require_subcommand(1);
  app.add_option("--workers", c.workers, "Worker threads (default: $ERDOS_LAB_WORKERS or 1)")
      ->check(CLI::Range(1u, 1024u));

  auto point_opts = [&](CLI::App* sub) {
    sub->add_option("--point", c.point, "Comma-separated coordinates, integers or p/q")->required();
    sub->add_option("--m", c.m, "Scale m >= 1 (integer or p/q)");
  };
  point_opts(app.add_subcommand("compress", "Print the compressed vector"));
  point_opts(app.add_subcommand("mass", "Print the mass of the compression"));
  auto* gap = app.add_subcommand("gap", "Print the gap and its exact square");
  point_opts(gap);
  gap->add_option("--out", c.output_path, "Also write the JSON here");

  auto* census = app.add_subcommand("census", "Distinct and unit distances of a point-set CSV");
  census->add_option("--in", c.input_path, "Point-set CSV")->required();
  census->add_option("--in2", c.input2_path, "Second set for the bipartite distinct count");
  census->add_option("--out", c.output_path, "Also write the JSON here");

  auto* gen = app.add_subcommand("gen", "Generate a point set as CSV");
  gen->add_option("--kind", c.kind, "grid | random | concentrated")
      ->check(CLI::IsMember({"grid", "random", "concentrated"}));
  gen->add_option("--side", c.side, "Grid side")->check(CLI::PositiveNumber);
  gen->add_option("--k", c.k, "Dimension")->check(CLI::PositiveNumber);
  gen->add_option("--n", c.n, "Number of points")->check(CLI::PositiveNumber);
  gen->add_option("--coord-bound", c.coord_bound, "Random coordinates in [0, bound]");
  gen->add_option("--radius", c.radius, "Norm cap for concentrated sets (integer or p/q)");
  gen->add_option("--seed", c.seed, "Generator seed");
  gen->add_option("--out", c.output_path, "Output CSV (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Run a claim suite; exit 1 on asserted violations");
  verify->add_option("--suite", c.suite, "inequalities | identity | involution | harmonic | transference")
      ->check(CLI::IsMember({"inequalities", "identity", "involution", "harmonic", "transference"}));
  verify->add_option("--coord-limit", c.coord_limit, "Largest coordinate enumerated")->check(CLI::PositiveNumber);
  verify->add_option("--dim", c.dim, "Dimension (transference)")->check(CLI::Range(2u, 16u));
  verify->add_option("--dim-max", c.dim_max, "Largest dimension (inequalities)")->check(CLI::Range(2u, 16u));
  verify->add_option("--dims", c.dims, "Dimensions (identity)")->delimiter(',');
  verify->add_option("--scales", c.scales, "Scales, comma-separated")->delimiter(',');
  verify->add_option("--samples", c.samples, "Random vectors (involution)");
  verify->add_option("--seed", c.seed, "Seed (involution)");
  verify->add_option("--limit", c.limit, "Largest x (harmonic)")->check(CLI::PositiveNumber);
  verify->add_flag("--require-distinct", c.require_distinct, "Only pairwise-distinct coordinates (transference)");
  verify->add_option("--cap", c.cap, "Maximum witnesses kept");
  verify->add_option("--out", c.output_path, "Also write the verdict JSON here");

  auto* report = app.add_subcommand("report", "Measured counts against the bound formulas");
  report->add_option("--kind", c.kind, "grid | random | concentrated")
      ->check(CLI::IsMember({"grid", "random", "concentrated"}));
  report->add_option("--sides", c.sides, "Grid sides, comma-separated")->delimiter(',');
  report->add_option("--ns", c.ns, "Point counts, comma-separated (random, concentrated)")->delimiter(',');
  report->add_option("--k", c.k, "Dimension")->check(CLI::Range(2u, 12u));
  report->add_option("--coord-bound", c.coord_bound, "Random coordinates in [0, bound]");
  report->add_option("--radius", c.radius, "Norm cap for concentrated sets");
  report->add_option("--seed", c.seed, "Generator seed");
  report->add_option("--epsilon", c.epsilon, "Exponent slack, >= 0")->check(CLI::NonNegativeNumber);
  report->add_option("--constant", c.constant, "Implied constant, > 0")->check(CLI::PositiveNumber);
  report->add_option("--out", c.output_path, "Report JSON path; rows CSV is written beside it");
}

/// argv entry point: parse, validate, run. Parse failures exit 2.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ExperimentConfig config;
  CLI::App app{"Exact compression calculus and distance-census experiments", "erdos-lab"};
  configure(app, config);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  for (const auto* sub : app.get_subcommands()) config.command = sub->get_name();
  return run(config, out, err);
}

}  // namespace erdos::cli
