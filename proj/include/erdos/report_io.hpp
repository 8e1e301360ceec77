#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "erdos/census.hpp"
#include "erdos/claims.hpp"
#include "erdos/error.hpp"
#include "erdos/rational.hpp"

namespace erdos {

// Canonical JSON: object keys sorted (nlohmann::json's default std::map),
// two-space indent, trailing newline. Exact values are "p/q" strings;
// only bound and ratio fields are JSON numbers.

using Json = nlohmann::json;

namespace detail {

inline Json vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(format_rational(c));
  return out;
}

inline RationalVector vector_from_json(const Json& j) {
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(parse_rational(c.get<std::string>()));
  return RationalVector(std::move(coords));
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace detail

inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json to_json(const CensusResult& c) {
  return Json{{"distinct", c.distinct_count},
              {"duplicate_pairs", c.duplicate_pair_count},
              {"n_points", c.n_points},
              {"pairs", c.pair_count},
              {"unit_pairs", c.unit_pair_count}};
}

inline CensusResult census_from_json(const Json& j) {
  CensusResult c;
  c.distinct_count = detail::field<std::size_t>(j, "distinct");
  c.duplicate_pair_count = detail::field<std::size_t>(j, "duplicate_pairs");
  c.n_points = detail::field<std::size_t>(j, "n_points");
  c.pair_count = detail::field<std::size_t>(j, "pairs");
  c.unit_pair_count = detail::field<std::size_t>(j, "unit_pairs");
  return c;
}

inline Json to_json(const Witness& w) {
  Json values = Json::object();
  for (const auto& [name, value] : w.values) values[name] = format_rational(value);
  Json vectors = Json::array();
  for (const auto& v : w.vectors) vectors.push_back(detail::vector_to_json(v));
  return Json{{"kind", w.kind}, {"scale", format_rational(w.scale)}, {"values", values}, {"vectors", vectors}};
}

inline Witness witness_from_json(const Json& j) {
  Witness w;
  w.kind = detail::field<std::string>(j, "kind");
  w.scale = parse_rational(detail::field<std::string>(j, "scale"));
  const Json values = detail::field<Json>(j, "values");
  for (const auto& [name, value] : values.items()) w.values[name] = parse_rational(value.get<std::string>());
  const Json vectors = detail::field<Json>(j, "vectors");
  for (const auto& v : vectors) w.vectors.push_back(detail::vector_from_json(v));
  return w;
}

inline Json to_json(const ClaimVerdict& v) {
  Json violations = Json::array();
  for (const auto& w : v.violations) violations.push_back(to_json(w));
  return Json{{"asserted", v.asserted},
              {"checked_count", v.checked_count},
              {"claim_id", v.claim_id},
              {"domain", v.domain_description},
              {"violation_count", v.violation_count},
              {"violations", violations}};
}

inline ClaimVerdict verdict_from_json(const Json& j) {
  ClaimVerdict v;
  v.asserted = detail::field<bool>(j, "asserted");
  v.checked_count = detail::field<std::uint64_t>(j, "checked_count");
  v.claim_id = detail::field<std::string>(j, "claim_id");
  v.domain_description = detail::field<std::string>(j, "domain");
  v.violation_count = detail::field<std::uint64_t>(j, "violation_count");
  const Json violations = detail::field<Json>(j, "violations");
  for (const auto& w : violations) v.violations.push_back(witness_from_json(w));
  return v;
}

inline Json to_json(const ReportRow& r) {
  return Json{{"bound_distinct", r.bound_distinct},
              {"bound_unit", r.bound_unit},
              {"config_label", r.config_label},
              {"k", r.k},
              {"measured_bipartite_distinct", r.measured_bipartite_distinct},
              {"measured_distinct", r.measured_distinct},
              {"measured_unit_pairs", r.measured_unit_pairs},
              {"n", r.n},
              {"ratio_distinct", r.ratio_distinct},
              {"ratio_unit", r.ratio_unit}};
}

inline ReportRow row_from_json(const Json& j) {
  ReportRow r;
  r.bound_distinct = detail::field<double>(j, "bound_distinct");
  r.bound_unit = detail::field<double>(j, "bound_unit");
  r.config_label = detail::field<std::string>(j, "config_label");
  r.k = detail::field<std::uint64_t>(j, "k");
  r.measured_bipartite_distinct = detail::field<std::uint64_t>(j, "measured_bipartite_distinct");
  r.measured_distinct = detail::field<std::uint64_t>(j, "measured_distinct");
  r.measured_unit_pairs = detail::field<std::uint64_t>(j, "measured_unit_pairs");
  r.n = detail::field<std::uint64_t>(j, "n");
  r.ratio_distinct = detail::field<double>(j, "ratio_distinct");
  r.ratio_unit = detail::field<double>(j, "ratio_unit");
  return r;
}

inline Json to_json(const BoundReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(to_json(row));
  return Json{{"experiment", r.experiment}, {"params", r.params}, {"rows", rows}, {"trend_ok", r.trend_ok}};
}

inline BoundReport report_from_json(const Json& j) {
  BoundReport r;
  r.experiment = detail::field<std::string>(j, "experiment");
  r.params = detail::field<std::map<std::string, std::string>>(j, "params");
  const Json rows = detail::field<Json>(j, "rows");
  for (const auto& row : rows) r.rows.push_back(row_from_json(row));
  r.trend_ok = detail::field<bool>(j, "trend_ok");
  return r;
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

/// Plot-ready CSV of report rows; reals printed with 12 significant digits.
inline std::string report_rows_csv(const BoundReport& r) {
  std::ostringstream os;
  os << "config_label,n,k,measured_distinct,measured_bipartite_distinct,measured_unit_pairs,"
        "bound_distinct,bound_unit,ratio_distinct,ratio_unit\n";
  auto real = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
  };
  for (const auto& row : r.rows) {
    os << '"' << row.config_label << '"' << ',' << row.n << ',' << row.k << ',' << row.measured_distinct << ','
       << row.measured_bipartite_distinct << ',' << row.measured_unit_pairs << ',' << real(row.bound_distinct) << ','
       << real(row.bound_unit) << ',' << real(row.ratio_distinct) << ',' << real(row.ratio_unit) << '\n';
  }
  return os.str();
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out << text;
  out.close();
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path.string() + "'");
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// The CSV lives next to the JSON with the extension replaced by ".csv".
inline std::filesystem::path sibling_csv_path(const std::filesystem::path& json_path) {
  auto p = json_path;
  p.replace_extension(".csv");
  if (p == json_path) p += ".csv";
  return p;
}

/// Writes the canonical JSON to `path` and the rows CSV beside it.
inline void write_report(const BoundReport& r, const std::filesystem::path& path) {
  write_text_file(path, canonical_dump(to_json(r)));
  write_text_file(sibling_csv_path(path), report_rows_csv(r));
}

inline BoundReport read_report(const std::filesystem::path& path) {
  return report_from_json(parse_json(read_text_file(path)));
}

}  // namespace erdos
