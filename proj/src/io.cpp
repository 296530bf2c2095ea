#include "quiverdt/io.hpp"

#include <sstream>

namespace quiverdt {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json series_to_json(const TruncatedSeries& s) {
  ordered_json records = ordered_json::array();
  for (const auto& [d, c] : s.coefficients()) {
    ordered_json rec;
    rec["exponents"] = d.as_vector();
    rec["coefficient"] = rational_to_string(c);
    records.push_back(std::move(rec));
  }
  return records;
}

std::string series_to_tsv(const TruncatedSeries& s) {
  std::ostringstream os;
  for (const auto& [d, c] : s.coefficients()) {
    for (int i = 0; i < d.rank(); ++i) os << (i ? "," : "") << d[i];
    os << "\t" << rational_to_string(c) << "\n";
  }
  return os.str();
}

ordered_json quiver_to_json(const Quiver& q) {
  ordered_json j;
  j["vertices"] = q.vertex_names();
  j["arrow_counts"] = q.arrow_matrix();
  return j;
}

Quiver quiver_from_json(const json& j) {
  if (!j.contains("vertices") || !j.contains("arrow_counts"))
    throw std::invalid_argument(
        "quiver JSON needs \"vertices\" and \"arrow_counts\"");
  auto vertices = j.at("vertices").get<std::vector<std::string>>();
  auto arrows = j.at("arrow_counts").get<std::vector<std::vector<long>>>();
  return Quiver(std::move(vertices), std::move(arrows));
}

Stability stability_from_json(const json& j) {
  if (!j.contains("theta"))
    throw std::invalid_argument("stability JSON needs \"theta\"");
  return Stability(j.at("theta").get<std::vector<long>>());
}

SlopeStratumData stratum_from_json(const Quiver& quiver,
                                   const Stability& theta, const json& j,
                                   int bound) {
  for (const char* key : {"mu", "elements", "chi"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("stratum JSON needs \"") + key +
                                  "\"");
  Rational mu = rational_from_string(j.at("mu").get<std::string>());
  std::vector<LatticePoint> elements;
  for (const auto& entry : j.at("elements"))
    elements.push_back(LatticePoint(entry.get<std::vector<int>>()));
  auto chi = j.at("chi").get<std::vector<long>>();
  return SlopeStratumData(quiver, theta, mu, bound, std::move(elements),
                          std::move(chi));
}

ordered_json stratum_to_json(const SlopeStratumData& data) {
  ordered_json j;
  j["mu"] = rational_to_string(data.mu());
  ordered_json elements = ordered_json::array();
  for (const auto& d : data.elements()) elements.push_back(d.as_vector());
  j["elements"] = std::move(elements);
  j["chi"] = data.chi_values();
  return j;
}

ordered_json integrality_report_to_json(const IntegralityReport& report) {
  ordered_json j;
  j["N"] = report.N;
  ordered_json entries = ordered_json::array();
  for (const auto& e : report.entries) {
    ordered_json rec;
    rec["i"] = e.index;
    rec["value"] = rational_to_string(e.value);
    rec["integral"] = e.integral;
    entries.push_back(std::move(rec));
  }
  j["a"] = std::move(entries);
  return j;
}

ordered_json dt_table_to_json(
    const DTTable& table,
    const std::vector<std::tuple<long, long, std::map<long, Integer>>>*
        stable_chi) {
  ordered_json j;
  j["m"] = table.m;
  j["max_total_degree"] = table.bound;
  ordered_json invariants = ordered_json::array();
  for (const auto& [key, value] : table.entries) {
    ordered_json rec;
    rec["a"] = key.first;
    rec["b"] = key.second;
    rec["d"] = rational_to_string(value);
    invariants.push_back(std::move(rec));
  }
  j["invariants"] = std::move(invariants);
  if (stable_chi) {
    ordered_json rows = ordered_json::array();
    for (const auto& [a, b, chi] : *stable_chi)
      for (const auto& [k, value] : chi) {
        ordered_json rec;
        rec["ray"] = {a, b};
        rec["k"] = k;
        rec["chi"] = value.get_str();
        rows.push_back(std::move(rec));
      }
    j["stable_chi"] = std::move(rows);
  }
  return j;
}

}  // namespace quiverdt
