#pragma once
// JSON and TSV serialization. All output is deterministic: monomials in
// graded-lex order, rationals as canonical "p/q" strings (bare integer
// when the denominator is 1).

#include <json.hpp>

#include <string>

#include "quiverdt/duality.hpp"
#include "quiverdt/moduli.hpp"
#include "quiverdt/quiver.hpp"
#include "quiverdt/series.hpp"
#include "quiverdt/wallcrossing.hpp"

namespace quiverdt {

nlohmann::ordered_json series_to_json(const TruncatedSeries& s);
std::string series_to_tsv(const TruncatedSeries& s);

nlohmann::ordered_json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

Stability stability_from_json(const nlohmann::json& j);

/// Stratum JSON: {"mu":"p/q","elements":[[ints]],"chi":[ints]}.
SlopeStratumData stratum_from_json(const Quiver& quiver,
                                   const Stability& theta,
                                   const nlohmann::json& j, int bound);
nlohmann::ordered_json stratum_to_json(const SlopeStratumData& data);

/// Report JSON: {"N":int,"a":[{"i":int,"value":"p/q","integral":bool}]}.
nlohmann::ordered_json integrality_report_to_json(
    const IntegralityReport& report);

/// DT output JSON: {"m":...,"max_total_degree":...,"invariants":[...],
/// "stable_chi":[...]}; the stable_chi block is optional.
nlohmann::ordered_json dt_table_to_json(
    const DTTable& table,
    const std::vector<std::tuple<long, long, std::map<long, Integer>>>*
        stable_chi = nullptr);

}  // namespace quiverdt
