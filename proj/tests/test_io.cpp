#include <doctest.h>

#include "quiverdt/io.hpp"

using namespace quiverdt;
using nlohmann::json;

TEST_CASE("rational strings round trip") {
  CHECK(rational_to_string(make_rational(-3, 6)) == "-1/2");
  CHECK(rational_to_string(Rational(7)) == "7");
  CHECK(rational_from_string("22/7") == make_rational(22, 7));
  CHECK(rational_from_string("-5") == -5);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}

TEST_CASE("series serialization is graded-lex and sparse") {
  TruncatedSeries s(2, 3);
  s.set_coefficient(LatticePoint{1, 1}, make_rational(-1, 2));
  s.set_coefficient(LatticePoint{0, 1}, Rational(3));
  s.set_coefficient(LatticePoint{2, 0}, Rational(0));  // dropped
  auto j = series_to_json(s);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["exponents"] == json::array({0, 1}));
  CHECK(j[0]["coefficient"] == "3");
  CHECK(j[1]["exponents"] == json::array({1, 1}));
  CHECK(j[1]["coefficient"] == "-1/2");

  CHECK(series_to_tsv(s) == "0,1\t3\n1,1\t-1/2\n");
}

TEST_CASE("quiver JSON round trip") {
  Quiver k3 = Quiver::kronecker(3);
  auto j = quiver_to_json(k3);
  CHECK(j["vertices"] == json::array({"i", "j"}));
  CHECK(j["arrow_counts"][1][0] == 3);
  Quiver back = quiver_from_json(j);
  CHECK(back.vertex_names() == k3.vertex_names());
  CHECK(back.arrow_count(1, 0) == 3);
  CHECK_THROWS_AS(quiver_from_json(json::object()), std::invalid_argument);
}

TEST_CASE("stability and stratum JSON") {
  Quiver k3 = Quiver::kronecker(3);
  Stability theta = stability_from_json(json::parse(R"({"theta":[0,1]})"));
  CHECK(theta.theta() == std::vector<long>{0, 1});

  json stratum = json::parse(
      R"({"mu":"1/2","elements":[[1,1],[2,2],[3,3]],"chi":[3,0,0]})");
  auto data = stratum_from_json(k3, theta, stratum, 6);
  CHECK(data.mu() == make_rational(1, 2));
  CHECK(data.elements().size() == 3);
  CHECK(data.chi(0) == 3);
  // incomplete element lists are rejected
  json broken = json::parse(R"({"mu":"1/2","elements":[[1,1]],"chi":[3]})");
  CHECK_THROWS_AS(stratum_from_json(k3, theta, broken, 6),
                  std::invalid_argument);
  // round trip through stratum_to_json
  auto emitted = stratum_to_json(data);
  auto reparsed = stratum_from_json(k3, theta, emitted, 6);
  CHECK(reparsed.elements() == data.elements());
  CHECK(reparsed.chi_values() == data.chi_values());
}

TEST_CASE("integrality report JSON shape") {
  IntegralityReport report;
  report.N = 1;
  report.entries.push_back(IntegralityEntry{1, Rational(-1), true});
  report.entries.push_back(IntegralityEntry{2, make_rational(1, 2), false});
  report.first_non_integral = 2;
  auto j = integrality_report_to_json(report);
  CHECK(j["N"] == 1);
  CHECK(j["a"][0]["i"] == 1);
  CHECK(j["a"][0]["value"] == "-1");
  CHECK(j["a"][0]["integral"] == true);
  CHECK(j["a"][1]["value"] == "1/2");
  CHECK(j["a"][1]["integral"] == false);
}

TEST_CASE("dt table JSON shape") {
  DTTable table;
  table.m = 3;
  table.bound = 2;
  table.entries[{1, 0}] = Rational(1);
  table.entries[{0, 1}] = Rational(1);
  table.entries[{1, 1}] = Rational(3);
  table.entries[{2, 0}] = Rational(0);
  table.entries[{0, 2}] = Rational(0);

  std::vector<std::tuple<long, long, std::map<long, Integer>>> chi;
  chi.emplace_back(1, 1, std::map<long, Integer>{{1, Integer(3)}});
  auto j = dt_table_to_json(table, &chi);
  CHECK(j["m"] == 3);
  CHECK(j["max_total_degree"] == 2);
  CHECK(j["invariants"].size() == 5);
  CHECK(j["stable_chi"][0]["ray"] == json::array({1, 1}));
  CHECK(j["stable_chi"][0]["chi"] == "3");
  auto no_chi = dt_table_to_json(table);
  CHECK(!no_chi.contains("stable_chi"));
}
