// Command-line front end. Thin adapter over the library: parsing, file
// ingestion, deterministic emission. Exit codes: 0 success, 1 usage error,
// 2 input validation error, 3 internal consistency failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "quiverdt/arith.hpp"
#include "quiverdt/duality.hpp"
#include "quiverdt/hilbert.hpp"
#include "quiverdt/io.hpp"
#include "quiverdt/moduli.hpp"
#include "quiverdt/quiver.hpp"
#include "quiverdt/selfcheck.hpp"
#include "quiverdt/wallcrossing.hpp"

namespace {

using namespace quiverdt;
using nlohmann::json;
using nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw InputError("malformed integer list: " + text);
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

LatticePoint parse_point(const std::string& text) {
  auto longs = parse_long_list(text);
  std::vector<int> ints;
  for (long v : longs) {
    if (v < 0) throw InputError("dimension vector entries must be >= 0");
    ints.push_back(static_cast<int>(v));
  }
  return LatticePoint(ints);
}

// "1:-1,2:3" -> {1: -1, 2: 3}
std::map<long, Rational> parse_exponent_map(const std::string& text) {
  std::map<long, Rational> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw InputError("malformed exponent map entry: " + item);
    try {
      long index = std::stol(item.substr(0, colon));
      if (index < 1) throw InputError("exponent indices must be >= 1");
      out[index] = rational_from_string(item.substr(colon + 1));
    } catch (const std::invalid_argument&) {
      throw InputError("malformed exponent map entry: " + item);
    }
  }
  return out;
}

std::vector<Rational> parse_coefficients(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rational_from_string(item));
  if (out.empty()) throw InputError("empty coefficient list");
  return out;
}

TruncatedSeries series_from_coefficients(const std::vector<Rational>& coeffs) {
  TruncatedSeries s(1, static_cast<int>(coeffs.size()) - 1);
  for (size_t d = 0; d < coeffs.size(); ++d)
    s.set_coefficient(LatticePoint{static_cast<int>(d)}, coeffs[d]);
  return s;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw InputError("cannot write to " + output_path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
}

struct CommonFlags {
  int max_degree = 6;
  std::string format = "json";
  std::string output;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--max-degree", flags.max_degree,
                  "total-degree truncation bound")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));
  cmd->add_option("--output,-o", flags.output,
                  "output file (default: standard output)");
}

void emit_series(const TruncatedSeries& s, const CommonFlags& flags) {
  if (flags.format == "tsv")
    emit(series_to_tsv(s), flags.output);
  else
    emit(series_to_json(s).dump(2), flags.output);
}

int run_hilb(const std::string& quiver_path, const std::string& framing_text,
             bool oracle_check, const CommonFlags& flags) {
  Quiver q = quiver_from_json(load_json_file(quiver_path));
  LatticePoint framing = parse_point(framing_text);
  if (framing.rank() != q.num_vertices())
    throw InputError("framing rank does not match the quiver");
  TruncatedSeries series = hilb_series(q, framing, flags.max_degree);
  if (oracle_check) {
    int guard = std::min(flags.max_degree, 5);
    auto trees = forest_tree_counts(q, guard);
    auto counts = forest_counts(q, framing, trees, guard);
    for (const auto& [d, c] : series.coefficients()) {
      if (d.total_degree() > guard) break;
      auto it = counts.find(d);
      long expected = it == counts.end() ? 0 : it->second;
      if (c != expected)
        throw ConsistencyError("hilb series disagrees with forest oracle");
    }
    for (const auto& [d, c] : counts)
      if (series.coefficient(d) != c)
        throw ConsistencyError("hilb series disagrees with forest oracle");
    std::cerr << "oracle cross-check passed to degree " << guard << "\n";
  }
  emit_series(series, flags);
  return 0;
}

int run_moduli(const std::string& quiver_path, const std::string& theta_text,
               const std::string& stratum_path, const std::string& eta_text,
               const std::string& r_text, const std::string& s_text,
               const CommonFlags& flags) {
  Quiver q = quiver_from_json(load_json_file(quiver_path));
  Stability theta(parse_long_list(theta_text));
  if (theta.rank() != q.num_vertices())
    throw InputError("stability rank does not match the quiver");
  SlopeStratumData data = stratum_from_json(
      q, theta, load_json_file(stratum_path), flags.max_degree);

  int selected = (!eta_text.empty()) + (!r_text.empty()) + (!s_text.empty());
  if (selected != 1)
    throw InputError("choose exactly one of --eta, --r-series, --s-series");

  if (!eta_text.empty()) {
    emit_series(smooth_model_series(data, parse_long_list(eta_text),
                                    flags.max_degree),
                flags);
  } else if (!r_text.empty()) {
    emit_series(r_chi_series(data, parse_point(r_text), flags.max_degree),
                flags);
  } else {
    emit_series(s_series(data, parse_point(s_text), flags.max_degree), flags);
  }
  return 0;
}

int run_duality(int n_param, const std::string& b_text,
                const std::string& extract_text,
                const std::string& factorize_text, const CommonFlags& flags) {
  int selected =
      (!b_text.empty()) + (!extract_text.empty()) + (!factorize_text.empty());
  if (selected != 1)
    throw InputError("choose exactly one of --b, --extract, --factorize");

  if (!extract_text.empty()) {
    TruncatedSeries f =
        series_from_coefficients(parse_coefficients(extract_text));
    FuncEqForm form = funceq_extract(f, n_param);
    ordered_json j;
    j["N"] = form.N;
    ordered_json entries = ordered_json::array();
    for (const auto& [i, b] : form.exponents) {
      ordered_json rec;
      rec["i"] = i;
      rec["value"] = rational_to_string(b);
      entries.push_back(std::move(rec));
    }
    j["b"] = std::move(entries);
    emit(j.dump(2), flags.output);
    return 0;
  }

  if (!factorize_text.empty()) {
    TruncatedSeries f =
        series_from_coefficients(parse_coefficients(factorize_text));
    EulerProductForm product = euler_factorize(f, n_param);
    IntegralityReport report;
    report.N = n_param;
    for (long i = 1; i <= f.bound(); ++i) {
      auto it = product.exponents.find(i);
      Rational value = it == product.exponents.end() ? Rational(0) : it->second;
      report.entries.push_back(IntegralityEntry{i, value, is_integer(value)});
      if (!is_integer(value) && !report.first_non_integral)
        report.first_non_integral = i;
    }
    emit(integrality_report_to_json(report).dump(2), flags.output);
    return 0;
  }

  FuncEqForm form;
  form.N = n_param;
  form.exponents = parse_exponent_map(b_text);
  TruncatedSeries solved = funceq_solve(form, flags.max_degree);
  IntegralityReport report = integrality_report(form, flags.max_degree);

  ordered_json j = integrality_report_to_json(report);
  j["series"] = series_to_json(solved);
  if (n_param != 0) {
    ordered_json moebius = ordered_json::array();
    for (long d = 1; d <= flags.max_degree; ++d) {
      ordered_json rec;
      rec["i"] = d;
      rec["value"] = rational_to_string(duality_moebius(form, d));
      moebius.push_back(std::move(rec));
    }
    j["moebius_a"] = std::move(moebius);
    for (size_t k = 0; k < report.entries.size(); ++k)
      if (rational_from_string(
              j["moebius_a"][k]["value"].get<std::string>()) !=
          report.entries[k].value)
        throw ConsistencyError(
            "moebius formula disagrees with the peeling factorization");
  }
  j["all_integral"] = report.all_integral();
  emit(j.dump(2), flags.output);
  return 0;
}

int run_dt(long m, bool stable_chi, bool diagonal_check,
           const CommonFlags& flags) {
  DTTable table = kronecker_factorize(m, flags.max_degree);

  if (!table.all_integral()) {
    std::cerr << "non-integral DT invariant found\n";
    return 3;
  }
  if (diagonal_check) {
    if (m <= 2) throw InputError("--diagonal-check requires m >= 3");
    for (long k = 1; 2 * k <= flags.max_degree; ++k)
      if (table.at(k, k) != diagonal_closed_form(m, k)) {
        std::cerr << "diagonal entry d(" << k << "," << k
                  << ") disagrees with the closed formula\n";
        return 3;
      }
  }

  if (flags.format == "tsv") {
    std::ostringstream os;
    for (const auto& [key, value] : table.entries)
      os << key.first << "\t" << key.second << "\t"
         << rational_to_string(value) << "\n";
    emit(os.str(), flags.output);
    return 0;
  }

  std::vector<std::tuple<long, long, std::map<long, Integer>>> chi_rows;
  if (stable_chi) {
    for (long a = 0; a <= flags.max_degree; ++a)
      for (long b = 0; a + b <= flags.max_degree; ++b) {
        if (a + b < 1 || std::gcd(a, b) != 1) continue;
        chi_rows.emplace_back(a, b, kronecker_stable_chi(table, a, b));
      }
  }
  emit(dt_table_to_json(table, stable_chi ? &chi_rows : nullptr).dump(2),
       flags.output);
  return 0;
}

int run_verify(int threads, int duality_trials, int lagrange_trials,
               int criterion) {
  if (criterion < 0 || criterion > 12)
    throw InputError("criterion index must be in 1..12");
  selfcheck::Context ctx;
  bool all_pass = true;
  for (int index = 1; index <= 12; ++index) {
    if (criterion != 0 && criterion != index) continue;
    selfcheck::CriterionResult r;
    switch (index) {
      case 1: r = selfcheck::catalan_pipeline(ctx); break;
      case 2: r = selfcheck::fuss_catalan_forests(ctx); break;
      case 3: r = selfcheck::oracle_equivalence(ctx, threads); break;
      case 4: r = selfcheck::trivial_stability_reduction(ctx); break;
      case 5: r = selfcheck::pentagon(ctx); break;
      case 6: r = selfcheck::diagonal_formula(ctx); break;
      case 7: r = selfcheck::dt_integrality(ctx); break;
      case 8: r = selfcheck::duality_integrality_sweep(ctx, duality_trials); break;
      case 9: r = selfcheck::lagrange_identity(ctx, lagrange_trials); break;
      case 10: r = selfcheck::stable_chi_extraction(ctx); break;
      case 11: r = selfcheck::bracket_preservation(ctx); break;
      case 12: r = selfcheck::congruence_and_symmetric_strata(ctx); break;
    }
    std::printf("[%s] %2d %-40s (%6.2f s) %s\n", r.pass ? "PASS" : "FAIL",
                r.index, r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "quiverdt: Euler characteristics of quiver Hilbert schemes and smooth "
      "models, Euler-product duality, and Kronecker Donaldson-Thomas "
      "invariants, in exact rational arithmetic"};
  app.require_subcommand(1);

  // hilb
  auto* hilb = app.add_subcommand(
      "hilb", "generating series of Hilbert-scheme Euler characteristics");
  std::string hilb_quiver;
  std::string hilb_framing = "1";
  bool hilb_oracle = false;
  CommonFlags hilb_flags;
  hilb->add_option("--quiver", hilb_quiver, "quiver JSON file")->required();
  hilb->add_option("--framing", hilb_framing,
                   "framing dimension vector, e.g. \"1,0\"");
  hilb->add_flag("--oracle", hilb_oracle,
                 "cross-check coefficients against the forest oracle");
  add_common(hilb, hilb_flags);

  // moduli
  auto* moduli = app.add_subcommand(
      "moduli", "smooth-model series from slope stratum data");
  std::string mod_quiver, mod_theta, mod_stratum, mod_eta, mod_r, mod_s;
  CommonFlags mod_flags;
  moduli->add_option("--quiver", mod_quiver, "quiver JSON file")->required();
  moduli->add_option("--theta", mod_theta, "stability, e.g. \"0,1\"")
      ->required();
  moduli->add_option("--stratum", mod_stratum, "stratum data JSON file")
      ->required();
  moduli->add_option("--eta", mod_eta,
                     "integer functional for the smooth-model series");
  moduli->add_option("--r-series", mod_r, "element d for the R-series");
  moduli->add_option("--s-series", mod_s, "element d for the S-series");
  add_common(moduli, mod_flags);

  // duality
  auto* duality = app.add_subcommand(
      "duality", "euler-product / functional-equation duality");
  int dual_N = 1;
  std::string dual_b, dual_extract, dual_factorize;
  CommonFlags dual_flags;
  dual_flags.max_degree = 12;
  duality->add_option("--N", dual_N, "sign/exponent parameter N");
  duality->add_option("--b", dual_b,
                      "functional-equation exponents, e.g. \"1:-1,2:1/2\"");
  duality->add_option("--extract", dual_extract,
                      "series coefficients c0,c1,... to extract b from");
  duality->add_option("--factorize", dual_factorize,
                      "series coefficients c0,c1,... to factorize into a");
  add_common(duality, dual_flags);

  // dt
  auto* dt = app.add_subcommand(
      "dt", "Kronecker Donaldson-Thomas invariants by wall-crossing");
  long dt_m = 3;
  bool dt_stable = false;
  bool dt_diag = false;
  CommonFlags dt_flags;
  dt_flags.max_degree = 8;
  dt->add_option("--m", dt_m, "number of arrows of the Kronecker quiver")
      ->check(CLI::PositiveNumber);
  dt->add_flag("--stable-chi", dt_stable,
               "append stable-moduli Euler characteristics per primitive ray");
  dt->add_flag("--diagonal-check", dt_diag,
               "verify diagonal entries against the closed formula (m >= 3)");
  add_common(dt, dt_flags);

  // verify
  auto* verify =
      app.add_subcommand("verify", "run the full property/acceptance suite");
  int verify_threads = 1;
  int verify_duality_trials = 200;
  int verify_lagrange_trials = 100;
  int verify_criterion = 0;
  verify->add_option("--threads", verify_threads,
                     "worker threads for sweep criteria (results are "
                     "bit-identical for any value)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--duality-trials", verify_duality_trials,
                     "random forms for the duality sweep");
  verify->add_option("--lagrange-trials", verify_lagrange_trials,
                     "random series for the Lagrange identity");
  verify->add_option("--criterion", verify_criterion,
                     "run a single criterion (1..12; 0 = all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (hilb->parsed())
      return run_hilb(hilb_quiver, hilb_framing, hilb_oracle, hilb_flags);
    if (moduli->parsed())
      return run_moduli(mod_quiver, mod_theta, mod_stratum, mod_eta, mod_r,
                        mod_s, mod_flags);
    if (duality->parsed())
      return run_duality(dual_N, dual_b, dual_extract, dual_factorize,
                         dual_flags);
    if (dt->parsed()) return run_dt(dt_m, dt_stable, dt_diag, dt_flags);
    if (verify->parsed())
      return run_verify(verify_threads, verify_duality_trials,
                        verify_lagrange_trials, verify_criterion);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
