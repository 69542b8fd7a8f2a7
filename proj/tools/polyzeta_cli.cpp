// polyzeta: evaluate the series S(k,a) = sum over Z of (-1)^(nk)/(an+1)^k by
// independent routes (direct summation, cube quadrature, the hyperbolic
// polytope probability formula, Monte Carlo) and cross-check them.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyzeta/change_of_variables.hpp"
#include "polyzeta/cyclic.hpp"
#include "polyzeta/monte_carlo.hpp"
#include "polyzeta/quadrature.hpp"
#include "polyzeta/series.hpp"
#include "polyzeta/special_functions.hpp"

using json = nlohmann::json;
using namespace polyzeta;

namespace {

enum ExitCode { kOk = 0, kToleranceExceeded = 1, kInvalidParams = 2, kNonconvergence = 3 };

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("POLYZETA_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

QuadConfig config_for(int k, std::optional<double> tol) {
  QuadConfig cfg;
  if (tol) {
    cfg.abs_tol = cfg.rel_tol = *tol;
  } else if (k >= 2) {
    cfg.abs_tol = cfg.rel_tol = 1e-7;  // nested quadrature default
  }
  return cfg;
}

struct MethodResult {
  std::string method;
  double value = 0.0;
  double error = 0.0;     // rigorous/indicated bound; 4*sigma for MC
  long long work = 0;
};

json result_json(const MethodResult& r) {
  return {{"method", r.method},
          {"value", r.value},
          {"error_estimate", r.error},
          {"work", r.work}};
}

json breakdown_json(const ProbabilityBreakdown& b) {
  json tuples = json::array();
  for (const auto& c : b.contributions) {
    tuples.push_back({{"tuple", c.tuple.r},
                      {"alphas", c.tuple.alphas},
                      {"J", c.j},
                      {"K", c.k}});
  }
  return {{"easy_xi", b.easy_xi},
          {"easy_theta", b.easy_theta},
          {"contributions", tuples},
          {"total_probability", b.total_probability},
          {"assembled_S", b.assembled_S},
          {"error_estimate", b.error_estimate}};
}

void print_results_table(const SeriesSpec& spec,
                         const std::vector<MethodResult>& results) {
  std::printf("S(k=%d, a=%d)\n", spec.k, spec.a);
  std::printf("%-18s %-24s %-12s %s\n", "method", "value", "error_est", "work");
  for (const auto& r : results) {
    std::printf("%-18s %-24s %-12.3e %lld\n", r.method.c_str(),
                fmt17(r.value).c_str(), r.error, r.work);
  }
}

void print_results_csv(const SeriesSpec& spec,
                       const std::vector<MethodResult>& results) {
  std::printf("k,a,method,value,error_estimate,work\n");
  for (const auto& r : results) {
    std::printf("%d,%d,%s,%s,%s,%lld\n", spec.k, spec.a, r.method.c_str(),
                fmt17(r.value).c_str(), fmt17(r.error).c_str(), r.work);
  }
}

MethodResult run_method(const SeriesSpec& spec, const std::string& method,
                        std::optional<double> tol, std::uint64_t seed,
                        long long samples, ConstantsMode mode,
                        std::optional<ProbabilityBreakdown>* breakdown_out) {
  if (method == "series") {
    EvalResult r = evaluate_series(spec, tol.value_or(1e-10));
    return {"series", r.value, r.error_estimate, r.work};
  }
  if (method == "quad") {
    EvalResult r = direct_I(spec, config_for(spec.k, tol));
    return {"direct_quad", r.value, r.error_estimate, r.work};
  }
  if (method == "formula") {
    ProbabilityBreakdown b = assemble_formula(spec, config_for(spec.k, tol), mode);
    if (breakdown_out) *breakdown_out = b;
    return {"polytope_formula", b.assembled_S, b.error_estimate,
            static_cast<long long>(b.contributions.size()) * 2 + 2};
  }
  if (method == "mc") {
    McConfig mc{seed, samples, 8, 1};
    McEstimate e = estimate_S(spec, mc);
    return {"monte_carlo", e.mean, 4.0 * e.std_error, e.samples};
  }
  throw invalid_parameter("unknown method: " + method);
}

// status ok iff every pair agrees within combined error estimates (tol acts
// as a floor on the allowance)
int cross_check(const SeriesSpec& spec, const std::vector<MethodResult>& results,
                double tol, const std::string& format, json* out) {
  bool ok = true;
  json pairs = json::array();
  for (size_t i = 0; i < results.size(); ++i) {
    for (size_t j = i + 1; j < results.size(); ++j) {
      const double diff = std::fabs(results[i].value - results[j].value);
      const double allow = results[i].error + results[j].error + tol;
      const bool pair_ok = diff <= allow;
      ok = ok && pair_ok;
      pairs.push_back({{"methods", {results[i].method, results[j].method}},
                       {"abs_diff", diff},
                       {"allowance", allow},
                       {"ok", pair_ok}});
      if (format == "table") {
        std::printf("  %-18s vs %-18s |diff| = %.3e  allow = %.3e  %s\n",
                    results[i].method.c_str(), results[j].method.c_str(), diff,
                    allow, pair_ok ? "ok" : "TOLERANCE EXCEEDED");
      }
    }
  }
  if (out) {
    (*out)["k"] = spec.k;
    (*out)["a"] = spec.a;
    (*out)["agreement"] = pairs;
    (*out)["status"] = ok ? "ok" : "tolerance_exceeded";
  }
  return ok ? kOk : kToleranceExceeded;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyzeta: cross-validated evaluation of S(k,a)"};
  app.require_subcommand(1);

  std::string format = "table";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  int k = 2, a = 2, n_opt = -1;
  std::optional<double> tol;
  std::uint64_t seed = default_seed();
  long long samples = 1000000;
  std::string method = "series", dist = "xi";
  double t_arg = 0.0;
  long long n_samples = 1;
  bool all = false, printed_constants = false;

  auto* eval = app.add_subcommand("eval", "Evaluate S(k,a) by one method");
  eval->fallthrough();
  eval->add_option("--k", k, "Series exponent")->required();
  eval->add_option("--a", a, "Progression modulus")->required();
  eval->add_option("--method", method, "series|quad|formula|mc")
      ->check(CLI::IsMember({"series", "quad", "formula", "mc"}));
  eval->add_option("--tol", tol, "Target tolerance");
  eval->add_option("--seed", seed, "RNG seed (mc); env POLYZETA_SEED");
  eval->add_option("--samples", samples, "Monte Carlo samples");
  eval->add_flag("--use-printed-constants", printed_constants,
                 "Diagnostic: the uncorrected per-variable constant in J/K");

  auto* verify = app.add_subcommand("verify", "Cross-check all applicable methods");
  verify->fallthrough();
  verify->add_option("--k", k, "Series exponent");
  verify->add_option("--a", a, "Progression modulus");
  verify->add_flag("--all", all, "Run the built-in (k,a) matrix {1..4}x{2,3,4}");
  verify->add_option("--tol", tol, "Agreement floor (default 1e-6)");
  verify->add_option("--seed", seed, "RNG seed (mc)");
  verify->add_option("--samples", samples, "Monte Carlo samples");
  verify->add_flag("--use-printed-constants", printed_constants,
                   "Diagnostic: apply the uncorrected J/K constant to the "
                   "formula method (single-cell verify only)");

  auto* enumerate = app.add_subcommand("enumerate", "List admissible tuples with alphas");
  enumerate->fallthrough();
  enumerate->add_option("--k", k, "Cycle length")->required();
  enumerate->add_option("--n", n_opt, "Tuple size (default: all)");

  auto* cdf_cmd = app.add_subcommand("cdf", "Evaluate psi/phi");
  cdf_cmd->fallthrough();
  cdf_cmd->add_option("--a", a, "Progression modulus")->required();
  cdf_cmd->add_option("--t", t_arg, "Argument")->required();
  cdf_cmd->add_option("--dist", dist, "xi|theta")->check(CLI::IsMember({"xi", "theta"}));

  auto* sample_cmd = app.add_subcommand("sample", "Draw inverse-CDF samples");
  sample_cmd->fallthrough();
  sample_cmd->add_option("--a", a, "Progression modulus")->required();
  sample_cmd->add_option("--dist", dist, "xi|theta")->check(CLI::IsMember({"xi", "theta"}));
  sample_cmd->add_option("--n", n_samples, "Number of samples");
  sample_cmd->add_option("--seed", seed, "RNG seed; env POLYZETA_SEED");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidParams;
  }

  const ConstantsMode mode =
      printed_constants ? ConstantsMode::printed : ConstantsMode::density;

  try {
    if (eval->parsed()) {
      SeriesSpec spec{k, a};
      validate_spec(spec);
      std::optional<ProbabilityBreakdown> breakdown;
      MethodResult r = run_method(spec, method, tol, seed, samples, mode, &breakdown);
      if (format == "json") {
        json out = {{"k", k}, {"a", a}, {"results", json::array({result_json(r)})}};
        if (breakdown) out["breakdown"] = breakdown_json(*breakdown);
        std::printf("%s\n", out.dump(2).c_str());
      } else if (format == "csv") {
        print_results_csv(spec, {r});
      } else {
        print_results_table(spec, {r});
      }
      return kOk;
    }

    if (verify->parsed()) {
      const double floor_tol = tol.value_or(1e-6);
      std::vector<std::pair<int, int>> cells;
      if (all) {
        for (int kk = 1; kk <= 4; ++kk)
          for (int aa : {2, 3, 4}) cells.emplace_back(kk, aa);
      } else {
        cells.emplace_back(k, a);
      }
      json report = json::array();
      int worst = kOk;
      for (auto [ck, ca] : cells) {
        SeriesSpec spec{ck, ca};
        validate_spec(spec);
        std::vector<MethodResult> results;
        results.push_back(run_method(spec, "series", std::nullopt, seed, samples,
                                     ConstantsMode::density, nullptr));
        if (ck <= 3) {
          results.push_back(run_method(spec, "quad", std::nullopt, seed, samples,
                                       ConstantsMode::density, nullptr));
        }
        results.push_back(run_method(spec, "formula", std::nullopt, seed, samples,
                                     all ? ConstantsMode::density : mode, nullptr));
        if (!all) {
          // the full matrix skips Monte Carlo to keep verify --all quick
          results.push_back(run_method(spec, "mc", std::nullopt, seed, samples,
                                       ConstantsMode::density, nullptr));
        }
        if (format == "table") {
          print_results_table(spec, results);
        }
        json cell;
        cell["results"] = json::array();
        for (const auto& r : results) cell["results"].push_back(result_json(r));
        worst = std::max(worst, cross_check(spec, results, floor_tol, format, &cell));
        if (format == "table") {
          std::printf("status: %s\n\n",
                      cell["status"].get<std::string>().c_str());
        }
        report.push_back(cell);
      }
      if (format == "json") {
        json out = {{"report", report},
                    {"status", worst == kOk ? "ok" : "tolerance_exceeded"}};
        std::printf("%s\n", out.dump(2).c_str());
      } else if (format == "csv") {
        std::printf("k,a,status\n");
        for (const auto& cell : report) {
          std::printf("%d,%d,%s\n", cell["k"].get<int>(), cell["a"].get<int>(),
                      cell["status"].get<std::string>().c_str());
        }
      }
      return worst;
    }

    if (enumerate->parsed()) {
      if (k < 2 || k > 20) throw invalid_parameter("enumerate: need 2 <= k <= 20");
      std::vector<int> sizes;
      if (n_opt > 0) {
        sizes.push_back(n_opt);
      } else {
        for (int n = 1; n <= k / 2; ++n) sizes.push_back(n);
      }
      json out = {{"k", k}, {"tuples", json::array()}};
      for (int n : sizes) {
        auto tuples = enumerate_admissible_tuples(k, n);
        if (format == "table") {
          std::printf("n=%d: %zu tuples (%lld subsets)\n", n, tuples.size(),
                      count_admissible_subsets(k, n));
        }
        for (const auto& t : tuples) {
          if (format == "table") {
            std::printf("  (");
            for (size_t i = 0; i < t.r.size(); ++i)
              std::printf("%s%d", i ? "," : "", t.r[i]);
            std::printf(")  alphas=[");
            for (size_t i = 0; i < t.alphas.size(); ++i)
              std::printf("%s%d", i ? "," : "", t.alphas[i]);
            std::printf("]\n");
          } else {
            out["tuples"].push_back(
                {{"n", n}, {"r", t.r}, {"alphas", t.alphas}});
          }
        }
      }
      if (format == "json") std::printf("%s\n", out.dump(2).c_str());
      return kOk;
    }

    if (cdf_cmd->parsed()) {
      const Dist d = (dist == "xi") ? Dist::xi : Dist::theta;
      const double v = cdf(d, a, t_arg);
      if (format == "json") {
        json out = {{"a", a}, {"t", t_arg}, {"dist", dist}, {"value", v}};
        std::printf("%s\n", out.dump(2).c_str());
      } else {
        std::printf("%s\n", fmt17(v).c_str());
      }
      return kOk;
    }

    if (sample_cmd->parsed()) {
      if (n_samples < 1) throw invalid_parameter("sample: n must be >= 1");
      const Dist d = (dist == "xi") ? Dist::xi : Dist::theta;
      for (long long i = 0; i < n_samples; ++i) {
        const double u = counter_uniform(seed, d == Dist::xi ? 0 : 1,
                                         static_cast<std::uint64_t>(i));
        const double v = (d == Dist::xi) ? sample_xi(a, u) : sample_theta(a, u);
        std::printf("%s\n", fmt17(v).c_str());
      }
      return kOk;
    }
  } catch (const invalid_parameter& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInvalidParams;
  } catch (const nonconvergence& e) {
    std::fprintf(stderr, "error: %s (best estimate %.17g)\n", e.what(),
                 e.best_estimate);
    return kNonconvergence;
  }
  return kInvalidParams;
}
