#include "proxpair/reproduction.hpp"

#include <algorithm>
#include <cmath>

#include "proxpair/day_space.hpp"
#include "proxpair/iteration.hpp"
#include "proxpair/properties.hpp"
#include "proxpair/trace_io.hpp"

namespace proxpair {

namespace {

CheckResult gate(std::string name, double observed, double threshold, std::string note = "") {
  CheckResult out;
  out.name = std::move(name);
  out.observed = observed;
  out.threshold = threshold;
  out.passed = observed <= threshold;
  out.note = std::move(note);
  return out;
}

}  // namespace

bool ReproductionReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed || c.informational; });
}

nlohmann::json ReproductionReport::to_json() const {
  nlohmann::json check_rows = nlohmann::json::array();
  for (const auto& c : checks) {
    check_rows.push_back({{"check", c.name},
                          {"observed", c.observed},
                          {"threshold", c.threshold},
                          {"passed", c.passed},
                          {"informational", c.informational},
                          {"note", c.note}});
  }
  nlohmann::json orbit_rows = nlohmann::json::array();
  for (const auto& row : orbit_table) {
    orbit_rows.push_back({{"start", row.start_index},
                          {"final_residual", row.final_residual},
                          {"final_gap", row.final_gap}});
  }
  return {{"schema", "proxpair-report/v1"},
          {"config", config.to_json()},
          {"checks", check_rows},
          {"orbit_table", orbit_rows},
          {"pass", all_passed()}};
}

void ReproductionReport::write_csv(std::ostream& os) const {
  os << kReportCsvSchema << "\n";
  os << "check,observed,threshold,status\n";
  for (const auto& c : checks) {
    const char* status = c.informational ? "info" : (c.passed ? "pass" : "fail");
    os << c.name << ',' << format_double(c.observed) << ',' << format_double(c.threshold) << ','
       << status << "\n";
  }
}

ReproductionReport run_reproduction_suite(const ExperimentConfig& config) {
  config.validate();
  ReproductionReport report;
  report.config = config;

  const auto pair = day_pair(config.truncation_depth);
  const auto map = day_example_map(pair);
  const auto coeffs = day_coefficients(std::max(config.truncation_depth, 32));

  // distance along both routes
  report.checks.push_back(gate("dist-analytic", std::abs(pair.distance - 1.0), 1e-12));
  {
    const auto cg = hull_distance(pair.first, pair.second);
    report.checks.push_back(
        gate("dist-conditional-gradient", std::abs(cg.distance - 1.0), 1e-7));
  }

  // rectangle property on sampled pairs
  {
    CheckOptions opts;
    opts.sample_count = config.sample_count;
    opts.seed = config.seed;
    opts.tolerance = 1e-12;
    const auto rectangle = check_rectangle(pair, opts);
    report.checks.push_back(gate("rectangle-day", rectangle.max_violation, 1e-12));
  }

  // property UC via the quantitative modulus, every index of 100 triples
  {
    Sampler sampler(config.seed + 1);
    double worst = 0.0;
    CheckOptions opts;
    opts.tolerance = 1e-10;
    opts.seed = config.seed + 1;
    for (int t = 0; t < 100; ++t) {
      const auto seqs = sample_uc_sequences(pair, 200, sampler);
      const auto uc = check_property_uc(pair, seqs, UcModulus::Pythagorean, opts);
      worst = std::max(worst, uc.max_violation);
    }
    report.checks.push_back(gate("uc-modulus", worst, 1e-10));
  }

  // empirical asymptotic constants against the declared bound 2 P_n
  {
    const auto ratios = estimate_asymptotic_constants(map, 20, 500, config.seed + 2);
    double worst = 0.0;
    for (int n = 1; n <= 20; ++n) {
      worst = std::max(worst, ratios[n - 1] - map.k_bound(n));
    }
    report.checks.push_back(gate("asymptotic-constants", worst, 1e-7,
                                 "max over n = 1..20 of estimate minus declared bound"));
  }
  report.checks.push_back(
      gate("partial-product-limit", std::abs(coeffs.product_to(2500) - 0.5), 1e-4));

  // best proximity point at the origin
  {
    const LabeledPoint<BlockVector> zero{BlockVector(config.truncation_depth), Side::A};
    report.checks.push_back(
        gate("best-proximity-at-zero", std::abs(best_proximity_residual(map, zero)), 1e-12));
  }

  // orbit residuals from random starts
  {
    Sampler sampler(config.seed + 3);
    double worst_residual = 0.0;
    double worst_gap = 0.0;
    for (int s = 0; s < 100; ++s) {
      const LabeledPoint<BlockVector> start{sample_hull_point(pair.first, sampler).value,
                                            Side::A};
      const auto trace = run_u_sequence(map, start, config.horizon);
      report.orbit_table.push_back({s, trace.residuals.back(), trace.gaps.back()});
      worst_residual = std::max(worst_residual, std::abs(trace.residuals.back()));
      worst_gap = std::max(worst_gap, trace.gaps.back());
    }
    CheckResult orbits = gate("orbit-final-residual", worst_residual, 1e-6,
                              "100 random starts at the configured horizon");
    CheckResult gaps = gate("orbit-final-gap", worst_gap, 1e-6,
                            "cross-orbit gap at the configured horizon");
    if (config.horizon < kOrbitClaimHorizon) {
      orbits.informational = true;
      orbits.note = "horizon below the convergence-claim horizon; reported only";
      gaps.informational = true;
      gaps.note = orbits.note;
    }
    report.checks.push_back(orbits);
    report.checks.push_back(gaps);
  }

  // squared map: fixed points on both sides at the pair distance
  {
    const auto squared = squared_map_preserve(map);
    Sampler sampler(config.seed + 4);
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
      const LabeledPoint<BlockVector> start{sample_hull_point(pair.first, sampler).value,
                                            Side::A};
      const auto outcome = run_preserve_experiment(squared, start, config.horizon);
      worst = std::max({worst, outcome.residual_a, outcome.residual_b,
                        std::abs(outcome.pair_distance - pair.distance)});
    }
    CheckResult preserve = gate("preserve-fixed-points", worst, 1e-6,
                                "fixed-point residuals and pair distance after T o T");
    if (config.horizon < kPreserveClaimHorizon) {
      preserve.informational = true;
      preserve.note = "horizon below the convergence-claim horizon; reported only";
    }
    report.checks.push_back(preserve);
  }

  return report;
}

}  // namespace proxpair
