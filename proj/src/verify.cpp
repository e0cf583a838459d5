#include "sadic/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>

#include "sadic/errors.hpp"

namespace sadic {

namespace {

bool attempt(VerifyReport& report, const std::string& check, const std::function<void()>& body) {
  try {
    body();
    return true;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    report.errors.push_back({check, e.what()});
    return false;
  }
}

bool holds(ConditionStatus s) { return s == ConditionStatus::verified || s == ConditionStatus::verified_on_window; }

}  // namespace

VerifyReport run_verify(const SystemConfig& config) {
  const DirectiveSequence& seq = config.require_sequence();
  const AnalysisParams& p = config.params;
  VerifyReport report;
  report.sequence = seq.describe();

  const std::size_t horizon = seq.horizon() ? std::min(p.horizon, *seq.horizon()) : p.horizon;

  report.unimodular = true;
  const std::size_t checked = seq.horizon() ? *seq.horizon() : seq.preperiod_length() + seq.cycle_length();
  std::vector<std::size_t> seen;
  for (std::size_t n = 0; n < checked; ++n) {
    const std::size_t id = seq.id(n);
    if (std::find(seen.begin(), seen.end(), id) != seen.end()) continue;
    seen.push_back(id);
    if (!seq.at(n).is_unimodular()) {
      report.unimodular = false;
      report.non_unimodular.push_back(seq.at(n).str());
    }
  }

  bool primitive_ok = false;
  bool irreducible_ok = false;
  bool refuted_irreducible = false;
  attempt(report, "primitivity", [&] {
    report.primitivity = is_primitive(seq, 0, std::max<std::size_t>(horizon, 1));
    primitive_ok = report.primitivity.positive_at.has_value();
  });
  attempt(report, "irreducibility", [&] {
    const std::size_t hi = seq.horizon() ? std::min(p.irreducibility_max, *seq.horizon()) : p.irreducibility_max;
    if (p.irreducibility_min > hi) return;
    report.irreducibility = is_algebraically_irreducible(seq, 0, p.irreducibility_min, hi);
    irreducible_ok = report.irreducibility.verdict == WindowVerdict::verified_on_window;
    refuted_irreducible = report.irreducibility.verdict == WindowVerdict::refuted;
  });
  attempt(report, "price", [&] {
    PriceParams pp;
    pp.horizon = horizon;
    pp.irreducibility_min = p.irreducibility_min;
    pp.irreducibility_max = p.irreducibility_max;
    pp.balance_length = p.maxlen;
    pp.pairs = p.pairs;
    report.price = price_report(seq, pp);
  });
  bool balance_ok = false;
  attempt(report, "balance", [&] {
    report.balance = balance(seq, p.shift, p.maxlen);
    balance_ok = report.balance.status == BalanceStatus::certified;
  });

  if (!report.unimodular) report.failed_hypothesis = "unimodular";
  else if (refuted_irreducible || report.price.irreducibility.status == ConditionStatus::refuted)
    report.failed_hypothesis = "irreducible";
  else if (report.price.recurrence.status == ConditionStatus::refuted) report.failed_hypothesis = "recurrent";
  else if (report.balance.status == BalanceStatus::refuted) report.failed_hypothesis = "balanced";

  if (!report.failed_hypothesis.empty()) {
    report.classification = Classification::hypothesis_failure;
    report.skipped = {"eigenvector", "coincidence", "rotation", "fractal", "overlap"};
    return report;
  }

  attempt(report, "eigenvector", [&] {
    report.eigen = right_eigenvector(seq, p.depth, Real(p.tolerance));
    if (report.eigen->status == EigenStatus::refused) return;
    report.independence = rational_independence(report.eigen->best(), 40, irreducible_ok && balance_ok);
  });
  attempt(report, "coincidence", [&] {
    const std::size_t cap = seq.horizon() ? std::min(p.cap, *seq.horizon()) : p.cap;
    CoincidenceOptions opts;
    opts.threads = p.threads;
    report.coincidence = strong_coincidence(seq, cap, opts);
  });

  const bool have_u = report.eigen && report.eigen->status != EigenStatus::refused &&
                      report.eigen->best().x() > 0 && report.eigen->best().y() > 0;
  if (have_u) {
    const DirectionVec& u = report.eigen->best();
    attempt(report, "rotation", [&] {
      report.rotation = rotation_factor(u);
      OrbitOptions opts;
      opts.coincidence_verified = report.coincidence && report.coincidence->coincident;
      report.orbit = orbit_vs_shift(seq, u, p.steps, opts);
    });
    attempt(report, "fractal", [&] {
      const auto approx = fractal_points(seq, u, p.fractal_depth);
      FractalSummary f;
      f.depth = approx.depth;
      f.min = *std::min_element(approx.pi0.begin(), approx.pi0.end());
      f.max = *std::max_element(approx.pi0.begin(), approx.pi0.end());
      const double c = static_cast<double>(report.balance.constant);
      f.outside = static_cast<std::size_t>(
          std::count_if(approx.pi0.begin(), approx.pi0.end(), [&](double x) { return x < -c || x > c; }));
      report.fractal = f;
      report.overlap = subtile_overlap(approx, p.bin_width, report.balance.constant);
    });
  } else {
    report.skipped = {"rotation", "fractal", "overlap"};
  }

  const bool hypotheses = report.unimodular && primitive_ok && irreducible_ok && balance_ok &&
                          holds(report.price.recurrence.status);
  const bool conclusions = report.coincidence && report.coincidence->coincident && report.orbit &&
                           report.orbit->mismatches == 0 && report.fractal && report.fractal->outside == 0;
  report.classification = hypotheses && conclusions && report.errors.empty() ? Classification::conclusion_verified
                                                                             : Classification::inconclusive;
  return report;
}

std::string to_string(Classification c, const std::string& failed) {
  switch (c) {
    case Classification::conclusion_verified:
      return "theorem-hypotheses-met-on-window+conclusion-verified";
    case Classification::hypothesis_failure:
      return "hypothesis-failure(" + failed + ")";
    case Classification::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace sadic
