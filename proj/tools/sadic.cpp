#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sadic/coincidence.hpp"
#include "sadic/config.hpp"
#include "sadic/errors.hpp"
#include "sadic/language.hpp"
#include "sadic/lyapunov.hpp"
#include "sadic/rauzy.hpp"
#include "sadic/report.hpp"
#include "sadic/svg.hpp"
#include "sadic/verify.hpp"

namespace {

using namespace sadic;

constexpr int kExitConfig = 2;
constexpr int kExitPrecondition = 3;

struct Common {
  std::string config;
  bool json = false;
  std::optional<unsigned> threads;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config, "system description file")->required();
  cmd->add_flag("--json", c.json, "emit a JSON report");
  cmd->add_option("--threads", c.threads, "worker thread cap")->check(CLI::Range(1u, 256u));
}

SystemConfig load(const Common& c) {
  SystemConfig cfg = load_config(c.config);
  if (c.threads) cfg.params.threads = *c.threads;
  return cfg;
}

void emit(const Common& c, const std::string& command, const SystemConfig& cfg, const Json& result,
          const std::string& text) {
  if (c.json) std::cout << envelope(command, cfg, result).dump(2) << '\n';
  else std::cout << text;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

DirectionVec direction_for(const SystemConfig& cfg) {
  const auto r = right_eigenvector(cfg.require_sequence(), cfg.params.depth, Real(cfg.params.tolerance));
  if (r.status == EigenStatus::refused) throw std::invalid_argument("no positive product within the eigenvector depth");
  return r.best();
}

std::string line(const std::string& key, const std::string& value) { return key + ": " + value + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analysis of two-letter S-adic substitution systems"};
  app.require_subcommand(1);

  Common balance_c, eigen_c, coincide_c, fractal_c, rotate_c, lyap_c, explore_c, verify_c;
  std::optional<std::size_t> shift, maxlen, depth, cap, fractal_depth, steps, length, samples, explore_n;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> svg_path, csv_path, explore_svg;
  bool all_levels = false;
  bool untransposed = false;

  auto* balance_cmd = app.add_subcommand("balance", "certify C-balance of a shifted language");
  add_common(balance_cmd, balance_c);
  balance_cmd->add_option("--shift", shift, "shift index m");
  balance_cmd->add_option("--maxlen", maxlen, "factor length cap L");

  auto* eigen_cmd = app.add_subcommand("eigen", "generalized right eigenvector and rational independence");
  add_common(eigen_cmd, eigen_c);
  eigen_cmd->add_option("--depth", depth, "cone iteration depth");

  auto* coincide_cmd = app.add_subcommand("coincide", "strong coincidence search");
  add_common(coincide_cmd, coincide_c);
  coincide_cmd->add_option("--cap", cap, "largest n tried");
  coincide_cmd->add_flag("--all", all_levels, "report every coincident n up to the cap");

  auto* fractal_cmd = app.add_subcommand("fractal", "Rauzy fractal points on the line 1-perp");
  add_common(fractal_cmd, fractal_c);
  fractal_cmd->add_option("--depth", fractal_depth, "number of prefixes");
  fractal_cmd->add_option("--svg", svg_path, "write an SVG rendering");
  fractal_cmd->add_option("--csv", csv_path, "write index,pi0,label rows");

  auto* rotate_cmd = app.add_subcommand("rotate-check", "exchange-of-pieces orbit against the limit word");
  add_common(rotate_cmd, rotate_c);
  rotate_cmd->add_option("--steps", steps, "orbit length N");

  auto* lyap_cmd = app.add_subcommand("lyapunov", "Monte-Carlo Lyapunov exponents of the cocycle");
  add_common(lyap_cmd, lyap_c);
  lyap_cmd->add_option("--length", length, "product length n");
  lyap_cmd->add_option("--samples", samples, "number of sampled sequences m");
  lyap_cmd->add_option("--seed", seed, "master seed");
  lyap_cmd->add_flag("--untransposed", untransposed, "multiply by M_k instead of its transpose");

  auto* explore_cmd = app.add_subcommand("explore-config", "iterate the configuration {[0,1],[0,2]} and slice the stripe");
  add_common(explore_cmd, explore_c);
  explore_cmd->add_option("--n", explore_n, "number of E1 iterations");
  explore_cmd->add_option("--svg", explore_svg, "write an SVG rendering");

  auto* verify_cmd = app.add_subcommand("verify", "hypothesis and conclusion checks end to end");
  add_common(verify_cmd, verify_c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*balance_cmd) {
      auto cfg = load(balance_c);
      const auto cert = balance(cfg.require_sequence(), shift.value_or(cfg.params.shift), maxlen.value_or(cfg.params.maxlen));
      emit(balance_c, "balance", cfg, to_json(cert),
           line("status", to_string(cert.status)) + line("constant", std::to_string(cert.constant)) +
               line("max_length", std::to_string(cert.max_length)) +
               line("witness", cert.witness_heavy + " / " + cert.witness_light));
    } else if (*eigen_cmd) {
      auto cfg = load(eigen_c);
      const auto r = right_eigenvector(cfg.require_sequence(), depth.value_or(cfg.params.depth), Real(cfg.params.tolerance));
      Json result{{"eigenvector", to_json(r)}};
      std::string text = line("status", to_string(r.status));
      if (r.status != EigenStatus::refused) {
        const auto ind = rational_independence(r.best());
        result["independence"] = to_json(ind);
        text += line("u", decimal(r.best().x(), 20) + ", " + decimal(r.best().y(), 20)) +
                line("independence", to_string(ind.status));
      }
      PriceParams pp;
      pp.horizon = cfg.params.horizon;
      pp.pairs = cfg.params.pairs;
      pp.balance_length = cfg.params.maxlen;
      const auto price = price_report(cfg.require_sequence(), pp);
      Json left = to_json(price)["E"];
      if (price.eigenvector.v) left["v_independence"] = to_json(rational_independence(*price.eigenvector.v));
      result["left_trace"] = left;
      text += line("left trace", to_string(price.eigenvector.status) + " (v from " + price.eigenvector.v_source + ")");
      emit(eigen_c, "eigen", cfg, result, text);
    } else if (*coincide_cmd) {
      auto cfg = load(coincide_c);
      CoincidenceOptions opts;
      opts.all_levels = all_levels;
      opts.threads = cfg.params.threads;
      const auto v = strong_coincidence(cfg.require_sequence(), cap.value_or(cfg.params.cap), opts);
      std::string text = v.coincident ? "coincident-at(" + std::to_string(v.witness->n) + ")\n"
                                      : "none-up-to(" + std::to_string(v.cap) + ")\n";
      if (v.witness)
        text += line("witness", to_string(GeomSegment{v.witness->y, v.witness->letter}) + " prefix length " +
                                    std::to_string(v.witness->prefix_length));
      emit(coincide_c, "coincide", cfg, to_json(v), text);
    } else if (*fractal_cmd) {
      auto cfg = load(fractal_c);
      const auto u = direction_for(cfg);
      const auto approx = fractal_points(cfg.require_sequence(), u, fractal_depth.value_or(cfg.params.fractal_depth));
      if (svg_path) write_file(*svg_path, fractal_svg(approx));
      if (csv_path) {
        std::ofstream out(*csv_path);
        if (!out) throw std::runtime_error("cannot write " + *csv_path);
        out << "index,pi0,label\n";
        char buf[64];
        for (std::size_t j = 0; j < approx.pi0.size(); ++j) {
          std::snprintf(buf, sizeof buf, "%.17g", approx.pi0[j]);
          out << j << ',' << buf << ',' << to_char(approx.labels[j]) << '\n';
        }
      }
      std::size_t ones = 0;
      for (Letter a : approx.labels) ones += a == Letter::one;
      const double lo = *std::min_element(approx.pi0.begin(), approx.pi0.end());
      const double hi = *std::max_element(approx.pi0.begin(), approx.pi0.end());
      Json result{{"depth", approx.depth}, {"min", lo}, {"max", hi}, {"label1", ones}, {"label2", approx.depth - ones}};
      emit(fractal_c, "fractal", cfg, result,
           line("depth", std::to_string(approx.depth)) + line("range", std::to_string(lo) + " .. " + std::to_string(hi)));
    } else if (*rotate_cmd) {
      auto cfg = load(rotate_c);
      const auto& seq = cfg.require_sequence();
      const auto u = direction_for(cfg);
      const std::size_t coincidence_cap = seq.horizon() ? std::min(cfg.params.cap, *seq.horizon()) : cfg.params.cap;
      OrbitOptions opts;
      opts.coincidence_verified = strong_coincidence(seq, coincidence_cap).coincident;
      const auto r = orbit_vs_shift(seq, u, steps.value_or(cfg.params.steps), opts);
      std::string text = line("angle", decimal(r.angle, 12)) + line("mismatches", std::to_string(r.mismatches)) +
                         line("first_mismatch", r.first_mismatch ? std::to_string(*r.first_mismatch) : "none");
      if (r.warning) text += line("warning", *r.warning);
      emit(rotate_c, "rotate-check", cfg, to_json(r), text);
    } else if (*lyap_cmd) {
      auto cfg = load(lyap_c);
      LyapunovOptions opts;
      opts.threads = cfg.params.threads;
      opts.transposed = !untransposed;
      const auto est = estimate_exponents(cfg.require_model(), length.value_or(cfg.params.length),
                                          samples.value_or(cfg.params.samples), seed.value_or(cfg.params.seed), opts);
      char buf[160];
      std::snprintf(buf, sizeof buf, "theta1: %.9f +- %.2e\ntheta2: %.9f +- %.2e\n", est.theta1, est.stderr1,
                    est.theta2, est.stderr2);
      emit(lyap_c, "lyapunov", cfg, to_json(est), std::string(buf) + line("pisot", to_string(est.pisot)));
    } else if (*explore_cmd) {
      auto cfg = load(explore_c);
      const auto& seq = cfg.require_sequence();
      const auto u = direction_for(cfg);
      PriceParams pp;
      pp.horizon = cfg.params.horizon;
      const auto block = find_repeated_block(seq, seq.horizon() ? std::min(pp.horizon, *seq.horizon()) : pp.horizon, 1);
      std::optional<DirectionVec> v;
      if (block.block) v = perron_direction(block.block->transpose());
      if (!v) v = ones_direction();
      Configuration k({{Vec2i{0, 0}, Letter::one}, {Vec2i{0, 0}, Letter::two}}, u, *v);
      const auto r = explore_configuration(seq, k, explore_n.value_or(cfg.params.explore_n));
      if (explore_svg) write_file(*explore_svg, configuration_svg(r, u, *v));
      std::string text = line("segments", std::to_string(r.iterate.size())) +
                         line("vertices in stripe", std::to_string(r.vertices.size())) +
                         line("slices", std::to_string(r.slices.size())) +
                         line("equal heights", std::to_string(r.equal_heights.size()));
      if (r.period)
        text += line("period", "slice " + std::to_string(r.period->a) + " + " + std::to_string(r.period->b) +
                                   " translated by (" + std::to_string(r.period->t.x) + "," +
                                   std::to_string(r.period->t.y) + ")");
      emit(explore_c, "explore-config", cfg, to_json(r), text);
    } else if (*verify_cmd) {
      auto cfg = load(verify_c);
      const auto r = run_verify(cfg);
      std::string text = line("sequence", r.sequence) + line("unimodular", r.unimodular ? "yes" : "no") +
                         line("primitive at", r.primitivity.positive_at ? std::to_string(*r.primitivity.positive_at) : "unknown") +
                         line("irreducible", to_string(r.irreducibility.verdict) + " on [" +
                                                 std::to_string(r.irreducibility.l_min) + "," +
                                                 std::to_string(r.irreducibility.l_max) + "]") +
                         line("recurrence", to_string(r.price.recurrence.status)) +
                         line("balance", to_string(r.balance.status) + " C=" + std::to_string(r.balance.constant));
      if (r.coincidence)
        text += line("coincidence", r.coincidence->coincident ? "at n=" + std::to_string(r.coincidence->witness->n)
                                                              : "none up to " + std::to_string(r.coincidence->cap));
      if (r.orbit) text += line("rotation angle", decimal(r.orbit->angle, 12)) +
                           line("orbit mismatches", std::to_string(r.orbit->mismatches));
      if (r.overlap) text += line("subtile overlap", std::to_string(r.overlap->overlap));
      for (const auto& e : r.errors) text += line("error in " + e.check, e.message);
      text += line("classification", to_string(r.classification, r.failed_hypothesis));
      emit(verify_c, "verify", cfg, to_json(r), text);
      if (!r.errors.empty()) return kExitPrecondition;
    }
  } catch (const ConfigError& e) {
    std::cerr << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return 0;
}
