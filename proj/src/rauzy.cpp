#include "sadic/rauzy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sadic {

namespace {

Real fractional_part(const Real& x) {
  Real f = x - floor(x);
  if (f >= 1) f -= 1;
  return f;
}

}  // namespace

RauzyApprox fractal_points_of_word(const Word& word, const DirectionVec& u) {
  RauzyApprox out;
  out.depth = word.size();
  out.pi0.reserve(word.size());
  out.labels.reserve(word.size());
  const Real share = u.first_share();
  std::int64_t ones = 0;
  for (std::size_t n = 0; n < word.size(); ++n) {
    out.pi0.push_back(static_cast<double>(Real(ones) - Real(n) * share));
    out.labels.push_back(word[n]);
    if (word[n] == Letter::one) ++ones;
  }
  return out;
}

RauzyApprox fractal_points(const DirectiveSequence& seq, const DirectionVec& u, std::size_t depth, Letter seed,
                           const GenerationLimits& limits) {
  auto out = fractal_points_of_word(limit_word_prefix(seq, seed, depth, limits), u);
  out.seed = seed;
  return out;
}

ExchangeMap ExchangeMap::from_share(const Real& share) { return {Real(1) - share, -share}; }

ExchangeMap ExchangeMap::from_direction(const DirectionVec& u) { return from_share(u.first_share()); }

Real exchange(const ExchangeMap& map, const Real& x, Letter label) { return x + map.translation(label); }

RotationFactor rotation_factor(const DirectionVec& u) {
  if (!(u.x() > 0 && u.y() > 0)) throw std::invalid_argument("rotation factor needs a positive u");
  RotationFactor out;
  out.map = ExchangeMap::from_direction(u);
  out.angle = fractional_part(out.map.t1);
  out.independence = rational_independence(u);
  out.rational = out.independence.status == Independence::dependent;
  return out;
}

OrbitReport orbit_vs_shift(const DirectiveSequence& seq, const DirectionVec& u, std::size_t steps,
                           const OrbitOptions& options) {
  OrbitReport report;
  report.steps = steps;
  report.angle = rotation_factor(u).angle;
  if (!options.coincidence_verified)
    report.warning = "strong coincidence not verified; the exchange of pieces may be ill-defined";
  if (steps == 0) return report;

  const std::size_t depth = std::max(steps * std::max<std::size_t>(options.reference_factor, 1), steps + 1);
  const RauzyApprox reference = fractal_points(seq, u, depth, options.seed, options.limits);

  std::vector<std::size_t> order(reference.pi0.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return reference.pi0[a] < reference.pi0[b]; });
  std::vector<double> sorted(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) sorted[j] = reference.pi0[order[j]];

  auto label_of = [&](double x) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    std::size_t j = static_cast<std::size_t>(it - sorted.begin());
    if (j == sorted.size()) j = sorted.size() - 1;
    else if (j > 0 && x - sorted[j - 1] < sorted[j] - x) j -= 1;
    return reference.labels[order[j]];
  };

  const ExchangeMap map = ExchangeMap::from_share(u.first_share() + Real(options.perturbation));
  Real x = 0;
  for (std::size_t n = 0; n < steps; ++n) {
    const Letter label = label_of(static_cast<double>(x));
    if (label != reference.labels[n]) {
      ++report.mismatches;
      if (!report.first_mismatch) report.first_mismatch = n;
      if (report.positions.size() < 100) report.positions.push_back(n);
    }
    x = exchange(map, x, label);
  }
  return report;
}

OverlapEstimate subtile_overlap(const RauzyApprox& approx, double bin_width, std::int64_t bound) {
  if (approx.pi0.empty()) throw std::invalid_argument("empty fractal approximation");
  if (!(bin_width > 0)) throw std::invalid_argument("bin width must be positive");
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  OverlapEstimate out;
  out.bin_width = bin_width;
  out.bound = bound;
  const double lo = -static_cast<double>(bound);
  const double span = 2.0 * static_cast<double>(bound);
  out.bins = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(span / bin_width)));
  std::vector<std::uint8_t> seen(out.bins, 0);
  for (std::size_t j = 0; j < approx.pi0.size(); ++j) {
    const double x = approx.pi0[j];
    if (x < lo || x > -lo) {
      ++out.outside;
      continue;
    }
    auto b = static_cast<std::size_t>((x - lo) / bin_width);
    if (b >= out.bins) b = out.bins - 1;
    seen[b] |= approx.labels[j] == Letter::one ? 1 : 2;
  }
  std::size_t both = 0;
  std::size_t any = 0;
  for (auto s : seen) {
    both += s == 3;
    any += s != 0;
  }
  out.overlap = static_cast<double>(both) * bin_width;
  out.support = static_cast<double>(any) * bin_width;
  return out;
}

ZWalk zwalk(const Word& u_word, const Word& v_word, const DirectionVec& u, std::size_t steps,
            std::optional<std::int64_t> bound) {
  if (u_word.size() < steps || v_word.size() < steps) throw std::length_error("zwalk needs words of length >= N");
  ZWalk out;
  out.z.reserve(steps + 1);
  const Real share = u.first_share();
  std::int64_t ones_u = 0;
  std::int64_t ones_v = 0;
  bool left_zero = false;
  int last_sign = 0;
  for (std::size_t n = 0; n <= steps; ++n) {
    const Real len(static_cast<std::int64_t>(n));
    const Real diff = (Real(ones_u) - len * share) - (Real(ones_v) - len * share);
    const auto z = static_cast<std::int64_t>(llround(static_cast<double>(diff)));
    if (!out.z.empty()) {
      const std::int64_t step = z - out.z.back();
      if (step > 1 || step < -1) ++out.step_violations;
    }
    out.z.push_back(z);
    out.max_abs = std::max<std::int64_t>(out.max_abs, z < 0 ? -z : z);
    if (bound && (z < 0 ? -z : z) > *bound) ++out.bound_violations;
    const int sign = (z > 0) - (z < 0);
    if (sign != 0) {
      if (last_sign != 0 && sign != last_sign) ++out.sign_changes;
      last_sign = sign;
      left_zero = true;
    } else if (left_zero && n > 0 && !out.first_return) {
      out.first_return = n;
    }
    if (n < steps) {
      ones_u += u_word[n] == Letter::one;
      ones_v += v_word[n] == Letter::one;
    }
  }
  return out;
}

}  // namespace sadic
