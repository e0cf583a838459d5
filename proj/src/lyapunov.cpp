#include "sadic/lyapunov.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace sadic {

namespace {

constexpr double kStochasticTolerance = 1e-9;

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t pick(const std::vector<double>& cumulative, double u) {
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u * cumulative.back());
  std::size_t j = static_cast<std::size_t>(it - cumulative.begin());
  if (j >= cumulative.size()) j = cumulative.size() - 1;
  // Skip zero-weight slots that a boundary draw could land on.
  while (j > 0 && cumulative[j] == cumulative[j - 1]) --j;
  return j;
}

void require_distribution(const std::vector<double>& w, const std::string& what) {
  if (w.empty()) throw std::invalid_argument(what + " is empty");
  double sum = 0;
  for (double x : w) {
    if (!(x >= 0) || !std::isfinite(x)) throw std::invalid_argument(what + " has a negative or non-finite weight");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kStochasticTolerance)
    throw std::invalid_argument(what + " sums to " + std::to_string(sum) + ", not 1");
}

std::vector<double> cumulate(const std::vector<double>& w) {
  std::vector<double> c(w.size());
  double acc = 0;
  for (std::size_t j = 0; j < w.size(); ++j) c[j] = acc += w[j];
  return c;
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

using Mat = std::array<double, 4>;

struct SampleResult {
  double theta1 = 0;
  double theta2 = 0;
};

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

SequenceModel SequenceModel::iid(std::vector<NamedSubstitution> set, std::vector<double> weights) {
  if (weights.size() != set.size()) throw std::invalid_argument("iid model needs one weight per substitution");
  require_distribution(weights, "iid weights");
  SequenceModel m;
  m.kind_ = Kind::iid;
  m.set_ = std::move(set);
  m.states_ = 1;
  for (std::size_t j = 0; j < weights.size(); ++j) m.edges_.push_back({0, 0, j, weights[j]});
  m.initial_ = {1.0};
  m.finish();
  return m;
}

SequenceModel SequenceModel::markov(std::vector<NamedSubstitution> set, std::vector<std::vector<double>> transitions,
                                    std::vector<double> initial) {
  const std::size_t k = set.size();
  if (transitions.size() != k) throw std::invalid_argument("markov model needs one transition row per substitution");
  if (initial.size() != k) throw std::invalid_argument("markov initial law needs one weight per substitution");
  require_distribution(initial, "markov initial law");
  SequenceModel m;
  m.kind_ = Kind::markov;
  m.set_ = std::move(set);
  m.states_ = k;
  for (std::size_t s = 0; s < k; ++s) {
    if (transitions[s].size() != k) throw std::invalid_argument("markov transition row has the wrong length");
    require_distribution(transitions[s], "markov transition row " + std::to_string(s));
    for (std::size_t t = 0; t < k; ++t) m.edges_.push_back({s, t, t, transitions[s][t]});
  }
  m.initial_ = std::move(initial);
  m.finish();
  return m;
}

SequenceModel SequenceModel::sofic(std::vector<NamedSubstitution> set, std::size_t states, std::vector<Edge> edges,
                                   std::vector<double> initial) {
  if (states == 0) throw std::invalid_argument("sofic model needs at least one state");
  SequenceModel m;
  m.kind_ = Kind::sofic;
  m.set_ = std::move(set);
  m.states_ = states;
  std::vector<std::vector<double>> out(states);
  for (const auto& e : edges) {
    if (e.from >= states || e.to >= states) throw std::invalid_argument("sofic edge refers to an unknown state");
    if (e.label >= m.set_.size()) throw std::invalid_argument("sofic edge refers to an unknown substitution");
    out[e.from].push_back(e.weight);
  }
  for (std::size_t s = 0; s < states; ++s) require_distribution(out[s], "out-weights of state " + std::to_string(s));
  if (initial.empty()) initial.assign(states, 1.0 / static_cast<double>(states));
  if (initial.size() != states) throw std::invalid_argument("sofic initial law needs one weight per state");
  require_distribution(initial, "sofic initial law");
  m.edges_ = std::move(edges);
  m.initial_ = std::move(initial);
  m.finish();
  return m;
}

void SequenceModel::finish() {
  if (set_.empty()) throw std::invalid_argument("model has no substitutions");
  for (const auto& s : set_)
    if (s.substitution.incidence().det() == 0)
      throw std::invalid_argument("substitution '" + s.name + "' has a singular incidence matrix");
  out_edges_.assign(states_, {});
  cumulative_.assign(states_, {});
  for (std::size_t e = 0; e < edges_.size(); ++e) out_edges_[edges_[e].from].push_back(e);
  for (std::size_t s = 0; s < states_; ++s) {
    std::vector<double> w;
    for (std::size_t e : out_edges_[s]) w.push_back(edges_[e].weight);
    cumulative_[s] = cumulate(w);
  }
  initial_cumulative_ = cumulate(initial_);
}

void SequenceModel::walk(std::size_t length, std::mt19937_64& rng,
                         const std::function<void(std::size_t)>& visit) const {
  if (length == 0) return;
  std::size_t state = pick(initial_cumulative_, uniform01(rng));
  std::size_t remaining = length;
  if (kind_ == Kind::markov) {
    visit(state);
    --remaining;
  }
  for (; remaining > 0; --remaining) {
    const auto& e = edges_[out_edges_[state][pick(cumulative_[state], uniform01(rng))]];
    visit(e.label);
    state = e.to;
  }
}

std::vector<std::size_t> SequenceModel::sample_path(std::size_t length, std::uint64_t seed) const {
  std::mt19937_64 rng(splitmix64(seed));
  std::vector<std::size_t> path;
  path.reserve(length);
  walk(length, rng, [&](std::size_t label) { path.push_back(label); });
  return path;
}

bool SequenceModel::is_unimodular() const {
  return std::all_of(set_.begin(), set_.end(), [](const auto& s) { return s.substitution.is_unimodular(); });
}

bool SequenceModel::strongly_connected() const {
  auto reaches_all = [&](bool reverse) {
    std::vector<char> seen(states_, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const std::size_t s = stack.back();
      stack.pop_back();
      for (const auto& e : edges_) {
        if (!(e.weight > 0)) continue;
        const std::size_t a = reverse ? e.to : e.from;
        const std::size_t b = reverse ? e.from : e.to;
        if (a == s && !seen[b]) {
          seen[b] = 1;
          stack.push_back(b);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  };
  return reaches_all(false) && reaches_all(true);
}

bool SequenceModel::cylinder_positive() const { return strongly_connected(); }

bool SequenceModel::has_positive_matrix_cylinder() const {
  auto positive = [&](std::size_t label) { return set_[label].substitution.incidence().is_positive(); };
  for (const auto& e : edges_)
    if (e.weight > 0 && positive(e.label)) return true;
  if (kind_ == Kind::markov)
    for (std::size_t s = 0; s < states_; ++s)
      if (initial_[s] > 0 && positive(s)) return true;
  return false;
}

std::vector<Substitution> sample_sequence(const SequenceModel& model, std::size_t length, std::uint64_t seed) {
  std::vector<Substitution> out;
  out.reserve(length);
  for (std::size_t label : model.sample_path(length, seed)) out.push_back(model.substitutions()[label].substitution);
  return out;
}

LyapEstimate estimate_exponents(const SequenceModel& model, std::size_t length, std::size_t samples,
                                std::uint64_t seed, const LyapunovOptions& options) {
  if (length == 0 || samples == 0) throw std::invalid_argument("length and samples must be positive");
  std::vector<Mat> mats;
  for (const auto& s : model.substitutions()) {
    const Mat2 m = s.substitution.incidence();
    auto at = [&](int i, int j) { return static_cast<double>(options.transposed ? m(j, i) : m(i, j)); };
    mats.push_back({at(0, 0), at(0, 1), at(1, 0), at(1, 1)});
  }
  const std::size_t every = std::max<std::size_t>(options.renormalize_every, 1);

  auto run_sample = [&](std::size_t index) {
    std::mt19937_64 rng(derive_seed(seed, index));
    const double a = 2.0 * std::numbers::pi * uniform01(rng);
    double x1 = std::cos(a), y1 = std::sin(a);
    double x2 = -y1, y2 = x1;
    double log1 = 0, log2 = 0;
    std::size_t since = 0;
    std::size_t taken = 0;
    auto renormalize = [&] {
      const double r11 = std::hypot(x1, y1);
      x1 /= r11;
      y1 /= r11;
      const double p = x1 * x2 + y1 * y2;
      x2 -= p * x1;
      y2 -= p * y1;
      const double r22 = std::hypot(x2, y2);
      x2 /= r22;
      y2 /= r22;
      log1 += std::log(r11);
      log2 += std::log(r22);
      since = 0;
    };
    // The frame first aligns with the Oseledets directions during the burn-in,
    // whose growth is discarded.
    const std::size_t burn = options.burn_in;
    model.walk(length + burn, rng, [&](std::size_t label) {
      const Mat& m = mats[label];
      const double nx1 = m[0] * x1 + m[1] * y1, ny1 = m[2] * x1 + m[3] * y1;
      const double nx2 = m[0] * x2 + m[1] * y2, ny2 = m[2] * x2 + m[3] * y2;
      x1 = nx1, y1 = ny1, x2 = nx2, y2 = ny2;
      if (++taken == burn) {
        renormalize();
        log1 = log2 = 0;
        return;
      }
      if (++since >= every) {
        renormalize();
        return;
      }
      // Renormalize early before the frame overflows or collapses onto one direction.
      const double n1 = std::max(std::abs(x1), std::abs(y1));
      const double n2 = std::max(std::abs(x2), std::abs(y2));
      if (n1 > 1e100 || n2 > 1e100 || std::abs(x1 * y2 - y1 * x2) < 1e-6 * n1 * n2) renormalize();
    });
    renormalize();
    const double n = static_cast<double>(length);
    return SampleResult{log1 / n, log2 / n};
  };

  std::vector<SampleResult> results(samples);
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(samples)));
  if (workers == 1) {
    for (std::size_t i = 0; i < samples; ++i) results[i] = run_sample(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < samples; i += workers) results[i] = run_sample(i);
      });
    for (auto& t : pool) t.join();
  }

  // Reduction in sample order keeps the result independent of the thread count.
  auto summarize = [&](auto field) {
    double mean = 0;
    for (const auto& r : results) mean += field(r);
    mean /= static_cast<double>(samples);
    double var = 0;
    for (const auto& r : results) var += (field(r) - mean) * (field(r) - mean);
    var = samples > 1 ? var / static_cast<double>(samples - 1) : 0.0;
    const double floor = 64.0 * DBL_EPSILON * (std::abs(mean) + 1.0);
    return std::pair{mean, std::sqrt(var / static_cast<double>(samples) + floor * floor)};
  };
  LyapEstimate est;
  std::tie(est.theta1, est.stderr1) = summarize([](const SampleResult& r) { return r.theta1; });
  std::tie(est.theta2, est.stderr2) = summarize([](const SampleResult& r) { return r.theta2; });
  est.samples = samples;
  est.length = length;
  est.seed = seed;
  est.transposed = options.transposed;
  est.pisot = pisot_verdict(est);
  return est;
}

PisotVerdict pisot_verdict(double theta1, double stderr1, double theta2, double stderr2) {
  if (theta1 - 3 * stderr1 > 0 && theta2 + 3 * stderr2 < 0) return PisotVerdict::satisfied;
  if (theta1 + 3 * stderr1 < 0 || theta2 - 3 * stderr2 > 0) return PisotVerdict::violated;
  return PisotVerdict::inconclusive;
}

PisotVerdict pisot_verdict(const LyapEstimate& est) {
  return pisot_verdict(est.theta1, est.stderr1, est.theta2, est.stderr2);
}

std::string to_string(PisotVerdict v) {
  switch (v) {
    case PisotVerdict::satisfied:
      return "satisfied";
    case PisotVerdict::violated:
      return "violated";
    case PisotVerdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(SequenceModel::Kind k) {
  switch (k) {
    case SequenceModel::Kind::iid:
      return "iid";
    case SequenceModel::Kind::markov:
      return "markov";
    case SequenceModel::Kind::sofic:
      return "sofic";
  }
  return "iid";
}

}  // namespace sadic
