#include "sadic/language.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "sadic/errors.hpp"

namespace sadic {

namespace {

std::size_t depth_end(const DirectiveSequence& seq, std::size_t start, const GenerationLimits& limits) {
  if (auto h = seq.horizon()) return *h;
  return start + limits.max_depth;
}

bool image_fits(const DirectiveSequence& seq, std::size_t k, std::size_t l, const GenerationLimits& limits) {
  for (Letter a : kLetters)
    if (seq.image_length(k, l, a) > limits.max_image_length) return false;
  return true;
}

std::size_t min_image_length(const DirectiveSequence& seq, std::size_t k, std::size_t l) {
  BigInt m = std::min(seq.image_length(k, l, Letter::one), seq.image_length(k, l, Letter::two));
  return m > std::numeric_limits<std::size_t>::max() ? std::numeric_limits<std::size_t>::max()
                                                     : static_cast<std::size_t>(m);
}

}  // namespace

Word limit_word_prefix(const DirectiveSequence& seq, Letter seed, std::size_t length,
                       const GenerationLimits& limits) {
  if (length == 0) return {};
  // On two letters the first-letter dynamics has period dividing 2, so two
  // full cycles is the right comparison distance for periodic sequences.
  const std::size_t step = seq.is_finite() ? 1 : 2 * seq.cycle_length();
  const std::size_t end = depth_end(seq, 0, limits);
  bool reached_length = false;
  for (std::size_t n = 1; n + step <= end; ++n) {
    if (seq.image_length(0, n, seed) < length || seq.image_length(0, n + step, seed) < length) continue;
    reached_length = true;
    Word here = seq.image_prefix(0, n, seed, length);
    if (here == seq.image_prefix(0, n + step, seed, length)) return here;
  }
  if (seq.is_finite() && !reached_length) throw HorizonExceeded(end, end);
  throw NonStabilizing("limit-word prefix of length " + std::to_string(length) + " seeded at letter " +
                       std::string(1, to_char(seed)) + " did not stabilize within depth " + std::to_string(end));
}

bool FactorSet::contains(const std::string& w) const {
  if (w.size() >= by_length.size()) return false;
  const auto& bucket = by_length[w.size()];
  return std::binary_search(bucket.begin(), bucket.end(), w);
}

std::size_t FactorSet::total() const {
  std::size_t n = 0;
  for (const auto& b : by_length) n += b.size();
  return n;
}

namespace {

using Buckets = std::vector<std::unordered_set<std::string>>;

void add_factors(const std::string& w, std::size_t max_length, Buckets& buckets) {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    const std::size_t top = std::min(max_length, w.size() - pos);
    for (std::size_t n = 1; n <= top; ++n) buckets[n].insert(w.substr(pos, n));
  }
}

std::size_t bucket_total(const Buckets& b) {
  std::size_t n = 0;
  for (const auto& s : b) n += s.size();
  return n;
}

void fill(FactorSet& out, Buckets& buckets) {
  out.by_length.resize(buckets.size());
  for (std::size_t n = 0; n < buckets.size(); ++n) {
    out.by_length[n].assign(buckets[n].begin(), buckets[n].end());
    std::sort(out.by_length[n].begin(), out.by_length[n].end());
  }
}

}  // namespace

FactorSet factors(const DirectiveSequence& seq, std::size_t shift, std::size_t max_length,
                  const GenerationLimits& limits) {
  FactorSet out;
  out.shift = shift;
  out.max_length = max_length;
  Buckets buckets(max_length + 1);
  buckets[0].insert("");
  const std::size_t end = depth_end(seq, shift, limits);
  std::size_t previous = bucket_total(buckets);
  int unchanged = 0;
  for (std::size_t n = shift + 1; n <= end; ++n) {
    if (!image_fits(seq, shift, n, limits)) break;
    for (Letter a : kLetters) add_factors(seq.image(shift, n, a, limits.max_image_length).str(), max_length, buckets);
    const std::size_t now = bucket_total(buckets);
    unchanged = (now == previous && min_image_length(seq, shift, n) >= max_length) ? unchanged + 1 : 0;
    previous = now;
    out.depth = n;
    if (unchanged >= 2) {
      out.saturated = true;
      break;
    }
  }
  fill(out, buckets);
  return out;
}

FactorSet factors_of_word(const Word& w, std::size_t max_length) {
  FactorSet out;
  out.max_length = max_length;
  out.saturated = true;
  Buckets buckets(max_length + 1);
  buckets[0].insert("");
  add_factors(w.str(), max_length, buckets);
  fill(out, buckets);
  return out;
}

namespace {

struct Extremes {
  std::vector<std::int64_t> lo, hi;
  std::vector<std::string> lo_word, hi_word;

  explicit Extremes(std::size_t L)
      : lo(L + 1, std::numeric_limits<std::int64_t>::max()),
        hi(L + 1, std::numeric_limits<std::int64_t>::min()),
        lo_word(L + 1),
        hi_word(L + 1) {}

  void scan(const std::string& w, std::size_t L) {
    std::vector<std::int64_t> ones(w.size() + 1, 0);
    for (std::size_t i = 0; i < w.size(); ++i) ones[i + 1] = ones[i] + (w[i] == '1');
    const std::size_t top = std::min(L, w.size());
    for (std::size_t n = 1; n <= top; ++n) {
      for (std::size_t pos = 0; pos + n <= w.size(); ++pos) {
        const std::int64_t c = ones[pos + n] - ones[pos];
        if (c < lo[n]) {
          lo[n] = c;
          lo_word[n] = w.substr(pos, n);
        }
        if (c > hi[n]) {
          hi[n] = c;
          hi_word[n] = w.substr(pos, n);
        }
      }
    }
  }
};

}  // namespace

BalanceCertificate balance(const DirectiveSequence& seq, std::size_t shift, std::size_t max_length,
                           std::optional<std::int64_t> target, const GenerationLimits& limits) {
  if (max_length == 0) throw std::invalid_argument("balance requires a length cap >= 1");
  BalanceCertificate cert;
  cert.shift = shift;
  cert.max_length = max_length;
  cert.target = target;
  Extremes ext(max_length);
  const std::size_t end = depth_end(seq, shift, limits);
  int unchanged = 0;
  for (std::size_t n = shift + 1; n <= end; ++n) {
    if (!image_fits(seq, shift, n, limits)) break;
    const auto before_lo = ext.lo;
    const auto before_hi = ext.hi;
    for (Letter a : kLetters) ext.scan(seq.image(shift, n, a, limits.max_image_length).str(), max_length);
    const bool same = before_lo == ext.lo && before_hi == ext.hi;
    unchanged = (same && min_image_length(seq, shift, n) >= max_length) ? unchanged + 1 : 0;
    cert.depth = n;
    if (unchanged >= 2) {
      cert.status = BalanceStatus::certified;
      break;
    }
  }

  cert.min_ones.assign(max_length + 1, 0);
  cert.max_ones.assign(max_length + 1, 0);
  std::size_t arg = 0;
  std::size_t first_over = 0;
  for (std::size_t n = 1; n <= max_length; ++n) {
    if (ext.hi[n] < ext.lo[n]) continue;  // length never observed
    cert.min_ones[n] = ext.lo[n];
    cert.max_ones[n] = ext.hi[n];
    const std::int64_t d = ext.hi[n] - ext.lo[n];
    if (arg == 0 || d > cert.constant) {
      arg = n;
      cert.constant = d;
    }
    if (target && d > *target && first_over == 0) first_over = n;
  }
  const std::size_t w = first_over ? first_over : arg;
  if (w) {
    cert.witness_heavy = ext.hi_word[w];
    cert.witness_light = ext.lo_word[w];
  }
  if (cert.status == BalanceStatus::certified && first_over) cert.status = BalanceStatus::refuted;
  return cert;
}

std::string to_string(BalanceStatus s) {
  switch (s) {
    case BalanceStatus::certified:
      return "certified-up-to-L";
    case BalanceStatus::refuted:
      return "refuted";
    case BalanceStatus::unsaturated:
      return "unsaturated";
  }
  return "unsaturated";
}

}  // namespace sadic
