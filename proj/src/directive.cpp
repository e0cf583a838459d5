#include "sadic/directive.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "sadic/errors.hpp"

namespace sadic {

/// Memoized rows M_{[k,k+j)}, keyed by the canonical start index (start
/// indices inside the periodic part are reduced modulo the cycle length).
class ProductCache {
 public:
  Mat2 product(const DirectiveSequence& seq, std::size_t k, std::size_t l) {
    const std::size_t key = canonical(seq, k);
    const std::size_t len = l - k;
    {
      std::shared_lock lock(mutex_);
      auto it = rows_.find(key);
      if (it != rows_.end() && it->second.size() > len) return it->second[len];
    }
    std::unique_lock lock(mutex_);
    auto& row = rows_[key];
    if (row.empty()) row.push_back(Mat2::identity());
    while (row.size() <= len) {
      const std::size_t j = row.size() - 1;
      row.push_back(row.back() * seq.at(key + j).incidence());
    }
    return row[len];
  }

 private:
  static std::size_t canonical(const DirectiveSequence& seq, std::size_t k) {
    if (seq.is_finite() || k < seq.pre_.size()) return k;
    return seq.pre_.size() + (k - seq.pre_.size()) % seq.cycle_.size();
  }

  std::shared_mutex mutex_;
  std::map<std::size_t, std::vector<Mat2>> rows_;
};

namespace {

std::size_t intern(std::vector<Substitution>& distinct, const Substitution& s) {
  auto it = std::find(distinct.begin(), distinct.end(), s);
  if (it != distinct.end()) return static_cast<std::size_t>(it - distinct.begin());
  distinct.push_back(s);
  return distinct.size() - 1;
}

/// Shortest d with cycle[i] == cycle[i mod d].
void reduce_to_primitive_root(std::vector<std::size_t>& cycle) {
  const std::size_t p = cycle.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = cycle[i] == cycle[i % d];
    if (ok) {
      cycle.resize(d);
      return;
    }
  }
}

}  // namespace

DirectiveSequence::DirectiveSequence(Mode mode, std::vector<Substitution> pre, std::vector<Substitution> cycle)
    : mode_(mode), cache_(std::make_shared<ProductCache>()) {
  for (const auto& s : pre) pre_.push_back(intern(distinct_, s));
  for (const auto& s : cycle) cycle_.push_back(intern(distinct_, s));
  if (mode_ == Mode::finite_window) return;
  reduce_to_primitive_root(cycle_);
  while (!pre_.empty() && pre_.back() == cycle_.back()) {
    pre_.pop_back();
    std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
  }
  if (pre_.empty()) mode_ = Mode::periodic;
}

DirectiveSequence DirectiveSequence::periodic(std::vector<Substitution> cycle) {
  if (cycle.empty()) throw std::invalid_argument("periodic directive sequence needs a non-empty cycle");
  return {Mode::periodic, {}, std::move(cycle)};
}

DirectiveSequence DirectiveSequence::eventually_periodic(std::vector<Substitution> preperiod,
                                                         std::vector<Substitution> cycle) {
  if (cycle.empty()) throw std::invalid_argument("eventually periodic directive sequence needs a non-empty cycle");
  return {Mode::eventually_periodic, std::move(preperiod), std::move(cycle)};
}

DirectiveSequence DirectiveSequence::finite_window(std::vector<Substitution> prefix) {
  if (prefix.empty()) throw std::invalid_argument("finite-window directive sequence needs a non-empty prefix");
  return {Mode::finite_window, std::move(prefix), {}};
}

std::optional<std::size_t> DirectiveSequence::horizon() const {
  if (is_finite()) return pre_.size();
  return std::nullopt;
}

std::size_t DirectiveSequence::id(std::size_t n) const {
  if (n < pre_.size()) return pre_[n];
  if (cycle_.empty()) throw HorizonExceeded(n, pre_.size());
  return cycle_[(n - pre_.size()) % cycle_.size()];
}

void DirectiveSequence::require_within(std::size_t end) const {
  if (is_finite() && end > pre_.size()) throw HorizonExceeded(end - 1, pre_.size());
}

Mat2 DirectiveSequence::product(std::size_t k, std::size_t l) const {
  if (k > l) throw std::invalid_argument("product_matrix requires k <= l");
  require_within(l);
  return cache_->product(*this, k, l);
}

BigInt DirectiveSequence::image_length(std::size_t k, std::size_t l, Letter a) const {
  return product(k, l).column_sum(slot(a));
}

void DirectiveSequence::for_each_image_letter(std::size_t k, std::size_t l, Letter a,
                                              const std::function<bool(Letter)>& visit) const {
  ImageCursor cursor(*this, k, l, a);
  while (auto x = cursor.next())
    if (!visit(*x)) return;
}

Word DirectiveSequence::image_prefix(std::size_t k, std::size_t l, Letter a, std::size_t length) const {
  Word out;
  if (length == 0) return out;
  ImageCursor cursor(*this, k, l, a);
  while (out.size() < length) {
    auto x = cursor.next();
    if (!x) break;
    out.push_back(*x);
  }
  return out;
}

Word DirectiveSequence::image(std::size_t k, std::size_t l, Letter a, std::size_t max_length) const {
  const BigInt len = image_length(k, l, a);
  if (len > max_length)
    throw std::length_error("image of length " + len.str() + " exceeds the materialization cap " +
                            std::to_string(max_length));
  Word out;
  out.reserve(static_cast<std::size_t>(len));
  ImageCursor cursor(*this, k, l, a);
  while (auto x = cursor.next()) out.push_back(*x);
  return out;
}

std::string DirectiveSequence::describe() const {
  auto list = [&](const std::vector<std::size_t>& ids) {
    std::string out = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i) out += "; ";
      out += distinct_[ids[i]].str();
    }
    return out + "]";
  };
  switch (mode_) {
    case Mode::periodic:
      return "periodic " + list(cycle_);
    case Mode::eventually_periodic:
      return "prefix " + list(pre_) + " cycle " + list(cycle_);
    case Mode::finite_window:
      return "window " + list(pre_);
  }
  return {};
}

ImageCursor::ImageCursor(const DirectiveSequence& seq, std::size_t k, std::size_t l, Letter a)
    : seq_(&seq), k_(k) {
  if (k > l) throw std::invalid_argument("image requires k <= l");
  seq.require_within(l);
  if (k == l) {
    pending_ = a;
  } else {
    stack_.push_back({l - 1, &seq.at(l - 1).image(a), 0});
  }
}

std::optional<Letter> ImageCursor::next() {
  if (pending_) {
    auto out = pending_;
    pending_.reset();
    return out;
  }
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (top.pos == top.word->size()) {
      stack_.pop_back();
      continue;
    }
    const Letter x = (*top.word)[top.pos++];
    const std::size_t level = top.level;
    if (level == k_) return x;
    stack_.push_back({level - 1, &seq_->at(level - 1).image(x), 0});
  }
  return std::nullopt;
}

PrimitivityResult is_primitive(const DirectiveSequence& seq, std::size_t k, std::size_t horizon) {
  if (horizon <= k) throw std::invalid_argument("is_primitive requires horizon > k");
  seq.require_within(horizon);
  PrimitivityResult result;
  result.k = k;
  result.horizon = horizon;
  for (std::size_t l = k + 1; l <= horizon; ++l) {
    if (seq.product(k, l).is_positive()) {
      result.positive_at = l;
      break;
    }
  }
  if (!result.positive_at || seq.is_finite()) return result;

  // Every start index behaves like one of the first pre + p, so checking
  // those with the same budget settles all k.
  const std::size_t budget = horizon - k;
  const std::size_t starts = seq.preperiod_length() + seq.cycle_length();
  bool all = true;
  for (std::size_t s = 0; s < starts && all; ++s) {
    bool found = false;
    for (std::size_t l = s + 1; l <= s + budget && !found; ++l) found = seq.product(s, l).is_positive();
    all = found;
  }
  result.holds_for_all_k = all;
  return result;
}

IrreducibilityResult is_algebraically_irreducible(const DirectiveSequence& seq, std::size_t k,
                                                  std::size_t l_min, std::size_t l_max) {
  if (k > l_min || l_min > l_max)
    throw std::invalid_argument("irreducibility window requires k <= l_min <= l_max");
  seq.require_within(l_max);
  IrreducibilityResult result;
  result.k = k;
  result.l_min = l_min;
  result.l_max = l_max;
  const std::size_t first = std::max(l_min, k + 1);
  if (first > l_max) return result;
  for (std::size_t l = first; l <= l_max; ++l) {
    const Mat2 m = seq.product(k, l);
    if (!has_irreducible_charpoly(m)) result.reducible_at.push_back(l);
    if (l == l_max) result.last_discriminant = m.discriminant();
  }
  const auto& red = result.reducible_at;
  if (red.empty()) {
    result.verdict = WindowVerdict::verified_on_window;
  } else if (red.back() == l_max && (first == l_max || (red.size() >= 2 && red[red.size() - 2] == l_max - 1))) {
    result.verdict = WindowVerdict::refuted;
  }
  return result;
}

std::vector<std::size_t> recurrence_windows(const DirectiveSequence& seq, std::size_t length,
                                            std::size_t horizon) {
  if (length == 0) throw std::invalid_argument("recurrence window length must be >= 1");
  seq.require_within(horizon);
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n + length <= horizon; ++n) {
    bool match = true;
    for (std::size_t j = 0; j < length && match; ++j) match = seq.id(n + j) == seq.id(j);
    if (match) out.push_back(n);
  }
  return out;
}

std::string to_string(WindowVerdict v) {
  switch (v) {
    case WindowVerdict::verified_on_window:
      return "verified-on-window";
    case WindowVerdict::refuted:
      return "refuted";
    case WindowVerdict::unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace sadic
