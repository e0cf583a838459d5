#include "sadic/price.hpp"

#include <algorithm>
#include <set>

#include "sadic/errors.hpp"

namespace sadic {

namespace {

std::size_t clip(const DirectiveSequence& seq, std::size_t n) {
  if (auto h = seq.horizon()) return std::min(n, *h);
  return n;
}

ConditionStatus combine(ConditionStatus a, ConditionStatus b) {
  auto rank = [](ConditionStatus s) {
    switch (s) {
      case ConditionStatus::refuted:
        return 0;
      case ConditionStatus::unknown:
        return 1;
      case ConditionStatus::verified_on_window:
        return 2;
      case ConditionStatus::verified:
        return 3;
    }
    return 1;
  };
  return rank(a) < rank(b) ? a : b;
}

RecurrenceCondition recurrence_condition(const DirectiveSequence& seq, const BlockCondition& block,
                                         std::size_t horizon, std::size_t pairs) {
  RecurrenceCondition out;
  const std::size_t p = seq.cycle_length();
  const std::size_t pre = seq.preperiod_length();

  if (seq.mode() == DirectiveSequence::Mode::periodic) {
    // Shifts by multiples of the period match every window.
    const std::size_t l1 = block.ends.empty() ? 1 : block.ends.front();
    for (std::size_t k = 0; k < pairs; ++k) out.pairs.emplace_back((k + 1) * p, l1 + k * p);
    out.status = ConditionStatus::verified;
    return out;
  }

  if (seq.mode() == DirectiveSequence::Mode::eventually_periodic) {
    // Past the preperiod the windows repeat with period p, so n ≤ pre + p is exhaustive.
    for (std::size_t l = 1; l <= pre + 2 * p + 2; ++l) {
      if (recurrence_windows(seq, l, pre + p + l).empty()) {
        out.status = ConditionStatus::refuted;
        out.counterexample = l;
        return out;
      }
    }
    return out;
  }

  std::vector<std::size_t> lengths = block.ends;
  if (lengths.empty())
    for (std::size_t l = 1; l <= pairs; ++l) lengths.push_back(l);
  std::size_t last_n = 0;
  for (std::size_t l : lengths) {
    if (l >= horizon) break;
    auto ns = recurrence_windows(seq, l, horizon);
    auto it = std::upper_bound(ns.begin(), ns.end(), last_n);
    if (it == ns.end()) break;
    out.pairs.emplace_back(*it, l);
    last_n = *it;
  }
  if (!out.pairs.empty() && out.pairs.size() == std::min(lengths.size(), pairs))
    out.status = ConditionStatus::verified_on_window;
  if (out.pairs.size() > pairs) out.pairs.resize(pairs);
  return out;
}

IrreducibilityCondition irreducibility_condition(const DirectiveSequence& seq, const PriceParams& params) {
  IrreducibilityCondition out;
  const std::size_t starts = seq.is_finite() ? 1 : seq.preperiod_length() + seq.cycle_length();
  ConditionStatus status = ConditionStatus::verified_on_window;
  for (std::size_t k = 0; k < starts; ++k) {
    const std::size_t lo = k + params.irreducibility_min;
    const std::size_t hi = clip(seq, k + params.irreducibility_max);
    if (lo > hi) {
      status = combine(status, ConditionStatus::unknown);
      continue;
    }
    auto r = is_algebraically_irreducible(seq, k, lo, hi);
    switch (r.verdict) {
      case WindowVerdict::verified_on_window:
        break;
      case WindowVerdict::refuted:
        status = combine(status, ConditionStatus::refuted);
        break;
      case WindowVerdict::unknown:
        status = combine(status, ConditionStatus::unknown);
        break;
    }
    out.per_start.push_back(std::move(r));
  }
  out.status = out.per_start.empty() ? ConditionStatus::unknown : status;
  return out;
}

BalanceCondition balance_condition(const DirectiveSequence& seq, const RecurrenceCondition& rec,
                                   const PriceParams& params) {
  BalanceCondition out;
  if (rec.pairs.empty()) return out;
  std::set<std::size_t> shifts;
  for (auto [n, l] : rec.pairs) {
    std::size_t m = n + l;
    if (!seq.is_finite() && m >= seq.preperiod_length())
      m = seq.preperiod_length() + (m - seq.preperiod_length()) % seq.cycle_length();
    shifts.insert(m);
  }
  ConditionStatus status = ConditionStatus::verified_on_window;
  for (std::size_t m : shifts) {
    if (seq.is_finite() && m >= *seq.horizon()) {
      status = ConditionStatus::unknown;
      continue;
    }
    auto cert = balance(seq, m, params.balance_length, std::nullopt, params.limits);
    if (cert.status != BalanceStatus::certified) status = ConditionStatus::unknown;
    out.constant = std::max(out.constant, cert.constant);
    out.certificates.push_back(std::move(cert));
  }
  out.status = status;
  return out;
}

EigenvectorCondition eigenvector_condition(const DirectiveSequence& seq, const BlockCondition& block,
                                           const RecurrenceCondition& rec, const PriceParams& params) {
  EigenvectorCondition out;
  if (block.block) {
    if (auto left = perron_direction(block.block->transpose())) {
      out.v = *left;
      out.v_source = "left-perron-of-block";
    }
  }
  if (!out.v) {
    out.v = ones_direction();
    out.v_source = "ones";
  }
  std::vector<std::size_t> indices;
  for (auto [n, l] : rec.pairs) indices.push_back(n);
  if (indices.empty()) return out;
  out.trace = left_vector_trace(seq, *out.v, indices);
  if (out.trace.entries.back().angle < params.trace_tolerance) out.status = ConditionStatus::verified_on_window;
  return out;
}

}  // namespace

BlockCondition find_repeated_block(const DirectiveSequence& seq, std::size_t horizon, std::size_t pairs) {
  BlockCondition out;
  horizon = clip(seq, horizon);
  for (std::size_t h = 1; h <= horizon; ++h) {
    for (std::size_t l1 = h; l1 <= horizon; ++l1) {
      const Mat2 b = seq.product(l1 - h, l1);
      if (!b.is_positive()) continue;
      if (!seq.is_finite() && l1 - h >= seq.preperiod_length()) {
        // Inside the periodic part the block recurs every cycle.
        out.status = ConditionStatus::verified;
        out.block = b;
        out.h = h;
        for (std::size_t k = 0; k < pairs; ++k) out.ends.push_back(l1 + k * seq.cycle_length());
        return out;
      }
      std::vector<std::size_t> ends{l1};
      for (std::size_t l = l1 + 1; l <= horizon && ends.size() < pairs; ++l)
        if (seq.product(l - h, l) == b) ends.push_back(l);
      if (ends.size() >= 2) {
        out.status = ConditionStatus::verified_on_window;
        out.block = b;
        out.h = h;
        out.ends = std::move(ends);
        return out;
      }
    }
  }
  return out;
}

PriceReport price_report(const DirectiveSequence& seq, const PriceParams& params) {
  PriceReport report;
  const std::size_t horizon = clip(seq, params.horizon);
  report.primitivity = find_repeated_block(seq, horizon, params.pairs);
  report.recurrence = recurrence_condition(seq, report.primitivity, horizon, params.pairs);
  report.irreducibility = irreducibility_condition(seq, params);
  report.balance = balance_condition(seq, report.recurrence, params);
  report.eigenvector = eigenvector_condition(seq, report.primitivity, report.recurrence, params);
  return report;
}

std::string to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::verified:
      return "verified";
    case ConditionStatus::verified_on_window:
      return "verified-on-window";
    case ConditionStatus::refuted:
      return "refuted";
    case ConditionStatus::unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace sadic
