#include "sadic/coincidence.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace sadic {

namespace {

Real dot(const Vec2i& x, const DirectionVec& w) {
  return Real(x.x) * w.x() + Real(x.y) * w.y();
}

Real pairing(const DirectionVec& u, const DirectionVec& w) {
  return u.x() * w.x() + u.y() * w.y();
}

Real vertex_height(const Vec2i& x, const DirectionVec& w, const Real& uw) {
  return dot(x, w) / uw;
}

struct LevelResult {
  bool coincident = false;
  bool truncated = false;
  CoincidenceWitness witness;
};

constexpr std::size_t kPrintablePrefix = 64;

LevelResult scan_level(const DirectiveSequence& seq, std::size_t n, std::size_t max_scan) {
  LevelResult out;
  ImageCursor first(seq, 0, n, Letter::one);
  ImageCursor second(seq, 0, n, Letter::two);
  std::string p1;
  std::string p2;
  Vec2i c1;
  Vec2i c2;
  for (std::size_t pos = 0;; ++pos) {
    auto a = first.next();
    auto b = second.next();
    if (!a || !b) return out;
    if (pos >= max_scan) {
      out.truncated = true;
      return out;
    }
    if (c1 == c2 && *a == *b) {
      out.coincident = true;
      out.witness.n = n;
      out.witness.y = c1;
      out.witness.letter = *a;
      out.witness.prefix_length = pos;
      if (pos <= kPrintablePrefix) {
        out.witness.p1 = p1;
        out.witness.p2 = p2;
      }
      return out;
    }
    c1 += unit(*a);
    c2 += unit(*b);
    if (pos < kPrintablePrefix) {
      p1.push_back(to_char(*a));
      p2.push_back(to_char(*b));
    }
  }
}

}  // namespace

std::string to_string(const GeomSegment& s) {
  return "[(" + std::to_string(s.x.x) + "," + std::to_string(s.x.y) + ")," + to_char(s.i) + "]";
}

std::vector<GeomSegment> e1_image(const Substitution& sigma, const GeomSegment& s) {
  const Vec2i base = sigma.incidence().apply(s.x);
  std::vector<GeomSegment> out;
  out.reserve(sigma.image(s.i).size());
  Vec2i at = base;
  for (Letter j : sigma.image(s.i)) {
    out.push_back({at, j});
    at += unit(j);
  }
  return out;
}

std::vector<GeomSegment> e1_iterate(const DirectiveSequence& seq, std::size_t k, std::size_t l,
                                    const GeomSegment& s, std::size_t max_size) {
  seq.require_within(l);
  std::vector<GeomSegment> current{s};
  for (std::size_t level = l; level > k; --level) {
    const Substitution& sigma = seq.at(level - 1);
    std::vector<GeomSegment> next;
    for (const auto& seg : current) {
      auto image = e1_image(sigma, seg);
      if (next.size() + image.size() > max_size) throw std::length_error("E1 iterate exceeds size limit");
      next.insert(next.end(), image.begin(), image.end());
    }
    current = std::move(next);
  }
  return current;
}

CoincidenceVerdict strong_coincidence(const DirectiveSequence& seq, std::size_t cap,
                                      const CoincidenceOptions& options) {
  seq.require_within(cap);
  CoincidenceVerdict verdict;
  verdict.cap = cap;
  if (cap == 0) return verdict;

  std::vector<LevelResult> results(cap);
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(cap)));
  if (workers == 1) {
    for (std::size_t n = 1; n <= cap; ++n) {
      results[n - 1] = scan_level(seq, n, options.max_scan);
      if (results[n - 1].coincident && !options.all_levels) {
        results.resize(n);
        break;
      }
    }
  } else {
    std::atomic<std::size_t> next{1};
    std::atomic<std::size_t> found{cap + 1};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t n = next++; n <= cap; n = next++) {
          if (!options.all_levels && n > found.load()) break;
          results[n - 1] = scan_level(seq, n, options.max_scan);
          if (results[n - 1].coincident) {
            std::size_t cur = found.load();
            while (n < cur && !found.compare_exchange_weak(cur, n)) {
            }
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (!options.all_levels && found.load() <= cap) results.resize(found.load());
  }

  for (std::size_t idx = 0; idx < results.size(); ++idx) {
    const auto& r = results[idx];
    if (r.truncated) verdict.truncated_levels.push_back(idx + 1);
    if (!r.coincident) continue;
    if (!verdict.witness) verdict.witness = r.witness;
    verdict.coincident = true;
    if (options.all_levels) verdict.coincident_levels.push_back(idx + 1);
  }
  if (!options.all_levels && verdict.witness) verdict.coincident_levels.push_back(verdict.witness->n);
  return verdict;
}

bool e1_sets_intersect(const DirectiveSequence& seq, std::size_t n, std::size_t max_size) {
  auto a = e1_iterate(seq, 0, n, {Vec2i{}, Letter::one}, max_size);
  auto b = e1_iterate(seq, 0, n, {Vec2i{}, Letter::two}, max_size);
  std::unordered_set<GeomSegment, GeomSegmentHash> seen(a.begin(), a.end());
  return std::any_of(b.begin(), b.end(), [&](const GeomSegment& s) { return seen.count(s) > 0; });
}

std::vector<TaggedSegment> configuration_iterate(const DirectiveSequence& seq, const std::vector<GeomSegment>& k,
                                                 std::size_t n, std::size_t max_size) {
  std::vector<TaggedSegment> out;
  for (std::size_t src = 0; src < k.size(); ++src) {
    for (const auto& seg : e1_iterate(seq, 0, n, k[src], max_size)) {
      out.push_back({seg, src});
      if (out.size() > max_size) throw std::length_error("configuration iterate exceeds size limit");
    }
  }
  return out;
}

std::pair<Real, Real> height_interval(const GeomSegment& s, const DirectionVec& u, const DirectionVec& w) {
  const Real uw = pairing(u, w);
  if (uw == 0) throw std::domain_error("u and w are orthogonal");
  return {vertex_height(s.x, w, uw), vertex_height(s.end(), w, uw)};
}

std::optional<std::pair<Real, Real>> common_height_interval(const std::vector<GeomSegment>& segments,
                                                            const DirectionVec& u, const DirectionVec& w) {
  if (segments.empty()) return std::nullopt;
  auto [lo, hi] = height_interval(segments.front(), u, w);
  for (const auto& s : segments) {
    auto [a, b] = height_interval(s, u, w);
    lo = std::max(lo, a);
    hi = std::min(hi, b);
  }
  if (lo < hi) return std::make_pair(lo, hi);
  return std::nullopt;
}

Configuration::Configuration(std::vector<GeomSegment> segments, DirectionVec u, DirectionVec w)
    : segments_(std::move(segments)), u_(std::move(u)), w_(std::move(w)) {
  auto sorted = segments_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("configuration has repeated segments");
  if (!common_height_interval(segments_, u_, w_))
    throw std::invalid_argument("no translate of w-perp meets every segment");
}

std::vector<TaggedSegment> stripe_slice(const std::vector<TaggedSegment>& segments, const DirectionVec& v,
                                        const DirectionVec& u, const Real& t) {
  const Real uv = pairing(u, v);
  if (uv == 0) throw std::domain_error("u and v are orthogonal");
  std::vector<TaggedSegment> out;
  for (const auto& s : segments) {
    const Real a = vertex_height(s.segment.x, v, uv);
    const Real b = vertex_height(s.segment.end(), v, uv);
    if (std::min(a, b) < t && t < std::max(a, b)) out.push_back(s);
  }
  return out;
}

TruncationDomain::TruncationDomain(DirectionVec u, std::int64_t c)
    : u_(std::move(u)), share_(u_.first_share()), c_(c) {
  if (!(u_.x() > 0 && u_.y() > 0)) throw std::invalid_argument("truncation domain needs a positive u");
}

Real TruncationDomain::norm(const Vec2i& x) const {
  const Real v = Real(x.x) - Real(x.x + x.y) * share_;
  return v < 0 ? Real(-v) : v;
}

bool TruncationDomain::contains(const Vec2i& x) const { return norm(x) < Real(c_ + 1); }

std::optional<std::size_t> first_coincidence(const DirectiveSequence& seq, const std::vector<GeomSegment>& k,
                                             const std::vector<std::size_t>& levels, std::size_t max_size) {
  for (std::size_t n : levels) {
    std::unordered_set<GeomSegment, GeomSegmentHash> seen;
    for (const auto& seg : k) {
      auto image = e1_iterate(seq, 0, n, seg, max_size);
      std::unordered_set<GeomSegment, GeomSegmentHash> mine(image.begin(), image.end());
      for (const auto& s : mine)
        if (!seen.insert(s).second) return n;
    }
  }
  return std::nullopt;
}

ExplorerReport explore_configuration(const DirectiveSequence& seq, const Configuration& k, std::size_t n,
                                     std::size_t max_size) {
  ExplorerReport report;
  report.n = n;
  report.iterate = configuration_iterate(seq, k.segments(), n, max_size);
  const DirectionVec& u = k.u();
  const DirectionVec& v = k.w();
  const Real uv = pairing(u, v);

  // The stripe is where every broken line is present.
  std::map<std::size_t, std::pair<Real, Real>> ranges;
  for (const auto& s : report.iterate) {
    const Real a = vertex_height(s.segment.x, v, uv);
    const Real b = vertex_height(s.segment.end(), v, uv);
    auto [it, fresh] = ranges.try_emplace(s.source, std::min(a, b), std::max(a, b));
    if (!fresh) {
      it->second.first = std::min(it->second.first, std::min(a, b));
      it->second.second = std::max(it->second.second, std::max(a, b));
    }
  }
  Real lo = ranges.begin()->second.first;
  Real hi = ranges.begin()->second.second;
  for (const auto& [src, r] : ranges) {
    lo = std::max(lo, r.first);
    hi = std::min(hi, r.second);
  }
  report.stripe = {lo, hi};

  std::vector<std::pair<Vec2i, Real>> vertices;
  {
    std::vector<Vec2i> starts;
    for (const auto& s : report.iterate) starts.push_back(s.segment.x);
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    for (const auto& x : starts) {
      const Real h = vertex_height(x, v, uv);
      if (lo < h && h < hi) vertices.emplace_back(x, h);
    }
  }
  std::sort(vertices.begin(), vertices.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  const Real eps = Real("1e-30") * (abs(hi) + abs(lo) + 1);
  for (std::size_t j = 1; j < vertices.size(); ++j)
    if (abs(vertices[j].second - vertices[j - 1].second) <= eps)
      report.equal_heights.emplace_back(vertices[j - 1].first, vertices[j].first);
  report.vertices = vertices;

  std::vector<Real> cuts{lo};
  for (const auto& vtx : vertices) cuts.push_back(vtx.second);
  cuts.push_back(hi);
  for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
    if (!(cuts[j] < cuts[j + 1])) continue;
    SliceObservation obs;
    obs.t = (cuts[j] + cuts[j + 1]) / 2;
    obs.segments = stripe_slice(report.iterate, v, u, obs.t);
    if (!obs.segments.empty()) {
      Vec2i origin = obs.segments.front().segment.x;
      for (const auto& s : obs.segments) origin = std::min(origin, s.segment.x);
      obs.offset = origin;
      for (const auto& s : obs.segments) obs.shape.push_back({s.segment.x - origin, s.segment.i});
      std::sort(obs.shape.begin(), obs.shape.end());
    }
    report.slices.push_back(std::move(obs));
  }

  for (std::size_t a = 0; a < report.slices.size() && !report.period; ++a) {
    for (std::size_t b = a + 1; b < report.slices.size(); ++b) {
      if (report.slices[a].shape.empty() || report.slices[a].shape != report.slices[b].shape) continue;
      report.period = ExplorerReport::Period{a, b - a, report.slices[b].offset - report.slices[a].offset};
      break;
    }
  }
  return report;
}

}  // namespace sadic
