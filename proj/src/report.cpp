#include "sadic/report.hpp"

#include <sstream>

namespace sadic {

namespace {

Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json status_json(ConditionStatus s) { return to_string(s); }

}  // namespace

std::string decimal(const Real& x, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << x;
  return out.str();
}

Json to_json(const Mat2& m) {
  return Json::array({Json::array({m(0, 0).str(), m(0, 1).str()}), Json::array({m(1, 0).str(), m(1, 1).str()})});
}

Json to_json(const Vec2i& v) { return Json::array({v.x, v.y}); }

Json to_json(const DirectionVec& u) {
  Json j;
  j["x"] = decimal(u.x());
  j["y"] = decimal(u.y());
  j["first_share"] = decimal(u.first_share());
  if (u.exact()) j["exact"] = Json::array({(*u.exact())[0].str(), (*u.exact())[1].str()});
  return j;
}

Json to_json(const GeomSegment& s) { return Json{{"x", to_json(s.x)}, {"i", slot(s.i) + 1}}; }

Json to_json(const PrimitivityResult& r) {
  return Json{{"k", r.k},
              {"horizon", r.horizon},
              {"positive_at", optional_size(r.positive_at)},
              {"holds_for_all_k", r.holds_for_all_k}};
}

Json to_json(const IrreducibilityResult& r) {
  return Json{{"verdict", to_string(r.verdict)},
              {"k", r.k},
              {"window", Json::array({r.l_min, r.l_max})},
              {"reducible_at", r.reducible_at},
              {"last_discriminant", r.last_discriminant.str()}};
}

Json to_json(const BalanceCertificate& c) {
  Json j{{"C", c.constant},
         {"L", c.max_length},
         {"status", to_string(c.status)},
         {"shift", c.shift},
         {"depth", c.depth},
         {"witness", Json{{"heavy", c.witness_heavy}, {"light", c.witness_light}}}};
  j["target"] = c.target ? Json(*c.target) : Json(nullptr);
  return j;
}

Json to_json(const PriceReport& r) {
  Json p{{"status", status_json(r.primitivity.status)},
         {"block", r.primitivity.block ? to_json(*r.primitivity.block) : Json(nullptr)},
         {"h", r.primitivity.h},
         {"ends", r.primitivity.ends}};
  Json pairs = Json::array();
  for (auto [n, l] : r.recurrence.pairs) pairs.push_back(Json{{"n", n}, {"l", l}});
  Json rec{{"status", status_json(r.recurrence.status)},
           {"pairs", pairs},
           {"counterexample", optional_size(r.recurrence.counterexample)}};
  Json irr{{"status", status_json(r.irreducibility.status)}, {"per_start", Json::array()}};
  for (const auto& x : r.irreducibility.per_start) irr["per_start"].push_back(to_json(x));
  Json bal{{"status", status_json(r.balance.status)}, {"constant", r.balance.constant}, {"certificates", Json::array()}};
  for (const auto& c : r.balance.certificates) bal["certificates"].push_back(to_json(c));
  Json trace = Json::array();
  for (const auto& e : r.eigenvector.trace.entries) trace.push_back(Json{{"n", e.n}, {"angle", decimal(e.angle, 6)}});
  Json eig{{"status", status_json(r.eigenvector.status)},
           {"v", r.eigenvector.v ? to_json(*r.eigenvector.v) : Json(nullptr)},
           {"v_source", r.eigenvector.v_source},
           {"trace", trace}};
  return Json{{"P", p}, {"R", rec}, {"I", irr}, {"C", bal}, {"E", eig}};
}

Json to_json(const RightEigenResult& r) {
  return Json{{"status", to_string(r.status)},
              {"u", r.u ? to_json(*r.u) : Json(nullptr)},
              {"exact", r.exact ? to_json(*r.exact) : Json(nullptr)},
              {"depth", r.depth},
              {"cone_angle", decimal(r.cone_angle, 6)},
              {"positive_at", optional_size(r.positive_at)}};
}

Json to_json(const IndependenceVerdict& v) {
  Json quotients = Json::array();
  for (const auto& q : v.partial_quotients) quotients.push_back(q.str());
  return Json{{"status", to_string(v.status)},
              {"ratio", v.ratio ? Json::array({v.ratio->first.str(), v.ratio->second.str()}) : Json(nullptr)},
              {"partial_quotients", quotients},
              {"basis", v.basis},
              {"implied_by_irreducibility", v.implied_by_irreducibility}};
}

Json to_json(const CoincidenceVerdict& v) {
  Json j;
  j["status"] = v.coincident ? "coincident-at" : "none-up-to";
  j["cap"] = v.cap;
  if (v.witness) {
    const auto& w = *v.witness;
    j["n"] = w.n;
    j["witness"] = Json{{"y", to_json(w.y)},
                        {"letter", slot(w.letter) + 1},
                        {"prefix_length", w.prefix_length},
                        {"p1", w.p1 ? Json(*w.p1) : Json(nullptr)},
                        {"p2", w.p2 ? Json(*w.p2) : Json(nullptr)}};
  } else {
    j["n"] = nullptr;
    j["witness"] = nullptr;
  }
  j["coincident_levels"] = v.coincident_levels;
  j["truncated_levels"] = v.truncated_levels;
  return j;
}

Json to_json(const RotationFactor& r) {
  return Json{{"angle", decimal(r.angle)},
              {"t1", decimal(r.map.t1)},
              {"t2", decimal(r.map.t2)},
              {"rational", r.rational},
              {"independence", to_json(r.independence)}};
}

Json to_json(const OrbitReport& r) {
  return Json{{"angle", decimal(r.angle)},
              {"steps", r.steps},
              {"mismatches", r.mismatches},
              {"first_mismatch", optional_size(r.first_mismatch)},
              {"positions", r.positions},
              {"warning", r.warning ? Json(*r.warning) : Json(nullptr)}};
}

Json to_json(const OverlapEstimate& o) {
  return Json{{"bin_width", o.bin_width}, {"bound", o.bound},   {"bins", o.bins},
              {"overlap", o.overlap},     {"support", o.support}, {"outside", o.outside}};
}

Json to_json(const LyapEstimate& e) {
  return Json{{"theta1", e.theta1},   {"stderr1", e.stderr1}, {"theta2", e.theta2},
              {"stderr2", e.stderr2}, {"samples", e.samples}, {"length", e.length},
              {"seed", e.seed},       {"transposed", e.transposed}, {"pisot", to_string(e.pisot)}};
}

Json to_json(const ExplorerReport& r) {
  Json vertices = Json::array();
  for (const auto& [x, h] : r.vertices) vertices.push_back(Json{{"x", to_json(x)}, {"height", decimal(h, 20)}});
  Json slices = Json::array();
  for (const auto& s : r.slices) {
    Json shape = Json::array();
    for (const auto& g : s.shape) shape.push_back(to_json(g));
    slices.push_back(Json{{"t", decimal(s.t, 20)}, {"size", s.segments.size()}, {"offset", to_json(s.offset)}, {"shape", shape}});
  }
  Json equal = Json::array();
  for (const auto& [a, b] : r.equal_heights) equal.push_back(Json::array({to_json(a), to_json(b)}));
  Json period = nullptr;
  if (r.period) period = Json{{"a", r.period->a}, {"b", r.period->b}, {"t", to_json(r.period->t)}};
  return Json{{"n", r.n},
              {"segments", r.iterate.size()},
              {"stripe", Json::array({decimal(r.stripe.first, 20), decimal(r.stripe.second, 20)})},
              {"vertices", vertices},
              {"slices", slices},
              {"equal_heights", equal},
              {"period", period}};
}

Json to_json(const VerifyReport& r) {
  Json hyp{{"unimodular", Json{{"holds", r.unimodular}, {"failing", r.non_unimodular}}},
           {"primitivity", to_json(r.primitivity)},
           {"irreducibility", to_json(r.irreducibility)},
           {"price", to_json(r.price)},
           {"balance", to_json(r.balance)}};
  Json con;
  con["eigenvector"] = r.eigen ? to_json(*r.eigen) : Json(nullptr);
  con["independence"] = r.independence ? to_json(*r.independence) : Json(nullptr);
  con["coincidence"] = r.coincidence ? to_json(*r.coincidence) : Json(nullptr);
  con["rotation"] = r.rotation ? to_json(*r.rotation) : Json(nullptr);
  con["orbit"] = r.orbit ? to_json(*r.orbit) : Json(nullptr);
  if (r.fractal)
    con["fractal"] = Json{{"depth", r.fractal->depth}, {"min", r.fractal->min}, {"max", r.fractal->max}, {"outside", r.fractal->outside}};
  else
    con["fractal"] = nullptr;
  con["overlap"] = r.overlap ? to_json(*r.overlap) : Json(nullptr);
  Json errors = Json::array();
  for (const auto& e : r.errors) errors.push_back(Json{{"check", e.check}, {"message", e.message}});
  return Json{{"classification", to_string(r.classification, r.failed_hypothesis)},
              {"hypotheses", hyp},
              {"conclusions", con},
              {"skipped", r.skipped},
              {"errors", errors}};
}

Json envelope(const std::string& command, const SystemConfig& config, Json result) {
  Json j{{"schema_version", kSchemaVersion}, {"command", command}};
  if (config.sequence) j["sequence"] = config.sequence->describe();
  if (config.model) {
    Json names = Json::array();
    for (const auto& s : config.model->substitutions()) names.push_back(s.name + ": " + s.substitution.str());
    j["model"] = Json{{"kind", to_string(config.model->kind())},
                      {"substitutions", names},
                      {"cylinder_positive", config.model->cylinder_positive()},
                      {"positive_matrix_cylinder", config.model->has_positive_matrix_cylinder()},
                      {"measure", "edge-weight Markov measure on the presenting graph"}};
  }
  j["result"] = std::move(result);
  return j;
}

}  // namespace sadic
