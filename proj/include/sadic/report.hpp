#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "sadic/coincidence.hpp"
#include "sadic/config.hpp"
#include "sadic/lyapunov.hpp"
#include "sadic/price.hpp"
#include "sadic/rauzy.hpp"
#include "sadic/verify.hpp"

namespace sadic {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Big integers and high-precision reals are emitted as decimal strings so
/// that field types never depend on magnitude.
std::string decimal(const Real& x, int digits = 30);
Json to_json(const Mat2& m);
Json to_json(const Vec2i& v);
Json to_json(const DirectionVec& u);
Json to_json(const GeomSegment& s);

Json to_json(const PrimitivityResult& r);
Json to_json(const IrreducibilityResult& r);
Json to_json(const BalanceCertificate& c);
Json to_json(const PriceReport& r);
Json to_json(const RightEigenResult& r);
Json to_json(const IndependenceVerdict& v);
Json to_json(const CoincidenceVerdict& v);
Json to_json(const RotationFactor& r);
Json to_json(const OrbitReport& r);
Json to_json(const OverlapEstimate& o);
Json to_json(const LyapEstimate& e);
Json to_json(const ExplorerReport& r);
Json to_json(const VerifyReport& r);

/// {"schema_version", "command", "sequence"?, "result"}.
Json envelope(const std::string& command, const SystemConfig& config, Json result);

}  // namespace sadic
