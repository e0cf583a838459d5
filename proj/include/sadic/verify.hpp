#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sadic/coincidence.hpp"
#include "sadic/config.hpp"
#include "sadic/price.hpp"
#include "sadic/rauzy.hpp"

namespace sadic {

enum class Classification { conclusion_verified, hypothesis_failure, inconclusive };

struct CheckError {
  std::string check;
  std::string message;
};

struct FractalSummary {
  std::size_t depth = 0;
  double min = 0;
  double max = 0;
  /// Points with |π₀| > C.
  std::size_t outside = 0;
};

struct VerifyReport {
  std::string sequence;
  bool unimodular = false;
  std::vector<std::string> non_unimodular;
  PrimitivityResult primitivity;
  IrreducibilityResult irreducibility;
  PriceReport price;
  BalanceCertificate balance;

  std::optional<RightEigenResult> eigen;
  std::optional<IndependenceVerdict> independence;
  std::optional<CoincidenceVerdict> coincidence;
  std::optional<RotationFactor> rotation;
  std::optional<OrbitReport> orbit;
  std::optional<FractalSummary> fractal;
  std::optional<OverlapEstimate> overlap;

  Classification classification = Classification::inconclusive;
  /// Name of the refuted hypothesis for hypothesis_failure.
  std::string failed_hypothesis;
  std::vector<std::string> skipped;
  std::vector<CheckError> errors;
};

/// Hypothesis checks (unimodularity, primitivity, irreducibility, recurrence,
/// balance) followed by conclusion checks (eigenvector, strong coincidence,
/// rotation orbit, fractal containment and subtile overlap). A refuted
/// hypothesis skips the conclusion checks. Exceptions raised by a check are
/// recorded in `errors` and the check is treated as not run.
VerifyReport run_verify(const SystemConfig& config);

std::string to_string(Classification c, const std::string& failed = {});

}  // namespace sadic
