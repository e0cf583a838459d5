#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sadic {

/// Raised when an index lies beyond the last substitution a finite window knows.
class HorizonExceeded : public std::out_of_range {
 public:
  HorizonExceeded(std::size_t requested, std::size_t horizon)
      : std::out_of_range("index " + std::to_string(requested) +
                          " beyond directive horizon " + std::to_string(horizon)),
        requested_(requested),
        horizon_(horizon) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t horizon() const noexcept { return horizon_; }

 private:
  std::size_t requested_;
  std::size_t horizon_;
};

/// A limit-word prefix that never settled within the explored depth.
class NonStabilizing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Configuration text that cannot be turned into a system.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, std::string field, const std::string& message)
      : std::runtime_error(format(line, field, message)), line_(line), field_(std::move(field)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string format(std::size_t line, const std::string& field, const std::string& message) {
    std::string out = "config";
    if (line > 0) out += ":" + std::to_string(line);
    if (!field.empty()) out += " [" + field + "]";
    return out + ": " + message;
  }

  std::size_t line_;
  std::string field_;
};

}  // namespace sadic
