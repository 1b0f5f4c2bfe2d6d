#pragma once

#include <stdexcept>
#include <string>

namespace causet {

// Point or node outside the chart on a non-periodic axis.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller passed an argument violating an operation precondition.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Invalid configuration or model parameters.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A geometric construction failed (e.g. orientation not timelike at a node).
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace causet
