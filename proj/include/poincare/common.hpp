#pragma once
#include <numbers>
#include <stdexcept>
#include <string>

namespace poincare {

inline constexpr double pi = std::numbers::pi;

// value with an absolute error bound
struct Estimate {
  double value = 0;
  double err = 0;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct UnsupportedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};
struct DegenerateError : std::domain_error {
  using std::domain_error::domain_error;
};
struct NoSolutionError : std::domain_error {
  using std::domain_error::domain_error;
};
struct SplitFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// quadrature or iteration could not reach the requested tolerance
struct AccuracyError : std::runtime_error {
  Estimate achieved;
  AccuracyError(const std::string& what, Estimate e) : std::runtime_error(what), achieved(e) {}
};

struct FitDegenerate : std::runtime_error {
  std::string singular_values;
  FitDegenerate(const std::string& what, std::string sv)
      : std::runtime_error(what), singular_values(std::move(sv)) {}
};

}  // namespace poincare
