#pragma once

#include <stdexcept>
#include <string>

namespace belllab {

/// An evaluator was handed a CorrelationSet lacking a slot it needs.
/// Missing correlations are never defaulted to zero: without further
/// assumptions some correlations are simply unknown.
class incomplete_input_error : public std::runtime_error {
 public:
  explicit incomplete_input_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// The perturbation direction does not separate the two directional
/// derivatives, so the dichotomy argument cannot fire. Try another (mu, nu).
class degenerate_direction_error : public std::runtime_error {
 public:
  explicit degenerate_direction_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// No Taylor coefficient above the noise threshold up to the requested degree.
class inconclusive_degree_error : public std::runtime_error {
 public:
  explicit inconclusive_degree_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// A model lacking counterfactual (same-side) outcomes was passed to an
/// analysis that needs them.
class capability_error : public std::runtime_error {
 public:
  explicit capability_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// A violation scan walked its whole schedule without finding one.
class no_violation_error : public std::runtime_error {
 public:
  explicit no_violation_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace belllab
