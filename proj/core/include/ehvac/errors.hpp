#pragma once

#include <stdexcept>
#include <string>

namespace ehvac {

/// Evaluation requested at a chart singularity (cylindrical r <= 0).
struct chart_singularity_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// A metric or cometric failed the nondegeneracy threshold.
struct singular_metric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dispersion coefficients are degenerate (Lambda1 ~ 0, complex roots,
/// or a vanishing denominator in a derived quantity).
struct dispersion_degenerate_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// The radial null-cone quadratic has negative discriminant.
struct degenerate_cone_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Propagation direction lies outside the allowed cone of the wave field.
struct trapped_direction_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Root bracketing or branch preconditions not met.
struct bracket_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// ODE step budget exhausted or non-finite right-hand side.
struct integration_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested point lies outside a static-solution branch domain.
struct branch_domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// A closed-form result was requested outside its theorem hypotheses.
struct hypothesis_error : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace ehvac
