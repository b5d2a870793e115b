#pragma once

#include <functional>

#include "ehvac/errors.hpp"
#include "ehvac/tensor4.hpp"

namespace ehvac::lfg {

/// Two birefringent polarization modes.  Convention fixed once for the
/// whole artifact: "plus" is the mode with the larger dispersion factor
/// at vanishing invariants (28 alpha^2/45 for the quartic vacuum model).
enum class PolarizationMode { plus, minus };

/// An L(F, G) electrodynamics model: the Lagrangian scalar and its
/// derivative stack as callables of the two field invariants.
struct LagrangianModel {
  double alpha = 0.0;
  std::function<double(double, double)> L;
  std::function<double(double, double)> L_F;
  std::function<double(double, double)> L_G;
  std::function<double(double, double)> L_FF;
  std::function<double(double, double)> L_FG;
  std::function<double(double, double)> L_GG;
};

/// Quartic effective vacuum model
///   L = -F/4 + (alpha^2/90)(F^2 + (7/4) G^2).
LagrangianModel euler_heisenberg(double alpha);

struct DispersionCoefficients {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
};

/// Quadratic coefficients of the dispersion polynomial
///   Lambda1 (k^2)^2 + Lambda2 h^2 k^2 + Lambda3 (h^2)^2
/// and its two roots.  Throws dispersion_degenerate_error when
/// Lambda1 ~ 0 or the roots are complex.
DispersionCoefficients dispersion_coefficients(const LagrangianModel& model,
                                               double F, double G);

double lambda_pm(const LagrangianModel& model, double F, double G,
                 PolarizationMode mode);

/// Closed form of the quartic model's dispersion factor; kept separate
/// from the generic route so the two can be checked against each other.
double lambda_pm_closed_form(double alpha, double F, double G,
                             PolarizationMode mode);

/// Polarization-ratio quantity Omega = -(4 L_FF + (L_F + G L_FG) Lambda)
/// / (4 L_FG + G L_GG Lambda).  Degenerate denominators (e.g. G = 0 in
/// the quartic model, where L_FG = 0) are a hard error.
double omega_pm(const LagrangianModel& model, double F, double G,
                PolarizationMode mode);

/// Q^{ab mn} = L_FF F^{ab} F^{mn} + L_FG (F^{ab} F*^{mn} + F*^{ab} F^{mn})
///           + L_GG F*^{ab} F*^{mn}, all indices upper.
tensor4::Rank4 q_tensor(const LagrangianModel& model,
                        const tensor4::Tensor2& F_upper,
                        const tensor4::Tensor2& Fdual_upper, double F,
                        double G);

/// Stress-energy T_{mn} = -4 L_F F_m^a F_{an} - (L - G L_G) g_{mn}.
tensor4::Tensor2 stress_energy(const LagrangianModel& model,
                               const tensor4::Tensor2& F_lower,
                               const tensor4::Metric4& metric);

}  // namespace ehvac::lfg
