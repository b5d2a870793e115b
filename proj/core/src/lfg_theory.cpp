#include "ehvac/lfg_theory.hpp"

#include <cmath>
#include <sstream>

namespace ehvac::lfg {

using tensor4::Mat4;
using tensor4::Metric4;
using tensor4::Rank4;
using tensor4::Tensor2;
using tensor4::Variance;

LagrangianModel euler_heisenberg(double alpha) {
  if (!(alpha > 0.0))
    throw std::invalid_argument("euler_heisenberg: alpha must be > 0");
  const double a2 = alpha * alpha;
  LagrangianModel m;
  m.alpha = alpha;
  m.L = [a2](double F, double G) {
    return -F / 4.0 + (a2 / 90.0) * (F * F + 1.75 * G * G);
  };
  m.L_F = [a2](double F, double) { return -0.25 + a2 * F / 45.0; };
  m.L_G = [a2](double, double G) { return 7.0 * a2 * G / 180.0; };
  m.L_FF = [a2](double, double) { return a2 / 45.0; };
  m.L_FG = [](double, double) { return 0.0; };
  m.L_GG = [a2](double, double) { return 7.0 * a2 / 180.0; };
  return m;
}

DispersionCoefficients dispersion_coefficients(const LagrangianModel& model,
                                               double F, double G) {
  const double lf = model.L_F(F, G), lg = model.L_G(F, G);
  const double lff = model.L_FF(F, G), lfg = model.L_FG(F, G),
               lgg = model.L_GG(F, G);
  (void)lg;

  DispersionCoefficients c;
  c.lambda1 = (lf + G * lfg) * (lf + G * lfg) -
              lgg * (2.0 * F * lf + G * G * lff);
  c.lambda2 =
      4.0 * (lf * (lff + lgg) + 2.0 * F * (lfg * lfg - lff * lgg));
  c.lambda3 = 16.0 * (lff * lgg - lfg * lfg);

  const double scale =
      std::max({std::abs(c.lambda1), std::abs(c.lambda2), std::abs(c.lambda3),
                1e-300});
  if (std::abs(c.lambda1) <= 1e-14 * scale) {
    std::ostringstream msg;
    msg << "dispersion_coefficients: Lambda1 degenerate at (F, G) = (" << F
        << ", " << G << ")";
    throw dispersion_degenerate_error(msg.str());
  }
  const double disc = c.lambda2 * c.lambda2 - 4.0 * c.lambda1 * c.lambda3;
  if (disc < 0.0) {
    std::ostringstream msg;
    msg << "dispersion_coefficients: complex roots at (F, G) = (" << F << ", "
        << G << ")";
    throw dispersion_degenerate_error(msg.str());
  }
  // Stable quadratic roots; "plus" is algebraically
  // (-Lambda2 + sqrt(disc)) / (2 Lambda1).
  const double sd = std::sqrt(disc);
  if (c.lambda2 > 0.0) {
    const double q = -0.5 * (c.lambda2 + sd);
    c.lambda_minus = q / c.lambda1;
    c.lambda_plus = (q != 0.0) ? c.lambda3 / q : 0.0;
  } else {
    const double q = -0.5 * (c.lambda2 - sd);
    c.lambda_plus = q / c.lambda1;
    c.lambda_minus = (q != 0.0) ? c.lambda3 / q : 0.0;
  }
  return c;
}

double lambda_pm(const LagrangianModel& model, double F, double G,
                 PolarizationMode mode) {
  const DispersionCoefficients c = dispersion_coefficients(model, F, G);
  return mode == PolarizationMode::plus ? c.lambda_plus : c.lambda_minus;
}

double lambda_pm_closed_form(double alpha, double F, double G,
                             PolarizationMode mode) {
  const double a2 = alpha * alpha;
  const double root = std::sqrt(18225.0 - 18360.0 * F * a2 +
                                4624.0 * F * F * a2 * a2 +
                                3136.0 * G * G * a2 * a2);
  const double denom = 495.0 + 12.0 * F * a2 +
                       (mode == PolarizationMode::plus ? -root : root);
  return 224.0 * a2 / denom;
}

double omega_pm(const LagrangianModel& model, double F, double G,
                PolarizationMode mode) {
  const double lam = lambda_pm(model, F, G, mode);
  const double lf = model.L_F(F, G);
  const double lff = model.L_FF(F, G), lfg = model.L_FG(F, G),
               lgg = model.L_GG(F, G);
  const double denom = 4.0 * lfg + G * lgg * lam;
  const double num = 4.0 * lff + (lf + G * lfg) * lam;
  const double scale = std::max({std::abs(num), std::abs(denom), 1e-300});
  if (std::abs(denom) <= 1e-14 * scale) {
    std::ostringstream msg;
    msg << "omega_pm: degenerate denominator at (F, G) = (" << F << ", " << G
        << ")";
    throw dispersion_degenerate_error(msg.str());
  }
  return -num / denom;
}

Rank4 q_tensor(const LagrangianModel& model, const Tensor2& F_upper,
               const Tensor2& Fdual_upper, double F, double G) {
  const double lff = model.L_FF(F, G), lfg = model.L_FG(F, G),
               lgg = model.L_GG(F, G);
  Rank4 out{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          const double f1 = F_upper.m(a, b), f2 = F_upper.m(m, n);
          const double d1 = Fdual_upper.m(a, b), d2 = Fdual_upper.m(m, n);
          out[tensor4::idx4(a, b, m, n)] =
              lff * f1 * f2 + lfg * (f1 * d2 + d1 * f2) + lgg * d1 * d2;
        }
  return out;
}

Tensor2 stress_energy(const LagrangianModel& model, const Tensor2& F_lower,
                      const Metric4& metric) {
  if (F_lower.v1 != Variance::lower || F_lower.v2 != Variance::lower)
    throw std::invalid_argument("stress_energy: expected lower-lower tensor");
  const auto inv = tensor4::invariants(F_lower, metric);
  const double lf = model.L_F(inv.F, inv.G);
  const double lval = model.L(inv.F, inv.G), lg = model.L_G(inv.F, inv.G);

  // F_m^a = g^{a l} F_{m l}
  Mat4 mixed;
  for (int m = 0; m < 4; ++m)
    for (int a = 0; a < 4; ++a) {
      double s = 0.0;
      for (int l = 0; l < 4; ++l) s += metric.ginv(a, l) * F_lower.m(m, l);
      mixed(m, a) = s;
    }

  Tensor2 out;
  out.v1 = out.v2 = Variance::lower;
  const double trace_part = lval - inv.G * lg;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      double s = 0.0;
      for (int a = 0; a < 4; ++a) s += mixed(m, a) * F_lower.m(a, n);
      out.m(m, n) = -4.0 * lf * s - trace_part * metric.g(m, n);
    }
  return out;
}

}  // namespace ehvac::lfg
