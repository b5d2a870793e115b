#include "ehvac/effective_metric.hpp"

#include <cmath>
#include <sstream>

#include "ehvac/numerics.hpp"

namespace ehvac::effective {

using tensor4::Mat4;
using tensor4::Metric4;
using tensor4::Tensor2;
using tensor4::Variance;

Tensor2 substress(const Tensor2& F_mixed, const Tensor2& F_upper) {
  if (F_mixed.v1 != Variance::upper || F_mixed.v2 != Variance::lower)
    throw std::invalid_argument("substress: first factor must be upper-lower");
  if (F_upper.v1 != Variance::upper || F_upper.v2 != Variance::upper)
    throw std::invalid_argument("substress: second factor must be upper-upper");
  Tensor2 out;
  out.v1 = out.v2 = Variance::upper;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      double s = 0.0;
      for (int l = 0; l < 4; ++l) s += F_mixed.m(m, l) * F_upper.m(l, n);
      out.m(m, n) = s;
    }
  return out;
}

EffectiveGeometry effective_cometric(const Metric4& metric,
                                     const Tensor2& F_lower,
                                     const lfg::LagrangianModel& model,
                                     lfg::PolarizationMode mode) {
  const auto inv = tensor4::invariants(F_lower, metric);
  const double lam = lfg::lambda_pm(model, inv.F, inv.G, mode);

  const Tensor2 F_mixed =
      tensor4::raise_lower(F_lower, Variance::upper, Variance::lower, metric);
  const Tensor2 F_upper =
      tensor4::raise_lower(F_lower, Variance::upper, Variance::upper, metric);
  const Tensor2 sub = substress(F_mixed, F_upper);

  EffectiveGeometry geom;
  geom.mode = mode;
  geom.conformal = ConformalChoice::raw_inverse;
  geom.cometric = metric.ginv + lam * sub.m;

  const double scale = geom.cometric.max_abs();
  const double det = geom.cometric.det();
  if (std::abs(det) <= 1e-12 * scale * scale * scale * scale) {
    std::ostringstream msg;
    msg << "effective_cometric: singular cometric (|det| = " << std::abs(det)
        << ", entry scale " << scale << ") at (F, G) = (" << inv.F << ", "
        << inv.G << ")";
    throw singular_metric_error(msg.str());
  }
  geom.metric = geom.cometric.inverse();
  return geom;
}

Mat4 effective_cometric_from_stress(const Metric4& metric,
                                    const Tensor2& T_upper,
                                    const lfg::LagrangianModel& model,
                                    double F, double G,
                                    lfg::PolarizationMode mode) {
  if (T_upper.v1 != Variance::upper || T_upper.v2 != Variance::upper)
    throw std::invalid_argument(
        "effective_cometric_from_stress: T must be upper-upper");
  const double lf = model.L_F(F, G);
  if (std::abs(lf) < 1e-300)
    throw dispersion_degenerate_error(
        "effective_cometric_from_stress: L_F = 0");
  const double lam = lfg::lambda_pm(model, F, G, mode);
  const double lval = model.L(F, G), lg = model.L_G(F, G);
  const double conf = 1.0 + lam * (G * lg - lval) / (4.0 * lf);
  return conf * metric.ginv + (-lam / (4.0 * lf)) * T_upper.m;
}

DispersionProbe make_probe(const Tensor2& F_lower, const Metric4& metric,
                           const std::array<double, 4>& k) {
  const Tensor2 Fdual = tensor4::hodge_dual(F_lower, metric);
  DispersionProbe p;
  p.k = k;
  // h_m = F_m^l k_l = g^{l a} F_{m a} k_l
  for (int m = 0; m < 4; ++m) {
    double h = 0.0, hs = 0.0;
    for (int l = 0; l < 4; ++l)
      for (int a = 0; a < 4; ++a) {
        h += metric.ginv(l, a) * F_lower.m(m, a) * k[l];
        hs += metric.ginv(l, a) * Fdual.m(m, a) * k[l];
      }
    p.h[m] = h;
    p.hstar[m] = hs;
  }
  auto dot = [&](const std::array<double, 4>& x,
                 const std::array<double, 4>& y) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) s += metric.ginv(i, j) * x[i] * y[j];
    return s;
  };
  p.k2 = dot(k, k);
  p.h2 = dot(p.h, p.h);
  p.hstar2 = dot(p.hstar, p.hstar);
  p.h_dot_hstar = dot(p.h, p.hstar);
  return p;
}

DispersionProbe make_probe_on_cone(const Tensor2& F_lower,
                                   const Metric4& metric,
                                   const EffectiveGeometry& geom,
                                   const std::array<double, 3>& k_spatial,
                                   RootSelect select) {
  // g~^{tt} kt^2 + 2 g~^{ti} ki kt + g~^{ij} ki kj = 0
  const Mat4& c = geom.cometric;
  const double a = c(0, 0);
  double b = 0.0, d = 0.0;
  for (int i = 1; i < 4; ++i) {
    b += 2.0 * c(0, i) * k_spatial[i - 1];
    for (int j = 1; j < 4; ++j)
      d += c(i, j) * k_spatial[i - 1] * k_spatial[j - 1];
  }
  double kt;
  if (std::abs(a) < 1e-300) {
    if (std::abs(b) < 1e-300)
      throw degenerate_cone_error("make_probe_on_cone: degenerate quadratic");
    kt = -d / b;
  } else {
    const double disc = b * b - 4.0 * a * d;
    if (disc < 0.0)
      throw degenerate_cone_error(
          "make_probe_on_cone: no real k_t for the given spatial components");
    const double sd = std::sqrt(disc);
    const double r1 = (-b + sd) / (2.0 * a), r2 = (-b - sd) / (2.0 * a);
    kt = (select == RootSelect::future) ? std::max(r1, r2) : std::min(r1, r2);
  }
  return make_probe(F_lower, metric,
                    {kt, k_spatial[0], k_spatial[1], k_spatial[2]});
}

double dispersion_residual(const DispersionProbe& probe,
                           const EffectiveGeometry& geom) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      s += geom.cometric(i, j) * probe.k[i] * probe.k[j];
  return s;
}

double fresnel_residual(const DispersionProbe& probe,
                        const lfg::DispersionCoefficients& coeffs) {
  return coeffs.lambda1 * probe.k2 * probe.k2 +
         coeffs.lambda2 * probe.h2 * probe.k2 +
         coeffs.lambda3 * probe.h2 * probe.h2;
}

bool is_lorentzian(const Mat4& metric) {
  std::vector<double> a(metric.a.begin(), metric.a.end());
  std::vector<double> evals, evecs;
  numerics::jacobi_eigen_symmetric(a, 4, evals, evecs);
  int pos = 0, neg = 0;
  for (double e : evals) {
    if (e > 0.0) ++pos;
    if (e < 0.0) ++neg;
  }
  return pos == 1 && neg == 3;
}

}  // namespace ehvac::effective
