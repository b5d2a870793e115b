#include "ehvac/plane_wave.hpp"

#include <cmath>
#include <limits>

#include "ehvac/numerics.hpp"

namespace ehvac::plane_wave {

using tensor4::Event;
using tensor4::Mat4;
using tensor4::Metric4;
using tensor4::Tensor2;
using tensor4::Variance;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Tensor2 field_tensor_pw(const PlaneWaveConfig& cfg, const Event& ev) {
  if (ev.chart != tensor4::Chart::cartesian)
    throw std::invalid_argument("field_tensor_pw: Cartesian chart required");
  const double phase = cfg.omega * (ev.coords[0] - ev.coords[3]);
  const double ac = cfg.A * std::cos(phase);
  const double bs = cfg.B * std::sin(phase);
  Tensor2 F;
  F.v1 = F.v2 = Variance::lower;
  F.m(0, 1) = ac;
  F.m(1, 0) = -ac;
  F.m(0, 2) = bs;
  F.m(2, 0) = -bs;
  F.m(1, 3) = ac;
  F.m(3, 1) = -ac;
  F.m(2, 3) = bs;
  F.m(3, 2) = -bs;
  return F;
}

double p_pm(const lfg::LagrangianModel& model, lfg::PolarizationMode mode) {
  const double lam = lfg::lambda_pm(model, 0.0, 0.0, mode);
  const double lf = model.L_F(0.0, 0.0);
  const double lval = model.L(0.0, 0.0);
  // G L_G vanishes at a null field by the model's admissibility condition.
  return -lam / (4.0 * lf - lam * lval);
}

double velocity_phi(double P, double A, double phi) {
  const double pa2 = P * A * A;
  const double s = std::sin(phi);
  const double radicand = 1.0 - pa2 * s * s;
  if (radicand < 0.0)
    throw trapped_direction_error(
        "velocity_phi: direction lies outside the allowed cone");
  const double c = std::cos(phi);
  return (pa2 * c + std::sqrt(radicand)) / (1.0 + pa2 * c * c);
}

double refraction_index(double P, double A, double phi) {
  const double v = velocity_phi(P, A, phi);
  if (v == 0.0) return kInf;
  return 1.0 / v;
}

double clock_delay(double P, double A, double phi) {
  // Delta tau = 1 - n(pi - phi)
  //           = 1 + (1 + P A^2 cos^2 phi)
  //             / (P A^2 cos phi - sqrt(1 - P A^2 sin^2 phi)).
  const double pa2 = P * A * A;
  const double s = std::sin(phi), c = std::cos(phi);
  const double radicand = 1.0 - pa2 * s * s;
  if (radicand < 0.0)
    throw trapped_direction_error("clock_delay: direction not visible");
  const double denom = pa2 * c - std::sqrt(radicand);
  if (denom == 0.0) return kInf;
  return 1.0 + (1.0 + pa2 * c * c) / denom;
}

WavefrontEllipse wavefront_ellipse(double P, double A, int n_samples) {
  if (n_samples < 8)
    throw std::invalid_argument("wavefront_ellipse: need at least 8 samples");
  const double pa2 = P * A * A;
  WavefrontEllipse out;
  out.points.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    const double phi = 2.0 * M_PI * i / n_samples;
    const double s = std::sin(phi);
    const double radicand = 1.0 - pa2 * s * s;
    if (radicand < 0.0) continue;  // trapped sector: no front there
    const double c = std::cos(phi);
    const double v = (pa2 * c + std::sqrt(radicand)) / (1.0 + pa2 * c * c);
    out.points.emplace_back(v * s, v * c);
  }

  if (pa2 == 0.0) {
    out.eccentricity = 0.0;
    return out;
  }

  // Algebraic conic fit a x^2 + b xz + c z^2 + d x + e z + f = 0 with
  // unit-norm coefficients: smallest eigenvector of the normal matrix.
  std::vector<double> N(36, 0.0);
  for (auto [x, z] : out.points) {
    const double row[6] = {x * x, x * z, z * z, x, z, 1.0};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) N[6 * i + j] += row[i] * row[j];
  }
  std::vector<double> evals, evecs;
  numerics::jacobi_eigen_symmetric(N, 6, evals, evecs);
  // Eigenvalues ascending; the conic is the first column. The normal
  // matrix is PSD so the smallest eigenvalue is ~0 for exact points.
  double cf[6];
  for (int r = 0; r < 6; ++r) cf[r] = evecs[6 * r + 0];

  // Semi-axes from the quadratic part and the fitted center.
  const double qa = cf[0], qb = cf[1], qc = cf[2], qd = cf[3], qe = cf[4],
               qf = cf[5];
  // Center: solve [2a b; b 2c] (x0, z0) = -(d, e).
  const double det = 4.0 * qa * qc - qb * qb;
  const double x0 = (-2.0 * qc * qd + qb * qe) / det;
  const double z0 = (-2.0 * qa * qe + qb * qd) / det;
  const double f0 = qa * x0 * x0 + qb * x0 * z0 + qc * z0 * z0 + qd * x0 +
                    qe * z0 + qf;
  // Eigenvalues of [[a, b/2], [b/2, c]].
  const double tr = qa + qc;
  const double dd = std::sqrt(std::max(0.0, (qa - qc) * (qa - qc) + qb * qb));
  const double l1 = 0.5 * (tr - dd), l2 = 0.5 * (tr + dd);
  const double ax1 = -f0 / l1, ax2 = -f0 / l2;  // squared semi-axes
  const double big = std::max(ax1, ax2), small = std::min(ax1, ax2);
  out.eccentricity = std::sqrt(std::max(0.0, 1.0 - small / big));
  return out;
}

RefractionProfile make_refraction_profile(double P, double A, int n_samples) {
  RefractionProfile out;
  out.P = P;
  out.samples.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    const double phi = M_PI * i / (n_samples - 1);
    PhiSample s;
    s.phi = phi;
    try {
      s.v = velocity_phi(P, A, phi);
      s.n = (s.v == 0.0) ? std::numeric_limits<double>::infinity() : 1.0 / s.v;
      s.delay = clock_delay(P, A, M_PI - phi);
    } catch (const trapped_direction_error&) {
      s.trapped = true;
    }
    out.samples.push_back(s);
  }
  return out;
}

double gedanken_velocity(GedankenGeometry geometry, double P, double A,
                         double r) {
  if (r <= 0.0)
    throw std::invalid_argument("gedanken_velocity: r must be > 0");
  const double pa2 = P * A * A;
  if (geometry == GedankenGeometry::spherical) {
    const double r4 = r * r * r * r;
    return (r4 - pa2) / (r4 + pa2);
  }
  const double r2 = r * r;
  return (r2 - pa2) / (r2 + pa2);
}

Metric4 pw_effective_metric(double P, double A) {
  const double pa2 = P * A * A;
  Mat4 g;
  g(0, 0) = 1.0 - pa2;
  g(0, 3) = g(3, 0) = pa2;
  g(1, 1) = -1.0;
  g(2, 2) = -1.0;
  g(3, 3) = -(1.0 + pa2);
  return tensor4::make_metric(g);
}

}  // namespace ehvac::plane_wave
