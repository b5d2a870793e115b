#pragma once

#include <vector>

#include "ehvac/lfg_theory.hpp"
#include "ehvac/tensor4.hpp"

namespace ehvac::plane_wave {

/// Monochromatic plane wave along +z with amplitudes A (x-polarized
/// cosine) and B (y-polarized sine); circular when A = B.
struct PlaneWaveConfig {
  double A = 0.0;
  double B = 0.0;
  double omega = 1.0;
  lfg::PolarizationMode mode = lfg::PolarizationMode::plus;
  double alpha = 1.0;
};

struct PhiSample {
  double phi = 0.0;
  bool trapped = false;
  double v = 0.0;       // valid when !trapped
  double n = 0.0;       // may be +inf (stalled front)
  double delay = 0.0;   // clock delay, may be +inf
};

struct RefractionProfile {
  double P = 0.0;  // null-field dispersion constant of the chosen mode
  std::vector<PhiSample> samples;
};

struct WavefrontEllipse {
  std::vector<std::pair<double, double>> points;  // (x, z)
  double eccentricity = 0.0;
};

/// Field tensor of the wave at a Cartesian event.
tensor4::Tensor2 field_tensor_pw(const PlaneWaveConfig& cfg,
                                 const tensor4::Event& ev);

/// Null-field dispersion constant P = -Lambda/(4 L_F + Lambda (G L_G - L))
/// at F = G = 0; equals (22 +/- 6) alpha^2 / 45 for the quartic model.
double p_pm(const lfg::LagrangianModel& model, lfg::PolarizationMode mode);

/// Shock-front coordinate speed
///   v(phi) = (P A^2 cos phi + sqrt(1 - P A^2 sin^2 phi))
///            / (1 + P A^2 cos^2 phi).
/// Throws trapped_direction_error when the radicand is negative.
double velocity_phi(double P, double A, double phi);

/// n(phi) = 1/v(phi); +inf when the front is stalled (v = 0).
double refraction_index(double P, double A, double phi);

/// Clock-delay observable Delta tau = 1 - n(pi - phi); +inf at the
/// critical case.
double clock_delay(double P, double A, double phi);

/// Unit-time wavefront (z = v cos phi, x = v sin phi) with a conic-fit
/// eccentricity; closed form sqrt(P A^2/(1 + P A^2)).
WavefrontEllipse wavefront_ellipse(double P, double A, int n_samples);

/// v, n and Delta tau sampled on n_samples uniform angles over [0, pi].
RefractionProfile make_refraction_profile(double P, double A,
                                          int n_samples = 721);

enum class GedankenGeometry { spherical, cylindrical };

/// Heuristic imploding-wave outgoing speed with inverse-square
/// (spherical) or inverse-distance (cylindrical) intensity substitution.
double gedanken_velocity(GedankenGeometry geometry, double P, double A,
                         double r);

/// Constant effective metric of the circular wave:
/// (1 - P A^2) dt^2 + 2 P A^2 dt dz - dx^2 - dy^2 - (1 + P A^2) dz^2.
tensor4::Metric4 pw_effective_metric(double P, double A);

}  // namespace ehvac::plane_wave
