#pragma once

#include "ehvac/lfg_theory.hpp"
#include "ehvac/tensor4.hpp"

namespace ehvac::effective {

enum class ConformalChoice { raw_inverse, paper_rescaled };
enum class RootSelect { future, past };

/// Effective geometry of one polarization mode at one event:
/// cometric g~^{mn} = g^{mn} + Lambda F^m_l F^{ln} and its inverse.
struct EffectiveGeometry {
  tensor4::Mat4 cometric;
  tensor4::Mat4 metric;
  lfg::PolarizationMode mode = lfg::PolarizationMode::plus;
  ConformalChoice conformal = ConformalChoice::raw_inverse;
};

/// Propagation covector with its field contractions:
/// h_m = F_m^l k_l, h*_m = F*_m^l k_l, k^2 = g^{mn} k_m k_n,
/// h^2 = g^{mn} h_m h_n.
struct DispersionProbe {
  std::array<double, 4> k{};
  std::array<double, 4> h{};
  std::array<double, 4> hstar{};
  double k2 = 0.0;
  double h2 = 0.0;
  double hstar2 = 0.0;
  double h_dot_hstar = 0.0;
};

/// Symmetric contraction F^m_l F^{ln}.
tensor4::Tensor2 substress(const tensor4::Tensor2& F_mixed,
                           const tensor4::Tensor2& F_upper);

/// Build the mode's effective cometric and metric from the field tensor
/// at an event.  Throws on singular cometric or degenerate dispersion.
EffectiveGeometry effective_cometric(const tensor4::Metric4& metric,
                                     const tensor4::Tensor2& F_lower,
                                     const lfg::LagrangianModel& model,
                                     lfg::PolarizationMode mode);

/// Same cometric through the stress-energy route:
/// (1 + Lambda (G L_G - L)/(4 L_F)) g^{mn} - (Lambda/(4 L_F)) T^{mn}.
tensor4::Mat4 effective_cometric_from_stress(const tensor4::Metric4& metric,
                                             const tensor4::Tensor2& T_upper,
                                             const lfg::LagrangianModel& model,
                                             double F, double G,
                                             lfg::PolarizationMode mode);

/// Probe with a fully specified covector k.
DispersionProbe make_probe(const tensor4::Tensor2& F_lower,
                           const tensor4::Metric4& metric,
                           const std::array<double, 4>& k);

/// Probe whose k_t solves g~^{mn} k_m k_n = 0 for the given spatial
/// components; future = larger k_t root.
DispersionProbe make_probe_on_cone(const tensor4::Tensor2& F_lower,
                                   const tensor4::Metric4& metric,
                                   const EffectiveGeometry& geom,
                                   const std::array<double, 3>& k_spatial,
                                   RootSelect select = RootSelect::future);

/// g~^{mn} k_m k_n; vanishes iff k obeys the mode's dispersion law.
double dispersion_residual(const DispersionProbe& probe,
                           const EffectiveGeometry& geom);

/// Lambda1 (k^2)^2 + Lambda2 h^2 k^2 + Lambda3 (h^2)^2.
double fresnel_residual(const DispersionProbe& probe,
                        const lfg::DispersionCoefficients& coeffs);

/// Signature check helper: true when the metric has exactly one
/// positive and three negative eigenvalues.
bool is_lorentzian(const tensor4::Mat4& metric);

}  // namespace ehvac::effective
