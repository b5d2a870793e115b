#pragma once

#include <array>
#include <functional>

#include "ehvac/errors.hpp"

namespace ehvac::tensor4 {

enum class Chart { cartesian, cylindrical };
enum class Variance { upper, lower };

/// Spacetime point in one of the two fixed charts.
/// Coordinate order: (t, x, y, z) or (t, r, theta, z).
struct Event {
  Chart chart = Chart::cartesian;
  std::array<double, 4> coords{};

  double t() const { return coords[0]; }
  double r() const { return coords[1]; }  // cylindrical radius (or x)
};

/// Dense 4x4 matrix, row-major.
struct Mat4 {
  std::array<double, 16> a{};

  double& operator()(int i, int j) { return a[4 * i + j]; }
  double operator()(int i, int j) const { return a[4 * i + j]; }

  static Mat4 zero() { return {}; }
  static Mat4 identity();
  static Mat4 diag(double d0, double d1, double d2, double d3);

  double det() const;
  /// Gauss-Jordan inverse with partial pivoting; throws
  /// singular_metric_error below the nondegeneracy threshold.
  Mat4 inverse() const;
  double max_abs() const;
  bool is_symmetric(double tol = 1e-14) const;
  bool is_antisymmetric(double tol = 1e-14) const;
};

Mat4 operator+(const Mat4& x, const Mat4& y);
Mat4 operator-(const Mat4& x, const Mat4& y);
Mat4 operator*(double s, const Mat4& x);
Mat4 matmul(const Mat4& x, const Mat4& y);

/// Background (or effective) metric at an event: components, inverse
/// and determinant bundled, signature +---.
struct Metric4 {
  Mat4 g;     // g_{mu nu}
  Mat4 ginv;  // g^{mu nu}
  double det = 0.0;
};

/// Validates symmetry (1e-14) and nondegeneracy
/// (|det| > 1e-14 max|entry|^4), then inverts.
Metric4 make_metric(const Mat4& g);

/// Rank-2 tensor with explicit index variances.
struct Tensor2 {
  Mat4 m;
  Variance v1 = Variance::lower;
  Variance v2 = Variance::lower;
};

struct InvariantPair {
  double F = 0.0;  // F_{mu nu} F^{mu nu}
  double G = 0.0;  // F*_{mu nu} F^{mu nu}
};

using MetricField = std::function<Metric4(const Event&)>;
using Christoffel = std::array<double, 64>;   // [lambda][mu][nu]
using Rank4 = std::array<double, 256>;        // [a][b][c][d]

inline int idx3(int l, int m, int n) { return 16 * l + 4 * m + n; }
inline int idx4(int a, int b, int c, int d) {
  return 64 * a + 16 * b + 4 * c + d;
}

/// Minkowski background: diag(1,-1,-1,-1) Cartesian,
/// diag(1,-1,-r^2,-1) cylindrical.  Cylindrical r <= 0 is a hard error.
Metric4 background_metric(const Event& ev);

/// Gamma^lambda_{mu nu} of an arbitrary metric field by 4th-order
/// central differences, step h = max(1e-4, 1e-4 |coord|).
Christoffel christoffel(const MetricField& field, const Event& ev);

/// Raise/lower indices against the supplied metric.  Round trips
/// reproduce the input to 1e-12.
Tensor2 raise_lower(const Tensor2& T, Variance target1, Variance target2,
                    const Metric4& metric);

/// Hodge dual F*_{ab} = (1/2) eps_{ab mu nu} F^{mu nu} with
/// eps_{0123} = +sqrt|g|.  Applying it twice gives -F.
Tensor2 hodge_dual(const Tensor2& F_lower, const Metric4& metric);

/// Poincare invariants of an antisymmetric lower-lower field tensor.
InvariantPair invariants(const Tensor2& F_lower, const Metric4& metric);

/// R^rho_{sigma mu nu} from finite differences of the Christoffel
/// symbols of the metric field; step h for the outer differences.
Rank4 riemann_numeric(const MetricField& field, const Event& ev, double h);

/// Largest |R^rho_{sigma mu nu}| component.
double max_abs_component(const Rank4& R);

}  // namespace ehvac::tensor4
