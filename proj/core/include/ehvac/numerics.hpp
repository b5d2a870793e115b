#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ehvac/errors.hpp"

namespace ehvac::numerics {

enum class BesselKind { J, Y };

/// Cylinder functions J0, J1, Y0, Y1.
///
/// Power series (long double accumulation) below the seam x = 12,
/// Hankel amplitude/phase asymptotics above it.  Absolute error is
/// <= 1e-12 on (0, 50], relative error <= 1e-10 on (50, 1e4].
/// Domain: x >= 0 for J, x > 0 for Y.
double bessel(BesselKind kind, int order, double x);

/// Real roots of a cubic, multiplicity collapsed, sorted ascending.
struct CubicRealRoots {
  std::vector<double> roots;  // length 1..3
};

/// All real roots of c3 x^3 + c2 x^2 + c1 x + c0 (c3 != 0).
/// Viete's trigonometric form when all three roots are real, Cardano
/// otherwise; every root gets one Newton polish.  Roots closer than
/// 1e-9 are collapsed.
CubicRealRoots solve_cubic_real(double c3, double c2, double c1, double c0);

struct OdeStepControl {
  double initial_step = 1e-3;
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_steps = 2'000'000;
};

using OdeRhs = std::function<std::vector<double>(double, const std::vector<double>&)>;

/// One classic RK4 step: y(s) -> y(s + h).
std::vector<double> rk4_step(const OdeRhs& rhs, double s,
                             const std::vector<double>& y, double h);

/// Explicit RK4 with step halving until the step-doubling error
/// estimate meets abs_tol + rel_tol*|y|.  Samples include both span
/// endpoints.  Throws integration_error on step exhaustion or a
/// non-finite right-hand side (the message reports the last good s).
std::vector<std::pair<double, std::vector<double>>> integrate_ode(
    const OdeRhs& rhs, const std::vector<double>& y0,
    std::pair<double, double> s_span, const OdeStepControl& control = {});

/// Root of f in [a, b] with f(a) f(b) < 0; bisection with secant
/// acceleration, bracket narrowed to width <= tol.
double find_root_bracketed(const std::function<double(double)>& f, double a,
                           double b, double tol = 1e-13);

/// Eigenvalues (ascending) and eigenvectors of a dense symmetric n x n
/// matrix, by cyclic Jacobi rotations.  a is row-major n*n.
void jacobi_eigen_symmetric(std::vector<double> a, int n,
                            std::vector<double>& eigenvalues,
                            std::vector<double>& eigenvectors);

}  // namespace ehvac::numerics
