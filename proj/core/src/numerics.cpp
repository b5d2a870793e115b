#include "ehvac/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace ehvac::numerics {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;
constexpr long double kEulerGamma = 0.57721566490153286060651209008240243L;
constexpr double kBesselSeam = 12.0;

long double j_series(int order, long double x) {
  const long double q = x * x / 4.0L;
  long double term = (order == 0) ? 1.0L : x / 2.0L;
  long double sum = term;
  for (int k = 1; k < 300; ++k) {
    term *= -q / (static_cast<long double>(k) * (k + order));
    sum += term;
    if (std::abs(term) < 1e-24L * std::abs(sum) + 1e-4950L) break;
  }
  return sum;
}

long double y0_series(long double x) {
  // Y0 = (2/pi) [ (ln(x/2) + gamma) J0 - sum_{k>=1} (-1)^k H_k q^k/(k!)^2 ]
  const long double q = x * x / 4.0L;
  long double term = 1.0L, hsum = 0.0L, acc = 0.0L;
  for (int k = 1; k < 300; ++k) {
    term *= -q / (static_cast<long double>(k) * k);
    hsum += 1.0L / k;
    const long double contrib = term * hsum;
    acc += contrib;
    if (std::abs(contrib) < 1e-26L * std::max(std::abs(acc), 1.0L)) break;
  }
  const long double j0 = j_series(0, x);
  return (2.0L / kPi) * ((std::log(x / 2.0L) + kEulerGamma) * j0 - acc);
}

long double y1_series(long double x) {
  // Y1 = (2/pi) [ (ln(x/2) + gamma) J1 - 1/x ]
  //      - (x/(2 pi)) sum_{k>=0} (-1)^k (H_k + H_{k+1}) q^k / (k! (k+1)!)
  const long double q = x * x / 4.0L;
  long double term = 1.0L, hk = 0.0L, hk1 = 1.0L;
  long double acc = hk + hk1;  // k = 0
  for (int k = 1; k < 300; ++k) {
    term *= -q / (static_cast<long double>(k) * (k + 1));
    hk += 1.0L / k;
    hk1 += 1.0L / (k + 1);
    const long double contrib = term * (hk + hk1);
    acc += contrib;
    if (std::abs(contrib) < 1e-26L * std::max(std::abs(acc), 1.0L)) break;
  }
  const long double j1 = j_series(1, x);
  return (2.0L / kPi) * ((std::log(x / 2.0L) + kEulerGamma) * j1 - 1.0L / x) -
         (x / (2.0L * kPi)) * acc;
}

// Hankel asymptotic J_n ~ sqrt(2/(pi x)) (P cos chi - Q sin chi),
// Y_n ~ sqrt(2/(pi x)) (P sin chi + Q cos chi), chi = x - (n/2 + 1/4) pi.
// Series truncated at the smallest term (it is divergent).
void hankel_pq(int order, long double x, long double& p, long double& q) {
  const long double mu = 4.0L * order * order;
  p = 1.0L;
  q = 0.0L;
  long double t = 1.0L, last = std::numeric_limits<long double>::max();
  for (int k = 1; k < 80; ++k) {
    const long double f = 2.0L * k - 1.0L;
    t *= (mu - f * f) / (8.0L * x * k);
    if (std::abs(t) >= last) break;
    last = std::abs(t);
    const int j = k / 2;
    if (k % 2 == 1) {
      q += (j % 2 == 0) ? t : -t;  // d1 - d3 + d5 - ...
    } else {
      p += (j % 2 == 1) ? -t : t;  // 1 - d2 + d4 - ...
    }
  }
}

double bessel_asymptotic(BesselKind kind, int order, double x) {
  const long double xl = x;
  long double p, q;
  hankel_pq(order, xl, p, q);
  const long double chi = xl - (order / 2.0L + 0.25L) * kPi;
  const long double amp = std::sqrt(2.0L / (kPi * xl));
  const long double c = std::cos(chi), s = std::sin(chi);
  const long double v =
      (kind == BesselKind::J) ? amp * (p * c - q * s) : amp * (p * s + q * c);
  return static_cast<double>(v);
}

double poly_eval(double c3, double c2, double c1, double c0, double x) {
  return ((c3 * x + c2) * x + c1) * x + c0;
}

double poly_deriv(double c3, double c2, double c1, double x) {
  return (3.0 * c3 * x + 2.0 * c2) * x + c1;
}

}  // namespace

double bessel(BesselKind kind, int order, double x) {
  if (order != 0 && order != 1)
    throw std::invalid_argument("bessel: order must be 0 or 1");
  if (kind == BesselKind::J) {
    if (x < 0.0) throw std::domain_error("bessel: J requires x >= 0");
    if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  } else {
    if (x <= 0.0) throw std::domain_error("bessel: Y requires x > 0");
  }
  if (x < kBesselSeam) {
    if (kind == BesselKind::J) return static_cast<double>(j_series(order, x));
    return static_cast<double>(order == 0 ? y0_series(x) : y1_series(x));
  }
  return bessel_asymptotic(kind, order, x);
}

CubicRealRoots solve_cubic_real(double c3, double c2, double c1, double c0) {
  if (std::abs(c3) < 1e-300)
    throw std::invalid_argument("solve_cubic_real: leading coefficient ~ 0");

  // Depressed form t^3 + p t + q with x = t - a2/3, a_i = c_i/c3.
  const double a2 = c2 / c3, a1 = c1 / c3, a0 = c0 / c3;
  const double p = a1 - a2 * a2 / 3.0;
  const double q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
  const double shift = a2 / 3.0;

  std::vector<double> roots;
  const double half_q = q / 2.0, third_p = p / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;

  if (disc <= 0.0) {
    // Three real roots: Viete.
    const double m = std::sqrt(-third_p);
    double cosarg = (m > 0.0) ? std::clamp(-half_q / (m * m * m), -1.0, 1.0)
                              : 0.0;
    const double phi = std::acos(cosarg) / 3.0;
    for (int k = 0; k < 3; ++k) {
      roots.push_back(2.0 * m * std::cos(phi - 2.0 * kPi * k / 3.0) - shift);
    }
  } else {
    // One real root: Cardano with a cancellation-safe branch.
    const double s = std::sqrt(disc);
    const double u = std::cbrt(-half_q + s);
    const double v = (u != 0.0) ? -third_p / u : std::cbrt(-half_q - s);
    roots.push_back(u + v - shift);
  }

  for (double& r : roots) {
    const double f = poly_eval(c3, c2, c1, c0, r);
    const double df = poly_deriv(c3, c2, c1, r);
    if (df != 0.0 && std::isfinite(f / df)) {
      const double step = f / df;
      if (std::abs(step) < 1e-2 * std::max(1.0, std::abs(r))) r -= step;
    }
  }

  std::sort(roots.begin(), roots.end());
  CubicRealRoots out;
  for (double r : roots) {
    if (out.roots.empty() || std::abs(r - out.roots.back()) > 1e-9)
      out.roots.push_back(r);
  }
  return out;
}

std::vector<double> rk4_step(const OdeRhs& rhs, double s,
                             const std::vector<double>& y, double h) {
  const std::size_t n = y.size();
  std::vector<double> k1 = rhs(s, y);
  std::vector<double> tmp(n);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
  std::vector<double> k2 = rhs(s + 0.5 * h, tmp);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
  std::vector<double> k3 = rhs(s + 0.5 * h, tmp);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
  std::vector<double> k4 = rhs(s + h, tmp);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

std::vector<std::pair<double, std::vector<double>>> integrate_ode(
    const OdeRhs& rhs, const std::vector<double>& y0,
    std::pair<double, double> s_span, const OdeStepControl& control) {
  if (control.abs_tol <= 0.0 || control.rel_tol <= 0.0 ||
      control.initial_step <= 0.0 || control.max_steps < 1)
    throw std::invalid_argument("integrate_ode: bad step control");
  const auto [s_begin, s_end] = s_span;
  if (!std::isfinite(s_begin) || !std::isfinite(s_end))
    throw std::invalid_argument("integrate_ode: span must be finite");

  const double dir = (s_end >= s_begin) ? 1.0 : -1.0;
  double s = s_begin;
  std::vector<double> y = y0;
  double h = std::min(control.initial_step, std::abs(s_end - s_begin));
  if (h == 0.0) h = control.initial_step;

  std::vector<std::pair<double, std::vector<double>>> samples;
  samples.emplace_back(s, y);

  auto finite = [](const std::vector<double>& v) {
    for (double x : v)
      if (!std::isfinite(x)) return false;
    return true;
  };

  int steps = 0;
  while (dir * (s_end - s) > 0.0) {
    if (++steps > control.max_steps) {
      std::ostringstream msg;
      msg << "integrate_ode: step budget exhausted at s = " << s;
      throw integration_error(msg.str());
    }
    double hs = std::min(h, std::abs(s_end - s)) * dir;

    std::vector<double> y_full = rk4_step(rhs, s, y, hs);
    std::vector<double> y_half = rk4_step(rhs, s, y, hs / 2.0);
    if (!finite(y_half) || !finite(y_full)) {
      std::ostringstream msg;
      msg << "integrate_ode: non-finite right-hand side; last good s = " << s;
      throw integration_error(msg.str());
    }
    y_half = rk4_step(rhs, s + hs / 2.0, y_half, hs / 2.0);
    if (!finite(y_half)) {
      std::ostringstream msg;
      msg << "integrate_ode: non-finite right-hand side; last good s = " << s;
      throw integration_error(msg.str());
    }

    double err = 0.0, tol = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      err = std::max(err, std::abs(y_half[i] - y_full[i]));
      tol = std::max(tol, control.abs_tol + control.rel_tol * std::abs(y_half[i]));
    }
    if (err <= tol) {
      s += hs;
      y = std::move(y_half);
      samples.emplace_back(s, y);
      if (err < tol / 32.0) h *= 2.0;
    } else {
      h /= 2.0;
      if (h < 1e-14 * std::max(1.0, std::abs(s))) {
        std::ostringstream msg;
        msg << "integrate_ode: step underflow at s = " << s;
        throw integration_error(msg.str());
      }
    }
  }
  // Endpoint lands exactly by construction of the clipped step.
  samples.back().first = s_end;
  return samples;
}

double find_root_bracketed(const std::function<double(double)>& f, double a,
                           double b, double tol) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0)
    throw bracket_error("find_root_bracketed: no sign change in [a, b]");
  for (int it = 0; it < 300 && std::abs(b - a) > tol; ++it) {
    // Secant proposal, kept only if it lands well inside the bracket.
    double x = (fb != fa) ? b - fb * (b - a) / (fb - fa) : 0.5 * (a + b);
    const double lo = std::min(a, b), hi = std::max(a, b);
    const double margin = 0.01 * (hi - lo);
    if (!(x > lo + margin && x < hi - margin)) x = 0.5 * (a + b);
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (fa * fx < 0.0) {
      b = x;
      fb = fx;
    } else {
      a = x;
      fa = fx;
    }
  }
  return 0.5 * (a + b);
}

void jacobi_eigen_symmetric(std::vector<double> a, int n,
                            std::vector<double>& eigenvalues,
                            std::vector<double>& eigenvectors) {
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = ((theta >= 0.0) ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a[i * n + i] < a[j * n + j]; });
  eigenvalues.assign(n, 0.0);
  eigenvectors.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int c = 0; c < n; ++c) {
    eigenvalues[c] = a[order[c] * n + order[c]];
    for (int r = 0; r < n; ++r) eigenvectors[r * n + c] = v[r * n + order[c]];
  }
}

}  // namespace ehvac::numerics
