#include "ehvac/tensor4.hpp"

#include <cmath>
#include <sstream>

namespace ehvac::tensor4 {

namespace {

// Sign of a permutation of {0,1,2,3}; 0 if repeated.
int perm_sign(int a, int b, int c, int d) {
  int p[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) sign = -sign;
    }
  return sign;
}

// 4th-order central difference of a metric component field along one
// coordinate.
double d_metric(const MetricField& field, const Event& ev, int dir, int i,
                int j, double h) {
  auto at = [&](double offset) {
    Event e = ev;
    e.coords[dir] += offset;
    return field(e).g(i, j);
  };
  return (-at(2.0 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2.0 * h)) /
         (12.0 * h);
}

double fd_step(const Event& ev, int dir) {
  return std::max(1e-4, 1e-4 * std::abs(ev.coords[dir]));
}

}  // namespace

Mat4 Mat4::identity() { return diag(1.0, 1.0, 1.0, 1.0); }

Mat4 Mat4::diag(double d0, double d1, double d2, double d3) {
  Mat4 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  m(3, 3) = d3;
  return m;
}

double Mat4::det() const {
  // LU with partial pivoting.
  double lu[16];
  for (int i = 0; i < 16; ++i) lu[i] = a[i];
  double det = 1.0;
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(lu[4 * r + c]) > std::abs(lu[4 * piv + c])) piv = r;
    if (piv != c) {
      for (int k = 0; k < 4; ++k) std::swap(lu[4 * c + k], lu[4 * piv + k]);
      det = -det;
    }
    const double d = lu[4 * c + c];
    if (d == 0.0) return 0.0;
    det *= d;
    for (int r = c + 1; r < 4; ++r) {
      const double f = lu[4 * r + c] / d;
      for (int k = c; k < 4; ++k) lu[4 * r + k] -= f * lu[4 * c + k];
    }
  }
  return det;
}

double Mat4::max_abs() const {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

Mat4 Mat4::inverse() const {
  const double scale = max_abs();
  const double d = det();
  if (std::abs(d) <= 1e-14 * scale * scale * scale * scale) {
    std::ostringstream msg;
    msg << "Mat4::inverse: singular matrix, |det| = " << std::abs(d)
        << " with entry scale " << scale;
    throw singular_metric_error(msg.str());
  }
  // Gauss-Jordan with partial pivoting.
  double w[4][8];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      w[i][j] = (*this)(i, j);
      w[i][4 + j] = (i == j) ? 1.0 : 0.0;
    }
  }
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(w[r][c]) > std::abs(w[piv][c])) piv = r;
    if (piv != c)
      for (int k = 0; k < 8; ++k) std::swap(w[c][k], w[piv][k]);
    const double p = w[c][c];
    for (int k = 0; k < 8; ++k) w[c][k] /= p;
    for (int r = 0; r < 4; ++r) {
      if (r == c) continue;
      const double f = w[r][c];
      if (f == 0.0) continue;
      for (int k = 0; k < 8; ++k) w[r][k] -= f * w[c][k];
    }
  }
  Mat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = w[i][4 + j];
  return out;
}

bool Mat4::is_symmetric(double tol) const {
  const double s = std::max(max_abs(), 1.0);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol * s) return false;
  return true;
}

bool Mat4::is_antisymmetric(double tol) const {
  const double s = std::max(max_abs(), 1.0);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      if (std::abs((*this)(i, j) + (*this)(j, i)) > tol * s) return false;
  return true;
}

Mat4 operator+(const Mat4& x, const Mat4& y) {
  Mat4 out;
  for (int i = 0; i < 16; ++i) out.a[i] = x.a[i] + y.a[i];
  return out;
}

Mat4 operator-(const Mat4& x, const Mat4& y) {
  Mat4 out;
  for (int i = 0; i < 16; ++i) out.a[i] = x.a[i] - y.a[i];
  return out;
}

Mat4 operator*(double s, const Mat4& x) {
  Mat4 out;
  for (int i = 0; i < 16; ++i) out.a[i] = s * x.a[i];
  return out;
}

Mat4 matmul(const Mat4& x, const Mat4& y) {
  Mat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += x(i, k) * y(k, j);
      out(i, j) = s;
    }
  return out;
}

Metric4 make_metric(const Mat4& g) {
  if (!g.is_symmetric(1e-14))
    throw singular_metric_error("make_metric: components not symmetric");
  Metric4 m;
  m.g = g;
  m.det = g.det();
  const double scale = g.max_abs();
  if (std::abs(m.det) <= 1e-14 * scale * scale * scale * scale)
    throw singular_metric_error("make_metric: degenerate metric");
  m.ginv = g.inverse();
  return m;
}

Metric4 background_metric(const Event& ev) {
  if (ev.chart == Chart::cartesian)
    return make_metric(Mat4::diag(1.0, -1.0, -1.0, -1.0));
  const double r = ev.coords[1];
  if (r <= 0.0) {
    std::ostringstream msg;
    msg << "background_metric: cylindrical chart singular at r = " << r;
    throw chart_singularity_error(msg.str());
  }
  return make_metric(Mat4::diag(1.0, -1.0, -r * r, -1.0));
}

Christoffel christoffel(const MetricField& field, const Event& ev) {
  const Metric4 g = field(ev);
  // dg[k][i][j] = partial_k g_{ij}
  double dg[4][4][4];
  for (int k = 0; k < 4; ++k) {
    const double h = fd_step(ev, k);
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        dg[k][i][j] = d_metric(field, ev, k, i, j, h);
        dg[k][j][i] = dg[k][i][j];
      }
  }
  Christoffel out{};
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m)
      for (int n = m; n < 4; ++n) {
        double s = 0.0;
        for (int a = 0; a < 4; ++a)
          s += g.ginv(l, a) * (dg[m][a][n] + dg[n][a][m] - dg[a][m][n]);
        out[idx3(l, m, n)] = 0.5 * s;
        out[idx3(l, n, m)] = 0.5 * s;
      }
  return out;
}

Tensor2 raise_lower(const Tensor2& T, Variance target1, Variance target2,
                    const Metric4& metric) {
  Tensor2 out = T;
  if (target1 != T.v1) {
    const Mat4& g = (target1 == Variance::upper) ? metric.ginv : metric.g;
    Mat4 m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k) s += g(i, k) * out.m(k, j);
        m(i, j) = s;
      }
    out.m = m;
    out.v1 = target1;
  }
  if (target2 != T.v2) {
    const Mat4& g = (target2 == Variance::upper) ? metric.ginv : metric.g;
    Mat4 m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k) s += out.m(i, k) * g(k, j);
        m(i, j) = s;
      }
    out.m = m;
    out.v2 = target2;
  }
  return out;
}

Tensor2 hodge_dual(const Tensor2& F_lower, const Metric4& metric) {
  if (F_lower.v1 != Variance::lower || F_lower.v2 != Variance::lower)
    throw std::invalid_argument("hodge_dual: expected lower-lower tensor");
  if (!F_lower.m.is_antisymmetric(1e-12))
    throw std::invalid_argument("hodge_dual: tensor not antisymmetric");
  const Tensor2 F_upper =
      raise_lower(F_lower, Variance::upper, Variance::upper, metric);
  const double root_g = std::sqrt(std::abs(metric.det));
  Tensor2 out;
  out.v1 = out.v2 = Variance::lower;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double s = 0.0;
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          const int sg = perm_sign(a, b, m, n);
          if (sg != 0) s += sg * F_upper.m(m, n);
        }
      out.m(a, b) = 0.5 * root_g * s;
    }
  return out;
}

InvariantPair invariants(const Tensor2& F_lower, const Metric4& metric) {
  if (F_lower.v1 != Variance::lower || F_lower.v2 != Variance::lower)
    throw std::invalid_argument("invariants: expected lower-lower tensor");
  const Tensor2 F_upper =
      raise_lower(F_lower, Variance::upper, Variance::upper, metric);
  const Tensor2 Fdual = hodge_dual(F_lower, metric);
  InvariantPair out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      out.F += F_lower.m(i, j) * F_upper.m(i, j);
      out.G += Fdual.m(i, j) * F_upper.m(i, j);
    }
  return out;
}

Rank4 riemann_numeric(const MetricField& field, const Event& ev, double h) {
  if (h <= 0.0) throw std::invalid_argument("riemann_numeric: h must be > 0");
  // dGamma[m][l][n][s] = partial_m Gamma^l_{n s}
  auto gamma_at = [&](int dir, double offset) {
    Event e = ev;
    e.coords[dir] += offset;
    return christoffel(field, e);
  };
  Christoffel dG[4];
  for (int m = 0; m < 4; ++m) {
    const Christoffel gp = gamma_at(m, h), gm = gamma_at(m, -h);
    for (int i = 0; i < 64; ++i) dG[m][i] = (gp[i] - gm[i]) / (2.0 * h);
  }
  const Christoffel G0 = christoffel(field, ev);

  Rank4 R{};
  for (int rho = 0; rho < 4; ++rho)
    for (int sig = 0; sig < 4; ++sig)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          double s = dG[mu][idx3(rho, nu, sig)] - dG[nu][idx3(rho, mu, sig)];
          for (int lam = 0; lam < 4; ++lam)
            s += G0[idx3(rho, mu, lam)] * G0[idx3(lam, nu, sig)] -
                 G0[idx3(rho, nu, lam)] * G0[idx3(lam, mu, sig)];
          R[idx4(rho, sig, mu, nu)] = s;
        }
  return R;
}

double max_abs_component(const Rank4& R) {
  double m = 0.0;
  for (double x : R) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace ehvac::tensor4
