// Shared helpers for the test binaries.

#ifndef UNCERT_TESTS_SUPPORT_HPP_
#define UNCERT_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cmath>

#include "uncert/linalg.hpp"

namespace uncert_test {

using uncert::Complex;
using uncert::Matrix;
using uncert::Vector;

inline Matrix random_hermitian(int d, uncert::Rng& rng) {
  const Matrix g = uncert::gaussian_matrix(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

inline Matrix random_density(int d, uncert::Rng& rng) {
  const Matrix g = uncert::gaussian_matrix(d, d, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return rho;
}

inline Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix pauli_y() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

inline Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline double frob_dist(const Matrix& a, const Matrix& b) {
  return (a - b).norm();
}

inline double max_abs(const Matrix& a) { return a.cwiseAbs().maxCoeff(); }

// Brute-force distinguishability of two qubit POVMs over entangled pure
// inputs (U (x) 1)(cos a |00> + sin a |11>). Coarse grid followed by local
// refinement; good to ~1e-4, used as an independent cross-check.
inline double measurement_diamond_oracle(const std::vector<Matrix>& povm1,
                                         const std::vector<Matrix>& povm2) {
  const auto value = [&](double alpha, double th, double ph, double la) {
    Vector psi(4);
    const Complex e_ph = std::exp(Complex(0, ph));
    const Complex e_la = std::exp(Complex(0, la));
    // U columns: [cos th, -e^{-i la} sin th; e^{i ph} sin th,
    //             e^{i(ph + ... )} cos th] acting on the Schmidt frame.
    const Complex u00 = std::cos(th), u01 = -std::conj(e_la) * std::sin(th);
    const Complex u10 = e_ph * std::sin(th), u11 = e_ph * e_la * std::cos(th);
    const double c = std::cos(alpha), s = std::sin(alpha);
    psi << c * u00, s * u01, c * u10, s * u11;
    const Matrix rho = psi * psi.adjoint();
    double total = 0.0;
    for (size_t x = 0; x < povm1.size(); ++x) {
      const Matrix cond = uncert::partial_trace(
          uncert::kron(povm1[x] - povm2[x], Matrix::Identity(2, 2)) * rho,
          {2, 2}, {1});
      total += uncert::schatten_norm(cond, uncert::Schatten::Trace);
    }
    return 0.5 * total;
  };
  const double pi = std::acos(-1.0);
  double best = 0.0;
  double ba = 0, bt = 0, bp = 0, bl = 0;
  const int n = 13;
  for (int ia = 0; ia <= n; ++ia)
    for (int it = 0; it <= n; ++it)
      for (int ip = 0; ip <= n; ++ip)
        for (int il = 0; il <= n; ++il) {
          const double a = 0.5 * pi * ia / n, t = 0.5 * pi * it / n;
          const double p = 2 * pi * ip / n, l = 2 * pi * il / n;
          const double v = value(a, t, p, l);
          if (v > best) { best = v; ba = a; bt = t; bp = p; bl = l; }
        }
  double step = 0.5 * pi / n;
  for (int round = 0; round < 24; ++round) {
    step *= 0.6;
    for (int ia = -1; ia <= 1; ++ia)
      for (int it = -1; it <= 1; ++it)
        for (int ip = -1; ip <= 1; ++ip)
          for (int il = -1; il <= 1; ++il) {
            const double v = value(ba + ia * step, bt + it * step,
                                   bp + ip * step, bl + il * step);
            if (v > best) {
              best = v;
              ba += ia * step; bt += it * step;
              bp += ip * step; bl += il * step;
            }
          }
  }
  return best;
}

// Chebyshev radius of a set of qubit states by brute force over Bloch-ball
// centers: coarse grid plus refinement. Good to ~1e-4.
inline double qubit_radius_oracle(const std::vector<Matrix>& states) {
  const auto radius_at = [&](double x, double y, double z) {
    if (x * x + y * y + z * z > 1.0) return 2.0;
    const Matrix sigma = 0.5 * (Matrix::Identity(2, 2) + x * pauli_x() +
                                y * pauli_y() + z * pauli_z());
    double worst = 0.0;
    for (const Matrix& rho : states)
      worst = std::max(
          worst, 0.5 * uncert::schatten_norm(rho - sigma,
                                             uncert::Schatten::Trace));
    return worst;
  };
  double best = 2.0, bx = 0, by = 0, bz = 0;
  const int n = 10;
  for (int ix = -n; ix <= n; ++ix)
    for (int iy = -n; iy <= n; ++iy)
      for (int iz = -n; iz <= n; ++iz) {
        const double v =
            radius_at(ix / double(n), iy / double(n), iz / double(n));
        if (v < best) { best = v; bx = ix / double(n); by = iy / double(n);
                        bz = iz / double(n); }
      }
  // Pattern search; the objective is convex in the center, so shrinking the
  // step only on failed rounds converges to the global optimum.
  double step = 1.0 / n;
  while (step > 1e-7) {
    bool moved = false;
    for (int ix = -1; ix <= 1; ++ix)
      for (int iy = -1; iy <= 1; ++iy)
        for (int iz = -1; iz <= 1; ++iz) {
          const double v =
              radius_at(bx + ix * step, by + iy * step, bz + iz * step);
          if (v < best - 1e-13) {
            best = v;
            bx += ix * step; by += iy * step; bz += iz * step;
            moved = true;
          }
        }
    if (!moved) step *= 0.5;
  }
  return best;
}

// Golden-section maximizer for unimodal f on [lo, hi].
template <typename F>
double golden_section_max(F f, double lo, double hi, int iters = 200) {
  const double phi = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + phi * (b - a); f2 = f(x2);
    } else {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - phi * (b - a); f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

namespace quad_detail {
// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 constants).
inline const double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993945, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline const double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline const double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

template <typename F>
void gk15(F& f, double a, double b, double* value, double* error) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double kronrod = 0.0, gauss = 0.0;
  for (int j = 0; j < 8; ++j) {
    const double off = half * kXgk[j];
    const double fsum =
        j == 7 ? f(mid) : f(mid - off) + f(mid + off);
    kronrod += kWgk[j] * fsum;
    if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
  }
  *value = kronrod * half;
  *error = std::abs((kronrod - gauss) * half);
}

template <typename F>
double adaptive(F& f, double a, double b, double tol, int depth) {
  double v, e;
  gk15(f, a, b, &v, &e);
  if (e <= tol || depth >= 30) return v;
  const double mid = 0.5 * (a + b);
  return adaptive(f, a, mid, 0.5 * tol, depth + 1) +
         adaptive(f, mid, b, 0.5 * tol, depth + 1);
}
}  // namespace quad_detail

template <typename F>
double integrate(F f, double a, double b, double tol = 1e-12) {
  return quad_detail::adaptive(f, a, b, tol, 0);
}

inline double gaussian_density(double x, double sigma) {
  return std::exp(-x * x / (2 * sigma * sigma)) /
         (sigma * std::sqrt(2 * std::acos(-1.0)));
}

// <psi, Q(f) psi> for a width-sigma_psi state, a sigma_noise-limited
// measurement, and test function f = sqrt(2 pi) sigma_f g_{sigma_f}, done as
// the printed double integral over [-10 sigma, 10 sigma] windows.
inline double overlap_quadrature(double sigma_psi, double sigma_noise,
                                 double sigma_f) {
  const double span =
      10 * std::max({sigma_psi, sigma_noise, sigma_f});
  const double amp = std::sqrt(2 * std::acos(-1.0)) * sigma_f;
  return integrate(
      [&](double pp) {
        return gaussian_density(pp, sigma_psi) *
               integrate(
                   [&](double p) {
                     return gaussian_density(pp - p, sigma_noise) * amp *
                            gaussian_density(p, sigma_f);
                   },
                   -span, span, 1e-13);
      },
      -span, span, 1e-12);
}

// Distinguishability lower bound as a function of the test width, before
// optimization; the narrow-state closed form is its sigma_psi = 0 slice.
inline double test_width_tradeoff(double sigma_f, double sigma_Q,
                                  double sigma_P, double sigma_psi) {
  const double cap = 1.0 / (2 * sigma_Q);
  const double s2 = sigma_f * sigma_f + sigma_psi * sigma_psi;
  return sigma_f / std::sqrt(s2 + sigma_P * sigma_P) -
         sigma_f / std::sqrt(s2 + cap * cap);
}

}  // namespace uncert_test

#endif  // UNCERT_TESTS_SUPPORT_HPP_
