#pragma once

// Test-only oracles, independent of the library's evaluation paths.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace oracle {

/// Gelfand-Tsetlin patterns with top row (a+b, b, 0), counted by brute force.
inline std::int64_t gt_pattern_count(std::int64_t a, std::int64_t b) {
  std::int64_t count = 0;
  for (std::int64_t m1 = 0; m1 <= a + b; ++m1)
    for (std::int64_t m2 = 0; m2 <= a + b; ++m2) {
      if (!(a + b >= m1 && m1 >= b && b >= m2 && m2 >= 0)) continue;
      for (std::int64_t k = 0; k <= a + b; ++k)
        if (m1 >= k && k >= m2) ++count;
    }
  return count;
}

/// Complete homogeneous symmetric polynomial h_k(x1, x2, x3).
inline std::complex<double> h_poly(int k, const std::array<std::complex<double>, 3>& x) {
  if (k < 0) return 0.0;
  std::complex<double> s = 0.0;
  for (int i = 0; i <= k; ++i)
    for (int j = 0; i + j <= k; ++j)
      s += std::pow(x[0], i) * std::pow(x[1], j) * std::pow(x[2], k - i - j);
  return s;
}

/// Schur polynomial s_{(a+b, b, 0)} at x_i = exp(i theta_i), Jacobi-Trudi form.
inline std::complex<double> schur_jacobi_trudi(int a, int b, const std::array<double, 3>& theta) {
  const std::array<std::complex<double>, 3> x{std::polar(1.0, theta[0]), std::polar(1.0, theta[1]),
                                              std::polar(1.0, theta[2])};
  const std::array<int, 3> lam{a + b, b, 0};
  std::complex<double> m[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = h_poly(lam[i] - i + j, x);
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Uniform point of the alcove {t1, t2 >= 0, t1 + t2 <= 2 pi}.
inline std::array<double, 2> random_alcove(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double x = u(rng), y = u(rng);
  if (x + y > 1.0) {
    x = 1.0 - x;
    y = 1.0 - y;
  }
  const double two_pi = 6.283185307179586;
  return {two_pi * x, two_pi * y};
}

}  // namespace oracle
