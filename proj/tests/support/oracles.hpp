// Copyright 2026 The Strada Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only reference implementations, deliberately independent of the
// library code paths they check: a pivoting dense solver for polynomial
// boundary systems and an adaptive Simpson integrator.

#ifndef STRADA_TESTS_SUPPORT_ORACLES_HPP_
#define STRADA_TESTS_SUPPORT_ORACLES_HPP_

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace strada::testing {

/// Gaussian elimination with partial pivoting on a dense system.
inline std::vector<double> solve_dense(std::vector<std::vector<double>> a,
                                       std::vector<double> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) {
        pivot = r;
      }
    }
    if (std::abs(a[pivot][col]) < 1e-300) {
      throw std::runtime_error("singular boundary system");
    }
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) {
        a[r][c] -= f * a[col][c];
      }
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t row = n; row-- > 0;) {
    double sum = b[row];
    for (std::size_t c = row + 1; c < n; ++c) {
      sum -= a[row][c] * x[c];
    }
    x[row] = sum / a[row][row];
  }
  return x;
}

/// Quintic boundary solve via the full 6x6 system (oracle for the library's
/// closed form). Boundary order: p0, v0, a0 at t=0; p1, v1, a1 at t=T.
inline std::vector<double> quintic_by_elimination(double p0, double v0,
                                                  double a0, double p1,
                                                  double v1, double a1,
                                                  double T) {
  auto pow_row = [&](double t, int deriv) {
    std::vector<double> row(6, 0.0);
    for (int k = deriv; k < 6; ++k) {
      double c = 1.0;
      for (int d = 0; d < deriv; ++d) {
        c *= static_cast<double>(k - d);
      }
      row[static_cast<std::size_t>(k)] =
          c * std::pow(t, static_cast<double>(k - deriv));
    }
    return row;
  };
  std::vector<std::vector<double>> m = {pow_row(0, 0), pow_row(0, 1),
                                        pow_row(0, 2), pow_row(T, 0),
                                        pow_row(T, 1), pow_row(T, 2)};
  return solve_dense(std::move(m), {p0, v0, a0, p1, v1, a1});
}

/// Quartic boundary solve via the 5x5 system: position/velocity/acceleration
/// at t=0, velocity/acceleration at t=T.
inline std::vector<double> quartic_by_elimination(double p0, double v0,
                                                  double a0, double v1,
                                                  double a1, double T) {
  auto pow_row = [&](double t, int deriv) {
    std::vector<double> row(5, 0.0);
    for (int k = deriv; k < 5; ++k) {
      double c = 1.0;
      for (int d = 0; d < deriv; ++d) {
        c *= static_cast<double>(k - d);
      }
      row[static_cast<std::size_t>(k)] =
          c * std::pow(t, static_cast<double>(k - deriv));
    }
    return row;
  };
  std::vector<std::vector<double>> m = {pow_row(0, 0), pow_row(0, 1),
                                        pow_row(0, 2), pow_row(T, 1),
                                        pow_row(T, 2)};
  return solve_dense(std::move(m), {p0, v0, a0, v1, a1});
}

namespace detail {

inline double simpson(const std::function<double(double)>& f, double a,
                      double b) {
  return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

inline double adaptive(const std::function<double(double)>& f, double a,
                       double b, double whole, double tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = simpson(f, a, mid);
  const double right = simpson(f, mid, b);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive(f, a, mid, left, 0.5 * tol, depth - 1) +
         adaptive(f, mid, b, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature.
inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-12) {
  return detail::adaptive(f, a, b, detail::simpson(f, a, b), tol, 40);
}

}  // namespace strada::testing

#endif  // STRADA_TESTS_SUPPORT_ORACLES_HPP_
