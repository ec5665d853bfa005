// Copyright 2026 The edfnorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace edfnorm::oracle {
namespace {

long double erf_series(long double x) {
  // erf(x) = 2/sqrt(pi) sum (-1)^k x^(2k+1) / (k! (2k+1))
  long double term = x;
  long double sum = x;
  for (int k = 1; k < 200; ++k) {
    term *= -x * x / k;
    const long double add = term / (2 * k + 1);
    sum += add;
    if (std::fabs(add) < 1e-22L * std::fabs(sum)) break;
  }
  return 2.0L / std::sqrt(std::numbers::pi_v<long double>) * sum;
}

// erfc(x) for x > 0 by the Lentz continued fraction
// erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))).
long double erfc_cf(long double x) {
  const long double tiny = 1e-300L;
  long double f = x;
  long double c = x;
  long double d = 0.0L;
  for (int k = 1; k < 5000; ++k) {
    const long double a = k / 2.0L;
    d = x + a * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0L / d;
    const long double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0L) < 1e-21L) break;
  }
  return std::exp(-x * x) / std::sqrt(std::numbers::pi_v<long double>) / f;
}

struct Rule {
  std::vector<double> x;  // on [-1, 1]
  std::vector<double> w;
};

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of Legendre
// polynomials.
Rule golub_welsch(int n) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  Rule r;
  for (int k = 0; k < n; ++k) {
    r.x.push_back(solver.eigenvalues()[k]);
    const double v0 = solver.eigenvectors()(0, k);
    r.w.push_back(2.0 * v0 * v0);
  }
  return r;
}

const Rule& rule32() {
  static const Rule r = golub_welsch(32);
  return r;
}

double gl(const std::function<double(double)>& f, double a, double b) {
  const Rule& r = rule32();
  double s = 0.0;
  for (std::size_t k = 0; k < r.x.size(); ++k) {
    s += r.w[k] * f(0.5 * (a + b) + 0.5 * (b - a) * r.x[k]);
  }
  return 0.5 * (b - a) * s;
}

double simpson_step(const std::function<double(double)>& f, double a,
                    double b, double fa, double fm, double fb, double whole,
                    double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  // Halving stops at a floor so rounding noise cannot force full depth.
  const double half = std::max(0.5 * tol, 1e-16);
  return simpson_step(f, a, m, fa, flm, fm, left, half, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, half, depth - 1);
}

// Gauss-Legendre over [a, b] split into panels of width at most one, for
// integrands in a logarithmic variable that span many decades.
double gl_log_panels(const std::function<double(double)>& f, double a,
                     double b) {
  const int panels = std::max(1, static_cast<int>(std::ceil(b - a)));
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int k = 0; k < panels; ++k) {
    total += gl(f, a + k * width, a + (k + 1) * width);
  }
  return total;
}

// int_a^b h(u) / (u (1 - u)) du for smooth h, with log substitutions that
// remove the endpoint behavior at 0 and 1. qa = 1 - a and qb = 1 - b are
// passed separately so the upper end keeps full relative precision.
double ad_segment(const std::function<double(double)>& h, double a, double b,
                  double qa, double qb) {
  double total = 0.0;
  if (a < 0.5) {
    const double hi = std::min(b, 0.5);
    // u = e^v, du / u = dv
    total += gl_log_panels([&](double v) {
      const double u = std::exp(v);
      return h(u) / (1.0 - u);
    }, std::log(a), std::log(hi));
  }
  if (b > 0.5) {
    const double q_lo = std::min(qa, 0.5);
    // 1 - u = e^v
    total += gl_log_panels([&](double v) {
      const double q = std::exp(v);
      const double u = 1.0 - q;
      return h(u) / u;
    }, std::log(qb), std::log(q_lo));
  }
  return total;
}

}  // namespace

double phi_cdf(double x) {
  const long double t = static_cast<long double>(x) /
                        std::sqrt(2.0L);
  if (std::fabs(t) <= 2.2L) return static_cast<double>(0.5L * (1.0L + erf_series(t)));
  if (t > 0) return static_cast<double>(1.0L - 0.5L * erfc_cf(t));
  return static_cast<double>(0.5L * erfc_cf(-t));
}

double quantile_bisect(double p) {
  double lo = -40.0;
  double hi = 40.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (phi_cdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double simpson(const std::function<double(double)>& f, double a, double b,
               double tol) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, 50);
}

EdfFunctionals brute_force_functionals(std::span<const double> s,
                                       std::size_t grid_points) {
  const std::size_t n = s.size();
  const double nd = static_cast<double>(n);
  auto fn_right = [&](double t) {  // F_n(t) = #{s_i <= t} / n
    return static_cast<double>(std::count_if(
               s.begin(), s.end(), [&](double v) { return v <= t; })) /
           nd;
  };
  auto fn_left = [&](double t) {  // F_n(t-) = #{s_i < t} / n
    return static_cast<double>(std::count_if(
               s.begin(), s.end(), [&](double v) { return v < t; })) /
           nd;
  };

  // Integrals in u = Phi(t): F_n is constant between consecutive u_(i).
  std::vector<double> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = phi_cdf(sorted[i]);
  // Upper tails 1 - u, evaluated directly.
  std::vector<double> cuts = {0.0};
  std::vector<double> tails = {1.0};
  for (std::size_t i = 0; i < n; ++i) {
    cuts.push_back(u[i]);
    tails.push_back(phi_cdf(-sorted[i]));
  }
  cuts.push_back(1.0);
  tails.push_back(0.0);

  EdfFunctionals out;
  double mean_delta = 0.0;
  std::vector<double> level(cuts.size() - 1);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double a = cuts[k];
    const double b = cuts[k + 1];
    if (b <= a) continue;
    const double mid = 0.5 * (a + b);
    // Count in u-space; Phi is monotone so this is F_n at Phi^-1(mid).
    const double f = static_cast<double>(std::count_if(
                         u.begin(), u.end(),
                         [&](double v) { return v <= mid; })) /
                     nd;
    level[k] = f;
    mean_delta += gl([&](double x) { return f - x; }, a, b);
    out.w2 += gl([&](double x) { return (f - x) * (f - x); }, a, b);
    auto h = [&](double x) { return (f - x) * (f - x); };
    if (k == 0) {
      out.a2 += gl([&](double x) { return x / (1.0 - x); }, a, b);
    } else if (k + 2 == cuts.size()) {
      // In q = 1 - u the integrand (1 - u) / u becomes q / (1 - q).
      out.a2 += gl([&](double q) { return q / (1.0 - q); }, 0.0, tails[k]);
    } else {
      out.a2 += ad_segment(h, a, b, tails[k], tails[k + 1]);
    }
  }
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double a = cuts[k];
    const double b = cuts[k + 1];
    if (b <= a) continue;
    const double f = level[k];
    out.u2 += gl(
        [&](double x) {
          const double d = f - x - mean_delta;
          return d * d;
        },
        a, b);
  }

  // Sups: both sides of every jump, a uniform grid, and far tails.
  std::vector<double> pts;
  const auto [lo_it, hi_it] = std::minmax_element(s.begin(), s.end());
  const double lo = *lo_it - 1.0;
  const double hi = *hi_it + 1.0;
  for (std::size_t k = 0; k < grid_points; ++k) {
    pts.push_back(lo + (hi - lo) * static_cast<double>(k) /
                           static_cast<double>(grid_points - 1));
  }
  pts.push_back(-40.0);
  pts.push_back(40.0);
  double d = 0.0;
  double g = 0.0;
  auto visit = [&](double f, double t) {
    const double delta = f - phi_cdf(t);
    d = std::max(d, std::abs(delta));
    g = std::max(g, std::abs(delta - mean_delta));
  };
  for (double t : pts) visit(fn_right(t), t);
  for (double t : s) {
    visit(fn_right(t), t);
    visit(fn_left(t), t);
  }
  out.d = d;
  out.g = g;
  return out;
}

double ks_distance(std::vector<double> data,
                   const std::function<double(double)>& cdf) {
  std::sort(data.begin(), data.end());
  const double n = static_cast<double>(data.size());
  double d = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double f = cdf(data[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f,
                  f - static_cast<double>(i) / n});
  }
  return d;
}

}  // namespace edfnorm::oracle
