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

#include "edfnorm/numerics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "edfnorm/errors.h"

namespace edfnorm {

double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double norm_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double norm_sf(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

namespace {

// Acklam's rational approximation; relative error about 1.15e-9.
double quantile_initial(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
            c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r +
            a[5]) *
           q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r +
            1.0);
  }
  const double q = std::sqrt(-2.0 * std::log1p(-p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
           c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double norm_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    std::ostringstream msg;
    msg << "norm_quantile: p must lie in (0, 1), got " << p;
    throw DomainError(msg.str());
  }
  if (p == 0.5) return 0.0;
  // Work in the lower tail so the residual is computed against a
  // non-cancelling Phi.
  const bool upper = p > 0.5;
  const double tail = upper ? 1.0 - p : p;
  double x = quantile_initial(tail);
  for (int step = 0; step < 3; ++step) {
    const double e = norm_cdf(x) - tail;
    const double u = e / norm_pdf(x);
    const double next = x - u / (1.0 + 0.5 * x * u);  // Halley
    if (next == x) break;
    x = next;
  }
  return upper ? -x : x;
}

QuadratureRule gauss_legendre(std::size_t n, double lo, double hi) {
  if (n == 0 || !(lo < hi)) {
    throw DomainError("gauss_legendre: need n >= 1 and lo < hi");
  }
  QuadratureRule rule;
  rule.lo = lo;
  rule.hi = hi;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  const std::size_t pairs = (n + 1) / 2;
  for (std::size_t i = 0; i < pairs; ++i) {
    // i-th root of P_n counted from the right end.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Re-evaluate the derivative at the converged root for the weight.
    {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const std::size_t left = i;
    const std::size_t right = n - 1 - i;
    rule.nodes[left] = mid - half * x;
    rule.nodes[right] = mid + half * x;
    rule.weights[left] = half * w;
    rule.weights[right] = half * w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = mid;
  return rule;
}

QuadratureRule composite_gauss_legendre(double lo, double hi,
                                        std::size_t panels,
                                        std::size_t nodes_per_panel) {
  if (panels == 0) throw DomainError("composite_gauss_legendre: panels == 0");
  QuadratureRule rule;
  rule.lo = lo;
  rule.hi = hi;
  rule.nodes.reserve(panels * nodes_per_panel);
  rule.weights.reserve(panels * nodes_per_panel);
  const double width = (hi - lo) / static_cast<double>(panels);
  const QuadratureRule unit = gauss_legendre(nodes_per_panel, 0.0, 1.0);
  for (std::size_t p = 0; p < panels; ++p) {
    const double a = lo + width * static_cast<double>(p);
    for (std::size_t k = 0; k < unit.size(); ++k) {
      rule.nodes.push_back(a + width * unit.nodes[k]);
      rule.weights.push_back(width * unit.weights[k]);
    }
  }
  return rule;
}

const QuadratureRule& default_rule() {
  static const QuadratureRule rule =
      composite_gauss_legendre(kDomainLo, kDomainHi, 40, 256);
  return rule;
}

double integrate_gauss(const RealFunction& f, const QuadratureRule& rule) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double v = f(rule.nodes[i]);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "integrate_gauss: integrand is not finite at node x = "
          << rule.nodes[i];
      throw EvaluationError(msg.str(), rule.nodes[i]);
    }
    sum += rule.weights[i] * v;
  }
  return sum;
}

double integrate_gauss(const RealFunction& f) {
  return integrate_gauss(f, default_rule());
}

Extremum maximize_abs(const RealFunction& f, double lo, double hi,
                      std::size_t grid) {
  if (!(lo < hi) || grid < 2) {
    throw DomainError("maximize_abs: need lo < hi and grid >= 2");
  }
  const double step = (hi - lo) / static_cast<double>(grid - 1);
  auto abscissa = [&](std::size_t i) {
    return i + 1 == grid ? hi : lo + step * static_cast<double>(i);
  };

  std::vector<double> scan(grid);
  double top = -1.0;
  for (std::size_t i = 0; i < grid; ++i) {
    scan[i] = std::abs(f(abscissa(i)));
    top = std::max(top, scan[i]);
  }
  // Values equal up to rounding count as ties; the leftmost wins.
  const double tie = top * (1.0 - 1e-12);
  std::size_t best = 0;
  while (scan[best] < tie) ++best;

  Extremum result{abscissa(best), scan[best]};

  double a = abscissa(best == 0 ? 0 : best - 1);
  double b = abscissa(std::min(best + 1, grid - 1));
  constexpr double kInvPhi = 0.6180339887498948482;
  auto g = [&](double x) { return std::abs(f(x)); };
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = g(c);
  double fd = g(d);
  while (b - a > 1e-10) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = g(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = g(d);
    }
  }
  const double x = 0.5 * (a + b);
  const double fx = g(x);
  if (fx > result.value) result = {x, fx};
  return result;
}

}  // namespace edfnorm
