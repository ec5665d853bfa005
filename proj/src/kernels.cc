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

#include "edfnorm/kernels.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "edfnorm/errors.h"

namespace edfnorm {
namespace {

constexpr double kInvSqrtPi = 0.5641895835477562869480795;  // 1/sqrt(pi)
constexpr double kXiConstant = 1.0 / 12.0 - 0.25 * std::numbers::inv_pi;

double estimation_correction(double x, double y) {
  const double pp = norm_pdf(x) * norm_pdf(y);
  return pp + 0.5 * x * y * pp;
}

// Phi(x)(1 - Phi(x)) with both factors from non-cancelling tails.
double bernoulli_variance(double x) { return norm_cdf(x) * norm_sf(x); }

}  // namespace

std::string_view to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::kBrownianBridge:
      return "K0";
    case KernelKind::kEta:
      return "K_eta";
    case KernelKind::kXi:
      return "K_xi";
    case KernelKind::kXiSignFlipped:
      return "K_xi_sign_flipped";
  }
  return "?";
}

double k0(double x, double y) {
  // Phi(min) - Phi(x)Phi(y) == Phi(min) (1 - Phi(max)).
  return norm_cdf(std::min(x, y)) * norm_sf(std::max(x, y));
}

double k_eta(double x, double y) {
  return k0(x, y) - estimation_correction(x, y);
}

double k_xi(double x, double y) {
  auto a = [](double t) {
    return 0.5 * bernoulli_variance(t) - 0.5 * kInvSqrtPi * norm_pdf(t);
  };
  return k_eta(x, y) - a(x) - a(y) + kXiConstant;
}

double k_xi_sign_flipped(double x, double y) {
  return k0(x, y) + 0.5 * bernoulli_variance(x) + 0.5 * bernoulli_variance(y) +
         0.5 * kInvSqrtPi * (norm_pdf(x) + norm_pdf(y)) -
         estimation_correction(x, y) + kXiConstant;
}

double KernelSpec::operator()(double x, double y) const {
  double v = 0.0;
  switch (kind) {
    case KernelKind::kBrownianBridge:
      v = k0(x, y);
      break;
    case KernelKind::kEta:
      v = k_eta(x, y);
      break;
    case KernelKind::kXi:
      v = k_xi(x, y);
      break;
    case KernelKind::kXiSignFlipped:
      v = k_xi_sign_flipped(x, y);
      break;
  }
  if (weighting == Weighting::kAndersonDarling) {
    v /= std::sqrt(bernoulli_variance(x) * bernoulli_variance(y));
  }
  return v;
}

Extremum diagonal_sup(const KernelSpec& kernel) {
  if (kernel.weighting != Weighting::kNone) {
    throw DomainError("diagonal_sup: weighted kernels are not supported");
  }
  return maximize_abs([&](double x) { return kernel(x, x); }, kDomainLo,
                      kDomainHi);
}

}  // namespace edfnorm
