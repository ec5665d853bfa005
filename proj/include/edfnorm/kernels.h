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

// Covariance kernels of the limiting empirical processes of the normality
// tests. All kernels are written in the standardized scale x = (t - mu)/sigma.

#ifndef EDFNORM_KERNELS_H_
#define EDFNORM_KERNELS_H_

#include <string_view>

#include "edfnorm/numerics.h"

namespace edfnorm {

enum class KernelKind {
  // Brownian bridge in Phi-time: the simple-hypothesis kernel.
  kBrownianBridge,
  // Fitted-parameter process F_n(mu_hat + sigma_hat x) - Phi(x).
  kEta,
  // kEta centered by its Phi-mean.
  kXi,
  // The closed form for kXi as printed in the source derivation, with
  // +1/2 Phi(1-Phi) terms. Kept only for comparison; it is not the
  // covariance of the centered process.
  kXiSignFlipped,
};

enum class Weighting { kNone, kAndersonDarling };

std::string_view to_string(KernelKind kind);

// Phi(min(x,y)) - Phi(x)Phi(y).
double k0(double x, double y);

// k0 - phi(x)phi(y) - xy phi(x)phi(y)/2.
double k_eta(double x, double y);

// Covariance of eta(x) - int eta dPhi:
//   k_eta - a(x) - a(y) + 1/12 - 1/(4 pi),
//   a(x) = Phi(x)(1-Phi(x))/2 - phi(x)/(2 sqrt(pi)).
double k_xi(double x, double y);

// K_xi with the opposite sign on the Phi(1-Phi) terms. It is not centered
// and not positive semidefinite; kept for comparison only.
double k_xi_sign_flipped(double x, double y);

struct KernelSpec {
  KernelKind kind = KernelKind::kEta;
  Weighting weighting = Weighting::kNone;

  // Kernel value, divided by sqrt(Phi(1-Phi)(x) Phi(1-Phi)(y)) under
  // Anderson-Darling weighting.
  double operator()(double x, double y) const;
};

// Supremum of x -> K(x,x) over [-10, 10]. Requires Weighting::kNone.
Extremum diagonal_sup(const KernelSpec& kernel);

}  // namespace edfnorm

#endif  // EDFNORM_KERNELS_H_
