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

// Parametric alternatives g(x; theta) to the normal null. theta = 0 is the
// null member N(mu0, sigma0^2). Each family supplies closed-form theta
// derivatives at 0 of its density and distribution function, which feed the
// local slope formulas, and an exact sampler.
//
// New families are added by deriving from AlternativeFamily.

#ifndef EDFNORM_ALTERNATIVES_H_
#define EDFNORM_ALTERNATIVES_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "edfnorm/numerics.h"
#include "edfnorm/random.h"

namespace edfnorm {

class AlternativeFamily {
 public:
  virtual ~AlternativeFamily() = default;

  // Identifier accepted by parse_family, e.g. "lehmann" or "contam:1:1".
  virtual std::string name() const = 0;
  // Human-readable row label.
  virtual std::string label() const = 0;

  virtual double density(double x, double theta) const = 0;
  virtual double cdf(double x, double theta) const = 0;
  // d/dtheta g(x; theta) at theta = 0.
  virtual double density_theta_deriv_at_0(double x) const = 0;
  // d/dtheta G(x; theta) at theta = 0.
  virtual double cdf_theta_deriv_at_0(double x) const = 0;

  virtual double null_mu() const { return 0.0; }
  virtual double null_sigma2() const { return 1.0; }

  // Throws DomainError if g(.; theta) is not a density.
  virtual void check_theta(double theta) const = 0;
  // One exact draw from g(.; theta); theta already checked.
  virtual double draw(double theta, RandomStream& rng) const = 0;
};

using FamilyPtr = std::shared_ptr<const AlternativeFamily>;

// g1(x; theta) = (1 + theta) Phi(x)^theta phi(x), theta > -1.
FamilyPtr lehmann_family();
// g2(x; theta) = phi(x) exp(-theta (1 - Phi(x))) (1 + theta Phi(x)),
// theta >= 0.
FamilyPtr ley_paindaveine_1_family();
// g3(x; theta) = phi(x) (1 - theta pi cos(pi Phi(x))), |theta| <= 1/pi.
FamilyPtr ley_paindaveine_2_family();
// g4(x; theta) = (1 - theta) phi(x) + theta/sigma phi((x - mu)/sigma),
// theta in [0, 1]. Throws DomainError unless sigma2 > 0.
FamilyPtr contamination_family(double mu, double sigma2);

// Accepts "lehmann", "lp1" | "ley_paindaveine_1", "lp2" |
// "ley_paindaveine_2", and "contam:<mu>:<sigma2>" |
// "contamination:<mu>:<sigma2>".
FamilyPtr parse_family(std::string_view name);

// The six rows of the reference efficiency table, in table order.
std::vector<FamilyPtr> reference_families();

struct LocalDerivatives {
  double mu_prime = 0.0;      // int x g'(x; 0) dx
  double sigma2_prime = 0.0;  // int (x - mu0)^2 g'(x; 0) dx
  double sigma_prime = 0.0;   // sigma2_prime / (2 sigma0)
};

LocalDerivatives local_derivatives(const AlternativeFamily& family,
                                   const QuadratureRule& rule = default_rule());

// First-order drift of the fitted-parameter empirical process:
//   g*(x) = G'(x; 0) + g(x; 0) (mu'(0) + x sigma'(0)).
RealFunction g_star(const FamilyPtr& family, const LocalDerivatives& local);
RealFunction g_star(const FamilyPtr& family);

// Coefficient k with 2K(theta) = k theta^2 + o(theta^2), K the
// Kullback-Leibler distance from g(.; theta) to the normal family:
//   k = int g'^2 / g0 - (int x g')^2 / sigma0^2
//       - (int (x - mu0)^2 g')^2 / (2 sigma0^4).
// Throws EvaluationError naming x where g(x; 0) vanishes.
double lrt_slope_coefficient(const AlternativeFamily& family,
                             const QuadratureRule& rule = default_rule());

// n draws from g(.; theta) using one RandomStream seeded by `seed`.
std::vector<double> sample(const AlternativeFamily& family, double theta,
                           std::size_t n, std::uint64_t seed);

}  // namespace edfnorm

#endif  // EDFNORM_ALTERNATIVES_H_
