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

#ifndef EDFNORM_TEST_KIND_H_
#define EDFNORM_TEST_KIND_H_

#include <array>
#include <string_view>

namespace edfnorm {

// The five EDF normality statistics, in reference-table column order.
enum class EdfTest {
  kD,   // Kolmogorov-Smirnov (Lilliefors) sup statistic
  kW2,  // Cramer-von Mises omega^2
  kA2,  // Anderson-Darling
  kG,   // Watson-Darling centered sup statistic
  kU2,  // Watson U^2
};

inline constexpr std::array<EdfTest, 5> kAllTests = {
    EdfTest::kD, EdfTest::kW2, EdfTest::kA2, EdfTest::kG, EdfTest::kU2};

// "D", "W2", "A2", "G", "U2".
std::string_view to_string(EdfTest test);

// Inverse of to_string; throws DomainError.
EdfTest parse_test(std::string_view name);

// True for D and G.
constexpr bool is_sup_test(EdfTest test) {
  return test == EdfTest::kD || test == EdfTest::kG;
}

}  // namespace edfnorm

#endif  // EDFNORM_TEST_KIND_H_
