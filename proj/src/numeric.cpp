// Copyright 2026 the prat authors
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

#include "prat/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace prat {

double expint_e1(double x) {
  if (!(x > 0)) throw std::domain_error("expint_e1: x must be positive");
  if (x < 1.5) {
    // E_1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k * k!)
    const double euler_gamma = 0.57721566490153286060651209;
    double sum = 0.0, term = 1.0;
    for (int k = 1; k <= 64; ++k) {
      term *= -x / k;
      double add = -term / k;
      sum += add;
      if (std::fabs(add) < 1e-18 * (std::fabs(sum) + 1e-300)) break;
    }
    return -euler_gamma - std::log(x) + sum;
  }
  // Continued fraction e^{-x} / (x + 1 - 1/(x+3 - 4/(x+5 - ...))) evaluated
  // with the modified Lentz algorithm: b0 = x + 1, a_k = -k^2, b_k = x + 2k + 1.
  const double tiny = 1e-300;
  double f = x + 1.0;
  if (f == 0.0) f = tiny;
  double C = f, D = 0.0;
  for (int k = 1; k <= 200; ++k) {
    double a = -(double)k * k;
    double b = x + 2.0 * k + 1.0;
    D = b + a * D;
    if (D == 0.0) D = tiny;
    C = b + a / C;
    if (C == 0.0) C = tiny;
    D = 1.0 / D;
    double delta = C * D;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x) / f;
}

}  // namespace prat
