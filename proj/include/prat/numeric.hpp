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

#ifndef PRAT_NUMERIC_HPP
#define PRAT_NUMERIC_HPP

namespace prat {

// Exponential integral E_1(x) for x > 0, about 1e-14 relative accuracy.
// Power series below 1.5, modified Lentz continued fraction above.
double expint_e1(double x);

// Compensated (Kahan) accumulator for long alternating sums.
struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double value() const { return s; }
};

}  // namespace prat

#endif  // PRAT_NUMERIC_HPP
