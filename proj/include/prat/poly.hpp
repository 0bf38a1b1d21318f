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

#ifndef PRAT_POLY_HPP
#define PRAT_POLY_HPP

#include <vector>
#include <gmpxx.h>

#include "prat/common.hpp"

namespace prat {

// Dense integer polynomial, little-endian coefficients (coeff[i] multiplies x^i).
// The zero polynomial is the empty vector; all routines keep the leading
// coefficient nonzero.
using IntPoly = std::vector<mpz_class>;

IntPoly poly_from(std::initializer_list<long> coeffs);
int poly_deg(const IntPoly& f);            // -1 for the zero polynomial
void poly_trim(IntPoly& f);
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_scale(const IntPoly& a, const mpz_class& c);
mpz_class poly_eval(const IntPoly& f, const mpz_class& x);
IntPoly poly_derivative(const IntPoly& f);
mpz_class poly_content(const IntPoly& f);

// Exact division; throws std::domain_error when b does not divide a over Z.
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);

// Resultant Res(a, b) by the subresultant PRS (exact over Z).
mpz_class poly_resultant(const IntPoly& a, const IntPoly& b);

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f).
mpz_class poly_discriminant(const IntPoly& f);

// n-th cyclotomic polynomial.
IntPoly cyclotomic_poly(u64 n);

// ---------------------------------------------------------------------------
// Polynomials over F_p (p < 2^31 so products fit comfortably in u128 paths).
// Coefficients reduced to [0, p) in little-endian order.
using FpPoly = std::vector<u64>;

FpPoly fp_reduce(const IntPoly& f, u64 p);
void fp_trim(FpPoly& f);
int fp_deg(const FpPoly& f);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p);
FpPoly fp_rem(FpPoly a, const FpPoly& b, u64 p);
FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p);
FpPoly fp_powmod_x(u64 e_base, const mpz_class& e, const FpPoly& modf, u64 p);
FpPoly fp_powmod(FpPoly base, const mpz_class& e, const FpPoly& modf, u64 p);

// Degrees of the irreducible factors of f mod p (with multiplicity removed:
// requires f squarefree mod p; callers check gcd(f, f') first).
std::vector<int> fp_factor_degrees(const FpPoly& f, u64 p);

// Roots of f in F_p (f arbitrary, small degree).
std::vector<u64> fp_roots(const FpPoly& f, u64 p);

bool fp_is_squarefree(const FpPoly& f, u64 p);

// Rank of a matrix over F_p by Gaussian elimination; rows in [0, p).
int rank_mod_p(const std::vector<std::vector<u64>>& rows, u64 p);

// ---------------------------------------------------------------------------
// Row-echelon rank accumulator over F_p. Rows can be fed one at a time; the
// reducer keeps a reduced basis so the rank query is O(1).
class FpRowReducer {
 public:
  explicit FpRowReducer(u64 p, int width) : p_(p), width_(width) {}
  // Returns true when the row increased the rank.
  bool add_row(std::vector<u64> row);
  int rank() const { return (int)rows_.size(); }
  int width() const { return width_; }

 private:
  u64 p_;
  int width_;
  std::vector<std::vector<u64>> rows_;  // reduced, each with distinct pivot
  std::vector<int> pivots_;
};

}  // namespace prat

#endif  // PRAT_POLY_HPP
