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

#ifndef PRAT_QUADRATIC_HPP
#define PRAT_QUADRATIC_HPP

#include <cstdint>
#include <vector>

#include "prat/common.hpp"
#include "prat/verdict.hpp"

namespace prat {

// A quadratic field Q(sqrt(d)) for a squarefree integer d != 0, 1.  The ring
// of integers is Z[w] with w = (1+sqrt(d))/2 when d = 1 mod 4 and w = sqrt(d)
// otherwise.
struct QuadraticField {
  i64 d;  // squarefree radicand

  explicit QuadraticField(i64 radicand);

  bool is_real() const { return d > 0; }
  // Field discriminant: d if d = 1 mod 4, else 4d.
  i64 discriminant() const;
};

// Residue of the fundamental unit eps > 1 of a real quadratic field modulo
// p^2, written as u + v*sqrt(d) with 0 <= u, v < p^2.  When d = 1 mod 4 the
// unit may be half-integral in the {1, sqrt(d)} basis; the residues stored
// here are the exact images of those halves mod p^2 (2 is invertible since
// p is odd), and `half` records that the lift is (a + b*sqrt(d))/2 with
// a = 2u, b = 2v mod p^2.  The invariant u^2 - d*v^2 = norm_sign mod p^2
// holds in all cases.
struct UnitResidue {
  u64 p = 0;          // odd prime, must not divide the discriminant
  u64 u = 0, v = 0;   // eps = u + v*sqrt(d) mod p^2
  int norm_sign = 0;  // exact norm of eps: +1 or -1
  bool half = false;  // true iff d = 1 mod 4 (residues came from halves)
  double log_eps = 0.0;      // float log of eps (regulator of the field)
  u64 period_length = 0;     // length of the continued-fraction cycle
};

// Continued-fraction walk over the cycle of sqrt(d) (or (1+sqrt(d))/2 when
// d = 1 mod 4), accumulating convergents mod p^2.  Exact integer state; no
// unit coefficients are ever materialized.  Throws RamifiedPrime if p
// divides the discriminant, BadPrime if p = 2 or d < 2.
UnitResidue fundamental_unit_mod(const QuadraticField& K, u64 p);

// Exact class number of an imaginary quadratic field by counting reduced
// primitive forms (a, b, c) of discriminant D < 0 with |b| <= a <= c and
// the usual boundary identifications.  Intended for desk-scale |D|; the
// faster engines below take over for large inputs.
u64 class_number_imaginary(const QuadraticField& K);

// Exact class number of a real quadratic field: number of cycles of reduced
// primitive indefinite forms (the narrow count), halved when the fundamental
// unit has norm +1.
u64 class_number_real(const QuadraticField& K);

// Whether the fundamental unit eps satisfies eps^E = 1 mod p^2 with
// E = p^e - 1, where e is the residue degree of p (1 split, 2 inert).
// Throws RamifiedPrime if p divides the discriminant.
bool has_p_primary_unit(const QuadraticField& K, u64 p);

// Three-valued p-rationality test from cheap certificates only:
//   imaginary: Yes when p does not divide h and p >= 5 (or p = 3 unramified);
//   real:      Yes when p divides neither h nor D and the fundamental unit
//              is not p-primary; No when p does not divide h*D but the unit
//              is p-primary;
//   Unknown:   p divides h, or p ramifies.
Tri is_p_rational_quadratic(const QuadraticField& K, u64 p);

// ---------------------------------------------------------------------------
// Internal engines (exposed for the compositum machinery and for tests).
// ---------------------------------------------------------------------------

// Primitive reduced form of an imaginary quadratic discriminant.
struct Form {
  i64 a = 1, b = 0, c = 0;
  bool operator==(const Form& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const Form& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
};

Form form_identity(i64 D);
Form form_reduce(i64 D, Form f);
Form form_compose(i64 D, const Form& f, const Form& g);
Form form_pow(i64 D, Form f, const mpz_class& e);
// Reduced form of norm q above a split or ramified prime q (kronecker(D,q)
// must be >= 0); throws NoRepresentation otherwise.
Form prime_form(i64 D, u64 q);
// Exact multiplicative order of f in the class group, given a multiple m of
// that order (e.g. the class number).
mpz_class form_order(i64 D, const Form& f, const mpz_class& m);

// Class number of an imaginary quadratic discriminant D < 0 via a smoothed
// character sum; exact for |D| up to ~2e10 (rounds a sum with provably
// sub-1/2 tail error at the default cutoff).
u64 class_number_imag_theta(i64 D);

// Class number of an imaginary quadratic discriminant via an Euler-product
// bracket plus baby-step giant-step on random split-prime forms, with a
// genus-theory parity filter.  Handles |D| up to ~1e18.
u64 class_number_imag_bsgs(i64 D);

// Dispatcher: counting for tiny |D|, theta for mid-range, BSGS beyond.
u64 class_number_imag_auto(i64 D);

// Class number of a real quadratic field from the smoothed character-sum
// value of the L-function at 1 divided by 2*log(eps); exact for desk-scale
// discriminants (rounds a value with sub-1/2 error).
u64 class_number_real_analytic(const QuadraticField& K);

}  // namespace prat

#endif  // PRAT_QUADRATIC_HPP
