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

#ifndef PRAT_FQ_HPP
#define PRAT_FQ_HPP

#include <utility>
#include <gmpxx.h>

#include "prat/common.hpp"
#include "prat/poly.hpp"

namespace prat {

// Finite field F_{q^d} presented as F_q[x]/<defining>, defining irreducible
// and verified at construction.
struct FiniteField {
  u64 q;
  int d;
  FpPoly defining;  // monic irreducible of degree d over F_q

  mpz_class cardinality() const {
    mpz_class c;
    mpz_ui_pow_ui(c.get_mpz_t(), (unsigned long)q, (unsigned long)d);
    return c;
  }
};

// True iff f mod q is irreducible over F_q. Distinct-degree criterion:
// x^{q^n} = x mod f, and gcd(x^{q^{n/l}} - x, f) trivial for every prime
// l dividing n = deg f.
bool is_irreducible_mod(const IntPoly& f, u64 q);
bool fp_is_irreducible(const FpPoly& f, u64 q);

// Construct F_{q^d} with d = mult_order(q mod m, m), together with an element
// of exact multiplicative order m (a primitive m-th root of unity). Randomized
// field construction and generator search are driven by the seed; the default
// keeps all runs reproducible.
std::pair<FiniteField, FpPoly> finite_field_with_root_of_unity(u64 q, u64 m,
                                                               u64 seed = 0x5eed);

// Arithmetic in a FiniteField (elements are FpPoly of degree < d).
FpPoly fq_mul(const FiniteField& F, const FpPoly& a, const FpPoly& b);
FpPoly fq_pow(const FiniteField& F, FpPoly a, const mpz_class& e);
FpPoly fq_inv(const FiniteField& F, const FpPoly& a);

// Discrete logarithm of h base g in F_{q^d}*, where g has known order n
// (baby-step giant-step in the cyclic subgroup <g>). Throws NoRepresentation
// if h is outside <g>.
u64 fq_dlog(const FiniteField& F, const FpPoly& g, u64 n, const FpPoly& h);

}  // namespace prat

#endif  // PRAT_FQ_HPP
