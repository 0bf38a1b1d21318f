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

#ifndef PRAT_CUBIC_HPP
#define PRAT_CUBIC_HPP

#include <array>
#include <utility>
#include <vector>

#include "prat/common.hpp"
#include "prat/lll.hpp"
#include "prat/poly.hpp"

namespace prat {

// A cyclic cubic field of conductor m, presented by the canonical trace-form
// polynomial attached to a solution (a, b) of a^2 + 27 b^2 = 4m with
// a = 1 mod 3 when 3 does not divide a.  Field discriminant is m^2.
struct CyclicCubicField {
  u64 m = 0;       // conductor
  i64 a = 0;       // Cornacchia representative
  u64 b = 0;
  IntPoly f;       // monic cubic defining polynomial
  mpz_class discriminant() const { return mpz_class((unsigned long)m) * (unsigned long)m; }
};

// Element c0 + c1*alpha + c2*alpha^2 with rational coordinates, alpha the
// distinguished root of the home field's defining polynomial.  The home field
// is passed to the arithmetic helpers explicitly.
struct AlgebraicNumber {
  std::array<mpq_class, 3> c{};
};

// A generator sigma of Gal(K/Q), stored as the image sigma(alpha).
struct Automorphism {
  AlgebraicNumber image;
};

// An ideal of Z[alpha] as a canonical 3x3 row HNF over the basis
// (1, alpha, alpha^2); the norm equals the determinant.
struct CubicIdeal {
  IntMat hnf;
  mpz_class norm;
};

// True iff m is a product of distinct primes = 1 mod 3, possibly times 9.
bool is_cubic_conductor(u64 m);

// All cyclic cubic fields of conductor m (one per a^2 + 27 b^2 = 4m class),
// ordered by the representative a.  Throws InvalidConductor when m does not
// have the admissible shape, NoRepresentation if no (a, b) exists.
std::vector<CyclicCubicField> fields_from_conductor(u64 m);

// Minimal polynomials (g_a, mu_a, nu_a) of the three distinguished units of
// the one-parameter family m = (a^2 + 27)/4, for odd a.
struct FamilyMinpolys {
  IntPoly g, mu, nu;
  u64 m = 0;
};
FamilyMinpolys explicit_unit_minpolys(i64 a);

// Exact embeddings (omega, eta') of the roots of g_a and nu_a into the family
// field (b = 1 required; otherwise NotInFamily).  Coordinates are computed by
// split-prime lifting plus rational reconstruction and verified exactly; the
// canonical representative is the lexicographically least coordinate vector.
std::pair<AlgebraicNumber, AlgebraicNumber> embed_explicit_elements(const CyclicCubicField& K);

// A nontrivial automorphism: lifts a compatible labeling of the three roots
// modulo a split prime power, reconstructs rational coordinates, verifies
// f(sigma(alpha)) = 0 mod f exactly, and checks sigma has order three.
// Canonical choice: lexicographically least of the two generators.
Automorphism automorphism(const CyclicCubicField& K);

// The unique prime ideal above a ramified prime ell | m: f = (x - r)^3
// mod ell and the ideal is <ell, alpha - r> with norm ell; its HNF cube is
// checked to equal ell * (identity).  Throws IndexDivisor when ell divides
// the index [O_K : Z[alpha]] (Dedekind criterion).
CubicIdeal factor_ramified_prime(const CyclicCubicField& K, u64 ell);

// Ideal product as Z-modules (valid for ideals of Z[alpha]).
CubicIdeal ideal_mul(const CyclicCubicField& K, const CubicIdeal& A, const CubicIdeal& B);

// Unit search: for each ramified ell, LLL-reduce the ideal lattice of
// <ell, alpha - r> under a scaled real-embedding Gram form, scan small
// coordinate combinations of the reduced basis for a generator omega with
// |N(omega)| = ell, and return eta = sigma(omega)/omega.  Throws
// NoGeneratorFound when every ell fails.
AlgebraicNumber fast_unit(const CyclicCubicField& K);
// Same search, returning one unit per ramified prime that succeeds.
std::vector<AlgebraicNumber> fast_unit_all(const CyclicCubicField& K);

// ---------------------------------------------------------------------------
// Element arithmetic in Q[x]/(f) (the home field is the context argument).
// ---------------------------------------------------------------------------

AlgebraicNumber an_from_int(i64 c0, i64 c1, i64 c2);
bool an_eq(const AlgebraicNumber& x, const AlgebraicNumber& y);
AlgebraicNumber an_add(const AlgebraicNumber& x, const AlgebraicNumber& y);
AlgebraicNumber an_mul(const CyclicCubicField& K, const AlgebraicNumber& x, const AlgebraicNumber& y);
AlgebraicNumber an_inv(const CyclicCubicField& K, const AlgebraicNumber& x);
// Image of x under coordinate substitution alpha -> s (used for sigma(x)).
AlgebraicNumber an_apply(const CyclicCubicField& K, const AlgebraicNumber& s, const AlgebraicNumber& x);
// Exact field norm N(x) as a rational.
mpq_class an_norm(const CyclicCubicField& K, const AlgebraicNumber& x);
// Exact minimal (characteristic) polynomial of x: monic cubic over Q.
std::vector<mpq_class> an_char_poly(const CyclicCubicField& K, const AlgebraicNumber& x);
// Residues (c0, c1, c2) mod `mod`; throws NotCoprime when a denominator
// shares a factor with `mod`.
std::array<u64, 3> an_mod(const AlgebraicNumber& x, u64 mod);

}  // namespace prat

#endif  // PRAT_CUBIC_HPP
