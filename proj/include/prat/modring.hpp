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

#ifndef PRAT_MODRING_HPP
#define PRAT_MODRING_HPP

#include <memory>
#include <vector>
#include <gmpxx.h>

#include "prat/common.hpp"
#include "prat/poly.hpp"

namespace prat {

// The residue ring (Z/N)[x] / <f> with f monic. N may be composite (p^2 is
// the common case); inverses are therefore partial. N must stay below 2^63
// so coefficient products fit the u128 reduction.
struct PolyRing {
  u64 N;
  FpPoly f;  // monic, coefficients reduced mod N

  PolyRing(u64 modulus, FpPoly poly) : N(modulus), f(std::move(poly)) {
    for (auto& c : f) c %= N;
    if (f.empty() || f.back() != 1)
      throw std::invalid_argument("PolyRing: modulus polynomial must be monic");
  }
  int degree() const { return fp_deg(f); }
};

// Element of a PolyRing: value polynomial of degree < deg f, coefficients in
// [0, N).
struct RingElem {
  FpPoly v;
};

inline RingElem ring_make(const PolyRing& R, FpPoly v) {
  for (auto& c : v) c %= R.N;
  fp_trim(v);
  if (fp_deg(v) >= R.degree()) v = fp_rem(std::move(v), R.f, R.N);
  return RingElem{std::move(v)};
}

inline RingElem ring_add(const PolyRing& R, const RingElem& a, const RingElem& b) {
  FpPoly r(std::max(a.v.size(), b.v.size()), 0);
  for (size_t i = 0; i < a.v.size(); ++i) r[i] = a.v[i];
  for (size_t i = 0; i < b.v.size(); ++i) r[i] = (r[i] + b.v[i]) % R.N;
  fp_trim(r);
  return RingElem{std::move(r)};
}

inline RingElem ring_sub(const PolyRing& R, const RingElem& a, const RingElem& b) {
  FpPoly r(std::max(a.v.size(), b.v.size()), 0);
  for (size_t i = 0; i < a.v.size(); ++i) r[i] = a.v[i];
  for (size_t i = 0; i < b.v.size(); ++i) r[i] = (r[i] + R.N - b.v[i]) % R.N;
  fp_trim(r);
  return RingElem{std::move(r)};
}

inline RingElem ring_mul(const PolyRing& R, const RingElem& a, const RingElem& b) {
  return RingElem{fp_rem(fp_mul(a.v, b.v, R.N), R.f, R.N)};
}

// base^exp by square-and-multiply; exp may be huge (p^e - 1 style).
inline RingElem polmod_pow(const PolyRing& R, const RingElem& base, const mpz_class& exp) {
  if (exp < 0) throw std::invalid_argument("polmod_pow: negative exponent");
  RingElem r{{1 % R.N}};
  fp_trim(r.v);
  for (mp_bitcnt_t i = mpz_sizeinbase(exp.get_mpz_t(), 2); i-- > 0;) {
    r = ring_mul(R, r, r);
    if (mpz_tstbit(exp.get_mpz_t(), i)) r = ring_mul(R, r, base);
  }
  return r;
}

inline bool ring_is_one(const RingElem& a) { return a.v.size() == 1 && a.v[0] == 1; }
inline bool ring_eq(const RingElem& a, const RingElem& b) { return a.v == b.v; }

}  // namespace prat

#endif  // PRAT_MODRING_HPP
