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

#include "prat/fq.hpp"

#include <map>
#include <random>

#include "prat/errors.hpp"

namespace prat {

bool fp_is_irreducible(const FpPoly& f0, u64 q) {
  FpPoly f = f0;
  fp_trim(f);
  int n = fp_deg(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  if (f.back() != 1) {
    u64 inv = invmod(f.back(), q);
    for (auto& c : f) c = mulmod(c, inv, q);
  }
  // x^{q^n} must equal x mod f ...
  mpz_class qn;
  mpz_ui_pow_ui(qn.get_mpz_t(), (unsigned long)q, (unsigned long)n);
  FpPoly t = fp_powmod({0, 1}, qn, f, q);
  FpPoly x = {0, 1};
  if (fp_rem(std::move(t), f, q) != fp_rem(FpPoly{0, 1}, f, q)) return false;
  // ... and gcd(x^{q^{n/l}} - x, f) must be trivial for each prime l | n.
  std::vector<u64> ls = factorize((u64)n);
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  for (u64 l : ls) {
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), (unsigned long)q, (unsigned long)(n / (int)l));
    FpPoly s = fp_powmod({0, 1}, e, f, q);
    if (s.size() < 2) s.resize(2, 0);
    s[1] = (s[1] + q - 1) % q;
    fp_trim(s);
    if (fp_deg(fp_gcd(f, s, q)) > 0) return false;
  }
  return true;
}

bool is_irreducible_mod(const IntPoly& f, u64 q) {
  return fp_is_irreducible(fp_reduce(f, q), q);
}

FpPoly fq_mul(const FiniteField& F, const FpPoly& a, const FpPoly& b) {
  return fp_rem(fp_mul(a, b, F.q), F.defining, F.q);
}

FpPoly fq_pow(const FiniteField& F, FpPoly a, const mpz_class& e) {
  return fp_powmod(std::move(a), e, F.defining, F.q);
}

FpPoly fq_inv(const FiniteField& F, const FpPoly& a) {
  // a^{q^d - 2}; fine at our sizes and avoids a poly-xgcd routine.
  mpz_class e = F.cardinality() - 2;
  FpPoly r = fq_pow(F, a, e);
  if (fq_mul(F, r, a) != FpPoly{1})
    throw std::domain_error("fq_inv: element not invertible");
  return r;
}

std::pair<FiniteField, FpPoly> finite_field_with_root_of_unity(u64 q, u64 m, u64 seed) {
  if (std::gcd(q, m) != 1) throw NotCoprime("finite_field_with_root_of_unity");
  u64 d = m == 1 ? 1 : mult_order(q % m, m);
  std::mt19937_64 rng(seed ^ (q * 0x9e3779b97f4a7c15ull) ^ m);

  FiniteField F;
  F.q = q;
  F.d = (int)d;
  if (d == 1) {
    F.defining = {0, 1};  // F_q as F_q[x]/<x>
  } else {
    // Random monic polynomials of degree d until irreducible; expected ~d
    // tries, capped at 100 d before failing loudly.
    bool found = false;
    for (u64 attempt = 0; attempt < 100 * d; ++attempt) {
      FpPoly cand(d + 1);
      for (u64 i = 0; i < d; ++i) cand[i] = rng() % q;
      cand[d] = 1;
      if (fp_is_irreducible(cand, q)) {
        F.defining = cand;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("finite_field_with_root_of_unity: no irreducible found");
  }

  if (m == 1) return {F, FpPoly{1}};
  mpz_class order = F.cardinality() - 1;
  mpz_class quot = order / (long)m;
  // zeta = g^{(q^d-1)/m} for random g, retried until the order is exactly m.
  std::vector<u64> mls = factorize(m);
  mls.erase(std::unique(mls.begin(), mls.end()), mls.end());
  for (int attempt = 0; attempt < 400; ++attempt) {
    FpPoly g(F.d);
    for (int i = 0; i < F.d; ++i) g[i] = rng() % q;
    fp_trim(g);
    if (g.empty()) continue;
    FpPoly zeta = fq_pow(F, g, quot);
    if (zeta == FpPoly{1}) continue;
    bool exact = true;
    for (u64 l : mls) {
      if (fq_pow(F, zeta, mpz_class((unsigned long)(m / l))) == FpPoly{1}) {
        exact = false;
        break;
      }
    }
    if (exact) return {F, zeta};
  }
  throw std::logic_error("finite_field_with_root_of_unity: no element of exact order found");
}

u64 fq_dlog(const FiniteField& F, const FpPoly& g, u64 n, const FpPoly& h) {
  // Baby-step giant-step inside the order-n cyclic subgroup <g>.
  u64 mstep = isqrt_u64(n) + 1;
  std::map<FpPoly, u64> baby;
  FpPoly cur = {1};
  for (u64 j = 0; j < mstep; ++j) {
    baby.emplace(cur, j);
    cur = fq_mul(F, cur, g);
  }
  // giant = g^{-mstep}
  FpPoly giant = fq_inv(F, fq_pow(F, g, mpz_class((unsigned long)mstep)));
  FpPoly x = h;
  fp_trim(x);
  for (u64 k = 0; k * mstep <= n + mstep; ++k) {
    auto it = baby.find(x);
    if (it != baby.end()) {
      u64 ans = (k * mstep + it->second) % n;
      return ans;
    }
    x = fq_mul(F, x, giant);
  }
  throw NoRepresentation("fq_dlog: element not in the cyclic subgroup");
}

}  // namespace prat
