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

#ifndef PRAT_COMMON_HPP
#define PRAT_COMMON_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>
#include <gmpxx.h>

#include "prat/errors.hpp"

namespace prat {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

inline u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Power with arbitrary-precision exponent (for q^f - 1 style exponents).
inline u64 powmod(u64 a, const mpz_class& e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  for (mp_bitcnt_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
    r = mulmod(r, r, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, a, m);
  }
  return r;
}

// Extended gcd: returns g and writes x, y with a*x + b*y = g (g >= 0).
inline i64 extgcd(i64 a, i64 b, i64& x, i64& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  i64 x1, y1;
  i64 g = extgcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline u64 invmod(u64 a, u64 m) {
  i64 x, y;
  i64 g = extgcd((i64)(a % m), (i64)m, x, y);
  if (g != 1) throw std::domain_error("invmod: not invertible");
  i64 r = x % (i64)m;
  if (r < 0) r += (i64)m;
  return (u64)r;
}

inline u64 isqrt_u64(u64 n) {
  if (n == 0) return 0;
  u64 r = (u64)std::sqrt((double)n);
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

inline std::vector<u64> primes_upto(u64 bound) {
  std::vector<bool> sieve(bound + 1, true);
  std::vector<u64> out;
  for (u64 i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= bound; j += i) sieve[j] = false;
  }
  return out;
}

// Pollard rho + trial division; good enough for the 64-bit composites we meet.
namespace detail {
inline u64 pollard_rho(u64 n) {
  if ((n & 1) == 0) return 2;
  u64 c = 1;
  while (true) {
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      u64 diff = x > y ? x - y : y - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
    ++c;
  }
}
inline void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) { out.push_back(n); return; }
  u64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}
}  // namespace detail

// Sorted prime factorization with multiplicity.
inline std::vector<u64> factorize(u64 n) {
  std::vector<u64> out;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    while (n % p == 0) { out.push_back(p); n /= p; }
  }
  detail::factor_rec(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::pair<u64, int>> factor_pairs(u64 n) {
  std::vector<std::pair<u64, int>> out;
  for (u64 p : factorize(n)) {
    if (!out.empty() && out.back().first == p) ++out.back().second;
    else out.push_back({p, 1});
  }
  return out;
}

inline i64 squarefree_part(i64 n) {
  if (n == 0) return 0;
  i64 sign = n < 0 ? -1 : 1;
  u64 m = (u64)(n < 0 ? -n : n);
  i64 s = 1;
  for (auto [p, e] : factor_pairs(m)) {
    if (e & 1) s *= (i64)p;
  }
  return sign * s;
}

inline int valuation(u64 n, u64 p) {
  int v = 0;
  while (n % p == 0) { n /= p; ++v; }
  return v;
}

// Kronecker symbol (a|n), full 2-adic handling, any signs.
inline int kronecker(i64 a, i64 n) {
  return mpz_kronecker_si(mpz_class(a).get_mpz_t(), n);
}
inline int kronecker(const mpz_class& a, const mpz_class& n) {
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

// Multiplicative order of a modulo m (requires gcd(a, m) = 1).
inline u64 mult_order(u64 a, u64 m) {
  a %= m;
  if (std::gcd(a, m) != 1) throw NotCoprime("mult_order");
  u64 phi = 1;
  for (auto [p, e] : factor_pairs(m)) {
    phi *= (p - 1);
    for (int i = 1; i < e; ++i) phi *= p;
  }
  u64 ord = phi;
  for (u64 p : factorize(phi)) {
    while (ord % p == 0 && powmod(a, ord / p, m) == 1) ord /= p;
  }
  return ord;
}

inline u64 euler_phi(u64 n) {
  u64 phi = 1;
  for (auto [p, e] : factor_pairs(n)) {
    phi *= (p - 1);
    for (int i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

// Smallest primitive root modulo an odd prime p.
inline u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  std::vector<u64> qs = factorize(p - 1);
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : qs) {
      if (powmod(g, (p - 1) / q, p) == 1) { ok = false; break; }
    }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

// Rational reconstruction: find x = n/d with |n|, d <= floor(sqrt(m/2)),
// x*d = n mod m. Returns false when no such pair exists.
inline bool rational_reconstruct(const mpz_class& a0, const mpz_class& m,
                                 mpz_class& num, mpz_class& den) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = a0 % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (t1 == 0) return false;
  if (t1 < 0) { t1 = -t1; r1 = -r1; }
  if (t1 > bound) return false;
  if (gcd(mpz_class(abs(r1)), t1) != 1) return false;
  num = r1;
  den = t1;
  return true;
}

inline mpz_class mpz_from_i64(i64 v) { return mpz_class((long)v); }

// All (a, b) with a^2 + 27 b^2 = 4m and b > 0, by direct scan of a up to
// 2 sqrt(m). Sign normalization: a = 1 mod 3 when 3 does not divide a (the
// two signs give the same field, so one representative is enough), a > 0
// when 3 | a. Solutions with 3 | gcd(a, b) are 3-scaled representations of
// 4(m/9) and belong to the smaller conductor, so they are dropped; with that
// filter the count is exactly 2^(s-1) for a conductor with s factors.
// Sorted by |a|.
inline std::vector<std::pair<i64, i64>> cornacchia_27(u64 m) {
  std::vector<std::pair<i64, i64>> out;
  u64 lim = isqrt_u64(4 * m);
  for (u64 a = 1; a <= lim; ++a) {
    u64 rest = 4 * m - a * a;
    if (rest % 27 != 0) continue;
    u64 b2 = rest / 27;
    u64 b = isqrt_u64(b2);
    if (b == 0 || b * b != b2) continue;
    if (a % 3 == 0 && b % 3 == 0) continue;
    i64 sa = (i64)a;
    if (a % 3 == 2) sa = -sa;  // -a = 1 mod 3
    out.push_back({sa, (i64)b});
  }
  if (out.empty()) throw NoRepresentation("cornacchia_27");
  return out;
}

}  // namespace prat

#endif  // PRAT_COMMON_HPP
