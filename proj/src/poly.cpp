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

#include "prat/poly.hpp"

#include <stdexcept>

namespace prat {

IntPoly poly_from(std::initializer_list<long> coeffs) {
  IntPoly f;
  for (long c : coeffs) f.push_back(mpz_class(c));
  poly_trim(f);
  return f;
}

void poly_trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int poly_deg(const IntPoly& f) { return (int)f.size() - 1; }

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

IntPoly poly_scale(const IntPoly& a, const mpz_class& c) {
  if (c == 0) return {};
  IntPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

mpz_class poly_eval(const IntPoly& f, const mpz_class& x) {
  mpz_class r = 0;
  for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

IntPoly poly_derivative(const IntPoly& f) {
  IntPoly r;
  for (size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * (long)i);
  poly_trim(r);
  return r;
}

mpz_class poly_content(const IntPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f) g = gcd(g, c);
  return g;
}

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
  if (b.empty()) throw std::domain_error("poly_divexact: division by zero");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw std::domain_error("poly_divexact: not divisible");
  IntPoly rem = a;
  IntPoly q(a.size() - b.size() + 1, mpz_class(0));
  const mpz_class& lc = b.back();
  for (size_t i = a.size() - b.size() + 1; i-- > 0;) {
    mpz_class c = rem[i + b.size() - 1];
    if (c == 0) continue;
    if (c % lc != 0) throw std::domain_error("poly_divexact: not divisible");
    c /= lc;
    q[i] = c;
    for (size_t j = 0; j < b.size(); ++j) rem[i + j] -= c * b[j];
  }
  poly_trim(rem);
  if (!rem.empty()) throw std::domain_error("poly_divexact: nonzero remainder");
  return q;
}

// Subresultant polynomial remainder sequence. Follows the classical scheme:
// pseudo-remainders scaled down by g*h^delta keep coefficient growth linear
// while staying exact over Z.
mpz_class poly_resultant(const IntPoly& a0, const IntPoly& b0) {
  IntPoly a = a0, b = b0;
  poly_trim(a);
  poly_trim(b);
  if (a.empty() || b.empty()) return 0;
  if (poly_deg(a) == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), a[0].get_mpz_t(), (unsigned long)poly_deg(b));
    return r;
  }
  if (poly_deg(b) == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b[0].get_mpz_t(), (unsigned long)poly_deg(a));
    return r;
  }
  mpz_class sign = 1;
  if (poly_deg(a) < poly_deg(b)) {
    std::swap(a, b);
    if ((poly_deg(a) & 1) && (poly_deg(b) & 1)) sign = -1;
  }
  mpz_class g = 1, h = 1;
  while (true) {
    int da = poly_deg(a), db = poly_deg(b);
    int delta = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;
    // Pseudo-remainder: lc(b)^(delta+1) * a mod b.
    IntPoly r = a;
    mpz_class lcb = b.back();
    for (int i = 0; i <= delta; ++i) {
      if (poly_deg(r) < db) {
        for (auto& c : r) c *= lcb;
        continue;
      }
      mpz_class c = r.back();
      IntPoly t(poly_deg(r) - db, mpz_class(0));
      for (auto& x : r) x *= lcb;
      for (size_t j = 0; j < b.size(); ++j) r[t.size() + j] -= c * b[j];
      poly_trim(r);
    }
    if (r.empty()) return 0;
    if (poly_deg(r) == 0 ? db > 0 : false) {
      // fallthrough handled below
    }
    a = b;
    // Divide by g * h^delta.
    mpz_class hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), (unsigned long)delta);
    mpz_class div = g * hd;
    for (auto& c : r) {
      if (c % div != 0) throw std::logic_error("subresultant: inexact division");
      c /= div;
    }
    b = r;
    g = a.back();
    // h = h^{1-delta} g^delta
    if (delta > 0) {
      mpz_class gd;
      mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), (unsigned long)delta);
      if (delta == 1) {
        h = gd;
      } else {
        mpz_class hpow;
        mpz_pow_ui(hpow.get_mpz_t(), h.get_mpz_t(), (unsigned long)(delta - 1));
        if (gd % hpow != 0) throw std::logic_error("subresultant: h update inexact");
        h = gd / hpow;
      }
    }
    if (poly_deg(b) == 0) {
      // Resultant = h^{1-da} * lc(b)^{da} with da = deg(a) at this point.
      int d = poly_deg(a);
      mpz_class lcb2;
      mpz_pow_ui(lcb2.get_mpz_t(), b[0].get_mpz_t(), (unsigned long)d);
      if (d <= 1) return sign * lcb2;
      mpz_class hpow;
      mpz_pow_ui(hpow.get_mpz_t(), h.get_mpz_t(), (unsigned long)(d - 1));
      if (lcb2 % hpow != 0) throw std::logic_error("subresultant: final division inexact");
      return sign * (lcb2 / hpow);
    }
  }
}

mpz_class poly_discriminant(const IntPoly& f) {
  int n = poly_deg(f);
  if (n < 1) throw std::domain_error("poly_discriminant: degree < 1");
  mpz_class res = poly_resultant(f, poly_derivative(f));
  mpz_class d = res / f.back();
  if (d * f.back() != res) throw std::logic_error("poly_discriminant: lc does not divide");
  long m = (long)n * (n - 1) / 2;
  return (m % 2 == 0) ? d : -d;
}

IntPoly cyclotomic_poly(u64 n) {
  if (n == 0) throw std::domain_error("cyclotomic_poly: n = 0");
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed by recursion on
  // divisors; exact division over Z at every step.
  IntPoly num((size_t)n + 1, mpz_class(0));
  num[0] = -1;
  num[n] = 1;
  if (n == 1) return num;
  for (u64 d = 1; d < n; ++d) {
    if (n % d == 0) num = poly_divexact(num, cyclotomic_poly(d));
  }
  return num;
}

// ---------------------------------------------------------------------------

FpPoly fp_reduce(const IntPoly& f, u64 p) {
  FpPoly r(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    mpz_class c = f[i] % (long)p;
    if (c < 0) c += (long)p;
    r[i] = c.get_ui();
  }
  fp_trim(r);
  return r;
}

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_deg(const FpPoly& f) { return (int)f.size() - 1; }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  fp_trim(r);
  return r;
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, u64 p) {
  if (b.empty()) throw std::domain_error("fp_rem: division by zero");
  u64 inv_lc = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    u64 c = mulmod(a.back(), inv_lc, p);
    size_t off = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j) {
      u64 t = mulmod(c, b[j], p);
      a[off + j] = (a[off + j] + p - t) % p;
    }
    fp_trim(a);
    if (a.empty()) break;
    if (a.size() < b.size()) break;
  }
  return a;
}

// Quotient of a by b over F_p (b nonzero); remainder is discarded.
static FpPoly fp_quo(FpPoly a, const FpPoly& b, u64 p) {
  if (b.empty()) throw std::domain_error("fp_quo: division by zero");
  if (a.size() < b.size()) return {};
  u64 inv_lc = invmod(b.back(), p);
  FpPoly q(a.size() - b.size() + 1, 0);
  for (size_t i = a.size() - b.size() + 1; i-- > 0;) {
    if (a.size() != b.size() + i) continue;
    u64 c = mulmod(a.back(), inv_lc, p);
    q[i] = c;
    for (size_t j = 0; j < b.size(); ++j) {
      u64 t = mulmod(c, b[j], p);
      a[i + j] = (a[i + j] + p - t) % p;
    }
    fp_trim(a);
  }
  fp_trim(q);
  return q;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    a = fp_rem(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty() && a.back() != 1) {
    u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

FpPoly fp_powmod(FpPoly base, const mpz_class& e, const FpPoly& modf, u64 p) {
  FpPoly r = {1};
  base = fp_rem(std::move(base), modf, p);
  for (mp_bitcnt_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
    r = fp_rem(fp_mul(r, r, p), modf, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_rem(fp_mul(r, base, p), modf, p);
  }
  return r;
}

FpPoly fp_powmod_x(u64 e_base, const mpz_class& e, const FpPoly& modf, u64 p) {
  FpPoly x = {0, 1};
  (void)e_base;
  return fp_powmod(std::move(x), e, modf, p);
}

bool fp_is_squarefree(const FpPoly& f, u64 p) {
  FpPoly d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(mulmod(f[i], i % p, p));
  fp_trim(d);
  if (d.empty()) return false;  // f is a p-th power of something
  return fp_deg(fp_gcd(f, d, p)) <= 0;
}

std::vector<int> fp_factor_degrees(const FpPoly& f0, u64 p) {
  // Distinct-degree decomposition: g_d = gcd(x^{p^d} - x, f) peels off the
  // product of all degree-d irreducible factors.
  FpPoly f = f0;
  if (!f.empty() && f.back() != 1) {
    u64 inv = invmod(f.back(), p);
    for (auto& c : f) c = mulmod(c, inv, p);
  }
  std::vector<int> degs;
  FpPoly xp = {0, 1};
  int d = 0;
  while (fp_deg(f) > 0) {
    ++d;
    xp = fp_powmod(std::move(xp), mpz_class((unsigned long)p), f, p);
    FpPoly t = xp;
    if (t.size() < 2) t.resize(2, 0);
    t[1] = (t[1] + p - 1) % p;
    fp_trim(t);
    FpPoly g = fp_gcd(f, t, p);
    int dg = fp_deg(g);
    if (dg > 0) {
      for (int i = 0; i < dg / d; ++i) degs.push_back(d);
      f = fp_quo(std::move(f), g, p);
      if (fp_deg(f) <= 0) break;
      xp = fp_rem(std::move(xp), f, p);
    }
    if (2 * (d + 1) > fp_deg(f) && fp_deg(f) > 0) {
      degs.push_back(fp_deg(f));
      break;
    }
    if (fp_deg(f) <= 0) break;
  }
  std::sort(degs.begin(), degs.end());
  return degs;
}

std::vector<u64> fp_roots(const FpPoly& f, u64 p) {
  std::vector<u64> roots;
  if (f.empty()) return roots;
  if (p <= 4096) {
    for (u64 x = 0; x < p; ++x) {
      u64 v = 0;
      for (size_t i = f.size(); i-- > 0;) v = (mulmod(v, x, p) + f[i]) % p;
      if (v == 0) roots.push_back(x);
    }
    return roots;
  }
  // gcd with x^p - x isolates the linear factors, then split by random shifts.
  FpPoly xp = fp_powmod_x(p, mpz_class((unsigned long)p), f, p);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = (xp[1] + p - 1) % p;
  fp_trim(xp);
  FpPoly g = fp_gcd(f, xp, p);
  // Split g recursively with gcd(g, (x+a)^{(p-1)/2} - 1).
  std::vector<FpPoly> stack = {g};
  u64 seed = 0x9e3779b97f4a7c15ull;
  while (!stack.empty()) {
    FpPoly h = stack.back();
    stack.pop_back();
    int dh = fp_deg(h);
    if (dh <= 0) continue;
    if (dh == 1) {
      // root = -c0 / c1
      u64 r = mulmod(p - h[0] % p, invmod(h[1], p), p);
      roots.push_back(r % p);
      continue;
    }
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    u64 a = seed % p;
    FpPoly shift = {a, 1};
    FpPoly t = fp_powmod(shift, mpz_class(mpz_class((unsigned long)((p - 1) / 2))), h, p);
    if (t.empty()) t = {0};
    t[0] = (t[0] + p - 1) % p;
    fp_trim(t);
    FpPoly g1 = fp_gcd(h, t, p);
    if (fp_deg(g1) <= 0 || fp_deg(g1) == dh) {
      stack.push_back(h);  // unlucky split, try another shift
      continue;
    }
    stack.push_back(fp_quo(h, g1, p));
    stack.push_back(std::move(g1));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int rank_mod_p(const std::vector<std::vector<u64>>& rows, u64 p) {
  if (rows.empty()) return 0;
  FpRowReducer red(p, (int)rows[0].size());
  for (const auto& r : rows) red.add_row(r);
  return red.rank();
}

bool FpRowReducer::add_row(std::vector<u64> row) {
  if ((int)row.size() != width_) throw std::invalid_argument("row width mismatch");
  for (auto& c : row) c %= p_;
  for (size_t k = 0; k < rows_.size(); ++k) {
    u64 c = row[pivots_[k]];
    if (c == 0) continue;
    for (int j = 0; j < width_; ++j) {
      u64 t = mulmod(c, rows_[k][j], p_);
      row[j] = (row[j] + p_ - t) % p_;
    }
  }
  int piv = -1;
  for (int j = 0; j < width_; ++j) {
    if (row[j] != 0) { piv = j; break; }
  }
  if (piv < 0) return false;
  u64 inv = invmod(row[piv], p_);
  for (auto& c : row) c = mulmod(c, inv, p_);
  rows_.push_back(std::move(row));
  pivots_.push_back(piv);
  return true;
}

}  // namespace prat
