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

#include "prat/cubic.hpp"

#include <algorithm>
#include <stdexcept>

#include "prat/errors.hpp"

namespace prat {

namespace {

using Q3 = std::array<mpq_class, 3>;

Q3 q3_of(const AlgebraicNumber& x) { return x.c; }

AlgebraicNumber an_of(Q3 v) {
  AlgebraicNumber out;
  out.c = std::move(v);
  return out;
}

bool q3_is_zero(const Q3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

// Product of two elements of Q[x]/(f), f monic cubic with integer
// coefficients.
Q3 q3_mul(const IntPoly& f, const Q3& x, const Q3& y) {
  std::array<mpq_class, 5> p{};
  for (int i = 0; i < 3; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < 3; ++j) p[i + j] += x[i] * y[j];
  }
  for (int k = 4; k >= 3; --k) {
    if (p[k] == 0) continue;
    mpq_class top = p[k];
    p[k] = 0;
    for (int i = 0; i < 3; ++i) p[k - 3 + i] -= top * mpq_class(f[i]);
  }
  return {p[0], p[1], p[2]};
}

// T(e) in Q[x]/(f) for an integer polynomial T (Horner).
Q3 q3_eval_int_poly(const IntPoly& f, const IntPoly& T, const Q3& e) {
  Q3 acc{};
  for (int i = poly_deg(T); i >= 0; --i) {
    acc = q3_mul(f, acc, e);
    acc[0] += mpq_class(T[i]);
  }
  return acc;
}

// Dense rational polynomial helpers for the extended Euclid in Q[x].
using QP = std::vector<mpq_class>;

void qp_trim(QP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a <- a - q * b for the quotient monomials of the long division; returns the
// quotient (unused by the inverse, so only the remainder path is kept).
QP qp_rem(QP a, const QP& b, QP* quot) {
  if (b.empty()) throw std::domain_error("qp_rem: division by zero polynomial");
  QP q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, mpq_class(0));
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    qp_trim(a);
    if (a.size() >= b.size() && !a.empty() && a.back() == 0) qp_trim(a);
  }
  if (quot) { *quot = q; qp_trim(*quot); }
  return a;
}

// Inverse of a nonzero element of Q[x]/(f) by the half-extended Euclid.
Q3 q3_inv(const IntPoly& f, const Q3& x) {
  if (q3_is_zero(x)) throw std::domain_error("q3_inv: zero element");
  QP r0(f.size());
  for (size_t i = 0; i < f.size(); ++i) r0[i] = mpq_class(f[i]);
  QP r1 = {x[0], x[1], x[2]};
  qp_trim(r1);
  QP t0 = {}, t1 = {mpq_class(1)};
  while (r1.size() > 1) {
    QP q;
    QP r2 = qp_rem(r0, r1, &q);
    // t2 = t0 - q * t1
    QP t2 = t0;
    if (!q.empty() && !t1.empty()) {
      QP prod(q.size() + t1.size() - 1, mpq_class(0));
      for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < t1.size(); ++j) prod[i + j] += q[i] * t1[j];
      if (t2.size() < prod.size()) t2.resize(prod.size(), mpq_class(0));
      for (size_t i = 0; i < prod.size(); ++i) t2[i] -= prod[i];
      qp_trim(t2);
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r1.empty()) throw std::logic_error("q3_inv: reducible modulus");
  mpq_class c = r1[0];
  Q3 out{};
  for (size_t i = 0; i < t1.size() && i < 3; ++i) out[i] = t1[i] / c;
  return out;
}

bool q3_lex_less(const Q3& a, const Q3& b) {
  for (int i = 0; i < 3; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Split-prime lifting: exact embeddings of the root of T into Q[x]/(f).
// ---------------------------------------------------------------------------

// Smallest prime >= start at which every polynomial splits into three
// distinct linear factors.
u64 find_split_prime(const std::vector<const IntPoly*>& ps, u64 start) {
  for (u64 ell = start | 1;; ell += 2) {
    if (!is_prime_u64(ell)) continue;
    bool ok = true;
    for (const IntPoly* g : ps) {
      FpPoly gb = fp_reduce(*g, ell);
      if (fp_deg(gb) != 3 || fp_roots(gb, ell).size() != 3) {
        ok = false;
        break;
      }
    }
    if (ok) return ell;
  }
}

mpz_class eval_mod(const IntPoly& f, const mpz_class& x, const mpz_class& M) {
  mpz_class acc = 0;
  for (int i = poly_deg(f); i >= 0; --i) acc = (acc * x + f[i]) % M;
  if (acc < 0) acc += M;
  return acc;
}

// One Newton step: a root mod M becomes a root mod M^2 (simple root).
mpz_class newton_step(const IntPoly& f, const IntPoly& fd, const mpz_class& r,
                      const mpz_class& M2) {
  mpz_class fr = eval_mod(f, r, M2);
  mpz_class fdr = eval_mod(fd, r, M2);
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), fdr.get_mpz_t(), M2.get_mpz_t()) == 0)
    throw LiftFailure("newton_step: derivative not invertible");
  mpz_class out = (r - fr * inv) % M2;
  if (out < 0) out += M2;
  return out;
}

// Quadratic through (x_i, y_i), i = 0..2, modulo M (x_i distinct mod the
// prime below M).
std::array<mpz_class, 3> lagrange3(const std::array<mpz_class, 3>& x,
                                   const std::array<mpz_class, 3>& y,
                                   const mpz_class& M) {
  std::array<mpz_class, 3> c{0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    mpz_class den = ((x[i] - x[j]) * (x[i] - x[k])) % M;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), M.get_mpz_t()) == 0)
      throw LiftFailure("lagrange3: coincident roots");
    mpz_class w = (y[i] * inv) % M;
    c[2] = (c[2] + w) % M;
    c[1] = (c[1] - w * (x[j] + x[k])) % M;
    c[0] = (c[0] + w * (x[j] * x[k] % M)) % M;
  }
  for (auto& v : c)
    if (v < 0) v += M;
  return c;
}

// First exact embedding of the root of T into Q[x]/(f): label the roots of
// both polynomials modulo a split prime, lift the labels, and accept the
// first labeling whose interpolated coordinates reconstruct to rationals
// and verify T(e) = 0 mod f exactly. Among labelings verified at the same
// precision the lexicographically least result wins (determinism).
AlgebraicNumber embed_first(const IntPoly& f, const IntPoly& T, bool skip_identity) {
  const u64 kStart = (1ull << 20) + 1;
  u64 ell = find_split_prime({&f, &T}, kStart);
  FpPoly fb = fp_reduce(f, ell), tb = fp_reduce(T, ell);
  auto rfv = fp_roots(fb, ell), rtv = fp_roots(tb, ell);
  std::sort(rfv.begin(), rfv.end());
  std::sort(rtv.begin(), rtv.end());
  std::array<mpz_class, 3> rf, rt;
  for (int i = 0; i < 3; ++i) {
    rf[i] = mpz_class((unsigned long)rfv[i]);
    rt[i] = mpz_class((unsigned long)rtv[i]);
  }
  IntPoly fd = poly_derivative(f), td = poly_derivative(T);
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  mpz_class M((unsigned long)ell);
  for (int step = 0; step <= 11; ++step) {
    if (step > 0) {
      mpz_class M2 = M * M;
      for (int i = 0; i < 3; ++i) {
        rf[i] = newton_step(f, fd, rf[i], M2);
        rt[i] = newton_step(T, td, rt[i], M2);
      }
      M = M2;
    }
    bool have = false;
    Q3 best{};
    for (const auto& p : perms) {
      std::array<mpz_class, 3> y = {rt[p[0]], rt[p[1]], rt[p[2]]};
      auto c = lagrange3(rf, y, M);
      Q3 cand{};
      bool ok = true;
      for (int i = 0; i < 3; ++i) {
        mpz_class num, den;
        if (!rational_reconstruct(c[i], M, num, den)) {
          ok = false;
          break;
        }
        mpq_class q(num, den);
        q.canonicalize();
        cand[i] = q;
      }
      if (!ok) continue;
      if (skip_identity && cand[0] == 0 && cand[1] == 1 && cand[2] == 0) continue;
      if (!q3_is_zero(q3_eval_int_poly(f, T, cand))) continue;
      if (!have || q3_lex_less(cand, best)) {
        best = cand;
        have = true;
      }
    }
    if (have) return an_of(best);
  }
  throw LiftFailure("embed_first: precision cap reached");
}

// Gram matrix of the coordinate lattice Z^3 under the real embeddings of
// Q[x]/(f): entries are the traces Tr(alpha^{i+j}) via Newton's identities.
// Exact, so the reduction never suffers a rounding failure.
IntMat trace_form(const IntPoly& f) {
  const mpz_class &c0 = f[0], &c1 = f[1], &c2 = f[2];
  std::array<mpz_class, 5> s;
  s[0] = 3;
  s[1] = -c2;
  s[2] = c2 * c2 - 2 * c1;
  for (int k = 3; k <= 4; ++k) s[k] = -(c2 * s[k - 1] + c1 * s[k - 2] + c0 * s[k - 3]);
  IntMat G(3, std::vector<mpz_class>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) G[i][j] = s[i + j];
  return G;
}

}  // namespace

// ---------------------------------------------------------------------------
// Conductors and field construction
// ---------------------------------------------------------------------------

bool is_cubic_conductor(u64 m) {
  if (m < 7) return false;
  for (auto [p, e] : factor_pairs(m)) {
    if (p == 3) {
      if (e != 2) return false;
    } else if (p % 3 != 1 || e != 1) {
      return false;
    }
  }
  return true;
}

std::vector<CyclicCubicField> fields_from_conductor(u64 m) {
  if (!is_cubic_conductor(m))
    throw InvalidConductor("fields_from_conductor: " + std::to_string(m));
  std::vector<CyclicCubicField> out;
  mpz_class mz((unsigned long)m);
  for (auto [a, b] : cornacchia_27(m)) {
    CyclicCubicField K;
    K.m = m;
    K.a = a;
    K.b = (u64)b;
    mpz_class c2, c1, c0;
    if (a % 3 != 0) {
      c2 = 1;
      c1 = (1 - mz) / 3;
      mpz_class num = mz * (3 + a) - 1;
      if (num % 27 != 0) throw std::logic_error("fields_from_conductor: 27 | m(3+a)-1 fails");
      c0 = -num / 27;
    } else {
      c2 = 0;
      c1 = -mz / 3;
      mpz_class num = a * mz;
      if (num % 27 != 0) throw std::logic_error("fields_from_conductor: 27 | a*m fails");
      c0 = -num / 27;
    }
    K.f = {c0, c1, c2, mpz_class(1)};
    out.push_back(std::move(K));
  }
  return out;
}

FamilyMinpolys explicit_unit_minpolys(i64 a) {
  if ((a & 1) == 0) throw std::invalid_argument("explicit_unit_minpolys: a must be odd");
  mpz_class az((long)a);
  mpz_class mz = (az * az + 27) / 4;
  FamilyMinpolys out;
  out.m = (u64)mz.get_ui();
  out.g = {-mz, 2 * mz, -mz, mpz_class(1)};
  mpz_class A = (2 * mz - 3 - az) / 2, B = (2 * mz - 3 + az) / 2;
  out.mu = {mpz_class(-1), B, -A, mpz_class(1)};
  out.nu = {mpz_class(-1), mpz_class(3), mz - 3, mpz_class(1)};
  return out;
}

// ---------------------------------------------------------------------------
// Element arithmetic
// ---------------------------------------------------------------------------

AlgebraicNumber an_from_int(i64 c0, i64 c1, i64 c2) {
  AlgebraicNumber x;
  x.c = {mpq_class((long)c0), mpq_class((long)c1), mpq_class((long)c2)};
  return x;
}

bool an_eq(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  return x.c[0] == y.c[0] && x.c[1] == y.c[1] && x.c[2] == y.c[2];
}

AlgebraicNumber an_add(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  AlgebraicNumber out;
  for (int i = 0; i < 3; ++i) out.c[i] = x.c[i] + y.c[i];
  return out;
}

AlgebraicNumber an_mul(const CyclicCubicField& K, const AlgebraicNumber& x,
                       const AlgebraicNumber& y) {
  return an_of(q3_mul(K.f, q3_of(x), q3_of(y)));
}

AlgebraicNumber an_inv(const CyclicCubicField& K, const AlgebraicNumber& x) {
  return an_of(q3_inv(K.f, q3_of(x)));
}

AlgebraicNumber an_apply(const CyclicCubicField& K, const AlgebraicNumber& s,
                         const AlgebraicNumber& x) {
  Q3 acc{};
  for (int i = 2; i >= 0; --i) {
    acc = q3_mul(K.f, acc, q3_of(s));
    acc[0] += x.c[i];
  }
  return an_of(acc);
}

mpq_class an_norm(const CyclicCubicField& K, const AlgebraicNumber& x) {
  // Clear denominators: N(x) = Res(f, d*x) / d^3 for monic f.
  mpz_class d = 1;
  for (int i = 0; i < 3; ++i) d = lcm(d, x.c[i].get_den());
  IntPoly E;
  for (int i = 0; i < 3; ++i) {
    mpq_class s = x.c[i] * mpq_class(d);
    E.push_back(s.get_num());
  }
  poly_trim(E);
  if (E.empty()) return mpq_class(0);
  mpq_class out(poly_resultant(K.f, E), d * d * d);
  out.canonicalize();
  return out;
}

std::vector<mpq_class> an_char_poly(const CyclicCubicField& K, const AlgebraicNumber& x) {
  // Multiplication matrix columns: x, x*alpha, x*alpha^2.
  Q3 col0 = q3_of(x);
  Q3 col1 = q3_mul(K.f, col0, Q3{mpq_class(0), mpq_class(1), mpq_class(0)});
  Q3 col2 = q3_mul(K.f, col1, Q3{mpq_class(0), mpq_class(1), mpq_class(0)});
  mpq_class M[3][3];
  for (int i = 0; i < 3; ++i) {
    M[i][0] = col0[i];
    M[i][1] = col1[i];
    M[i][2] = col2[i];
  }
  mpq_class tr = M[0][0] + M[1][1] + M[2][2];
  mpq_class minors = M[0][0] * M[1][1] - M[0][1] * M[1][0] + M[0][0] * M[2][2] -
                     M[0][2] * M[2][0] + M[1][1] * M[2][2] - M[1][2] * M[2][1];
  mpq_class det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                  M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                  M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
  return {-det, minors, -tr, mpq_class(1)};
}

std::array<u64, 3> an_mod(const AlgebraicNumber& x, u64 mod) {
  std::array<u64, 3> out{};
  mpz_class mz((unsigned long)mod);
  for (int i = 0; i < 3; ++i) {
    const mpz_class& den = x.c[i].get_den();
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mz.get_mpz_t()) == 0)
      throw NotCoprime("an_mod: denominator not invertible");
    mpz_class v = (x.c[i].get_num() % mz) * inv % mz;
    if (v < 0) v += mz;
    out[i] = (u64)v.get_ui();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Embeddings and the automorphism
// ---------------------------------------------------------------------------

Automorphism automorphism(const CyclicCubicField& K) {
  AlgebraicNumber s = embed_first(K.f, K.f, /*skip_identity=*/true);
  AlgebraicNumber s2 = an_apply(K, s, s);
  AlgebraicNumber s3 = an_apply(K, s, s2);
  AlgebraicNumber id = an_from_int(0, 1, 0);
  if (an_eq(s, id) || !an_eq(s3, id))
    throw LiftFailure("automorphism: image does not have order three");
  Automorphism out;
  out.image = q3_lex_less(q3_of(s2), q3_of(s)) ? s2 : s;
  return out;
}

std::pair<AlgebraicNumber, AlgebraicNumber> embed_explicit_elements(const CyclicCubicField& K) {
  if (K.b != 1)
    throw NotInFamily("embed_explicit_elements: requires a^2 + 27 = 4m (b = 1)");
  FamilyMinpolys mins = explicit_unit_minpolys(K.a);
  if (mins.m != K.m) throw std::logic_error("embed_explicit_elements: conductor mismatch");
  Automorphism sig = automorphism(K);
  auto canonical = [&](const IntPoly& T) {
    AlgebraicNumber e = embed_first(K.f, T, /*skip_identity=*/false);
    AlgebraicNumber best = e;
    AlgebraicNumber cur = e;
    for (int i = 0; i < 2; ++i) {
      cur = an_apply(K, sig.image, cur);
      if (!q3_is_zero(q3_eval_int_poly(K.f, T, q3_of(cur))))
        throw std::logic_error("embed_explicit_elements: conjugate fails verification");
      if (q3_lex_less(q3_of(cur), q3_of(best))) best = cur;
    }
    return best;
  };
  return {canonical(mins.g), canonical(mins.nu)};
}

// ---------------------------------------------------------------------------
// Ramified primes and the unit search
// ---------------------------------------------------------------------------

CubicIdeal factor_ramified_prime(const CyclicCubicField& K, u64 ell) {
  if (!is_prime_u64(ell) || K.m % ell != 0)
    throw std::invalid_argument("factor_ramified_prime: need a prime divisor of the conductor");
  FpPoly fb = fp_reduce(K.f, ell);
  auto roots = fp_roots(fb, ell);
  bool cube_ok = false;
  u64 r = 0;
  for (u64 cand : roots) {
    FpPoly lin = {(ell - cand % ell) % ell, 1};
    FpPoly c3 = fp_mul(fp_mul(lin, lin, ell), lin, ell);
    if (c3 == fb) {
      cube_ok = true;
      r = cand;
      break;
    }
  }
  if (!cube_ok)
    throw IndexDivisor("factor_ramified_prime: f mod ell is not a cubed linear factor");
  // Dedekind criterion at a totally ramified prime: ell divides the index
  // exactly when ((f - (x-r)^3)/ell)(r) = 0 mod ell.
  mpz_class rz((unsigned long)r);
  IntPoly lin = {-rz, mpz_class(1)};
  IntPoly cube = poly_mul(poly_mul(lin, lin), lin);
  IntPoly diff = poly_sub(K.f, cube);
  mpz_class ez((unsigned long)ell);
  IntPoly quo;
  for (const mpz_class& c : diff) {
    if (c % ez != 0) throw std::logic_error("factor_ramified_prime: cube reduction mismatch");
    quo.push_back(c / ez);
  }
  poly_trim(quo);
  mpz_class val = quo.empty() ? mpz_class(0) : eval_mod(quo, rz, ez);
  if (val == 0)
    throw IndexDivisor("factor_ramified_prime: ell divides the index of Z[alpha]");
  // HNF of <ell, alpha - r> over (1, alpha, alpha^2).
  IntMat rows;
  rows.push_back({ez, mpz_class(0), mpz_class(0)});
  rows.push_back({mpz_class(0), ez, mpz_class(0)});
  rows.push_back({mpz_class(0), mpz_class(0), ez});
  rows.push_back({-rz, mpz_class(1), mpz_class(0)});
  rows.push_back({mpz_class(0), -rz, mpz_class(1)});
  rows.push_back({-K.f[0], -K.f[1], -(K.f[2] + rz)});
  CubicIdeal out;
  out.hnf = hnf_rows(std::move(rows));
  if (out.hnf.size() != 3) throw std::logic_error("factor_ramified_prime: rank drop");
  out.norm = out.hnf[0][0] * out.hnf[1][1] * out.hnf[2][2];
  if (out.norm != ez) throw std::logic_error("factor_ramified_prime: ideal norm is not ell");
  return out;
}

CubicIdeal ideal_mul(const CyclicCubicField& K, const CubicIdeal& A, const CubicIdeal& B) {
  IntMat rows;
  for (const auto& u : A.hnf) {
    IntPoly up = {u[0], u[1], u[2]};
    poly_trim(up);
    for (const auto& v : B.hnf) {
      IntPoly vp = {v[0], v[1], v[2]};
      poly_trim(vp);
      IntPoly w = poly_mul(up, vp);
      // reduce mod f (monic cubic)
      for (int k = (int)w.size() - 1; k >= 3; --k) {
        mpz_class top = w[k];
        if (top == 0) continue;
        w[k] = 0;
        for (int i = 0; i < 3; ++i) w[k - 3 + i] -= top * K.f[i];
      }
      w.resize(3, mpz_class(0));
      rows.push_back({w[0], w[1], w[2]});
    }
  }
  CubicIdeal out;
  out.hnf = hnf_rows(std::move(rows));
  if (out.hnf.size() != 3) throw std::logic_error("ideal_mul: rank drop");
  out.norm = out.hnf[0][0] * out.hnf[1][1] * out.hnf[2][2];
  return out;
}

std::vector<AlgebraicNumber> fast_unit_all(const CyclicCubicField& K) {
  Automorphism sig = automorphism(K);
  IntMat G = trace_form(K.f);
  std::vector<AlgebraicNumber> out;
  for (auto [ell, e] : factor_pairs(K.m)) {
    CubicIdeal gl;
    try {
      gl = factor_ramified_prime(K, ell);
    } catch (const IndexDivisor&) {
      continue;
    }
    IntMat red = lll_reduce(gl.hnf, &G);
    mpz_class ez((unsigned long)ell);
    bool found = false;
    AlgebraicNumber omega;
    for (int c0 = -2; c0 <= 2 && !found; ++c0)
      for (int c1 = -2; c1 <= 2 && !found; ++c1)
        for (int c2 = -2; c2 <= 2 && !found; ++c2) {
          if (c0 == 0 && c1 == 0 && c2 == 0) continue;
          IntPoly E(3, mpz_class(0));
          for (int i = 0; i < 3; ++i)
            E[i] = c0 * red[0][i] + c1 * red[1][i] + c2 * red[2][i];
          poly_trim(E);
          if (E.empty()) continue;
          mpz_class N = poly_resultant(K.f, E);
          if (N == ez || N == -ez) {
            E.resize(3, mpz_class(0));
            omega.c = {mpq_class(E[0]), mpq_class(E[1]), mpq_class(E[2])};
            found = true;
          }
        }
    if (!found) continue;
    AlgebraicNumber so = an_apply(K, sig.image, omega);
    AlgebraicNumber eta = an_mul(K, so, an_inv(K, omega));
    if (an_norm(K, eta) != 1)
      throw std::logic_error("fast_unit: sigma(omega)/omega must have norm one");
    out.push_back(std::move(eta));
  }
  return out;
}

AlgebraicNumber fast_unit(const CyclicCubicField& K) {
  auto units = fast_unit_all(K);
  if (units.empty())
    throw NoGeneratorFound("fast_unit: no ramified prime yielded a principal generator");
  return units.front();
}

}  // namespace prat
