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

#include "prat/lll.hpp"

#include <stdexcept>

namespace prat {

namespace {

// <u, v> under the optional Gram form, exact rational result.
mpq_class inner(const std::vector<mpz_class>& u, const std::vector<mpz_class>& v,
                const IntMat* gram) {
  mpz_class acc = 0;
  if (!gram) {
    for (size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  } else {
    for (size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      mpz_class row = 0;
      for (size_t j = 0; j < v.size(); ++j) row += (*gram)[i][j] * v[j];
      acc += u[i] * row;
    }
  }
  return mpq_class(acc);
}

struct Gso {
  std::vector<std::vector<mpq_class>> mu;  // mu[i][j], j < i
  std::vector<mpq_class> B;                // squared lengths of b*_i
};

Gso gso_compute(const IntMat& b, const IntMat* gram) {
  size_t n = b.size();
  Gso g;
  g.mu.assign(n, std::vector<mpq_class>(n, 0));
  g.B.assign(n, 0);
  // b*_i = b_i - sum_{j<i} mu_ij b*_j; only inner products are needed, so we
  // track r_ij = <b_i, b*_j> instead of the vectors themselves.
  std::vector<std::vector<mpq_class>> r(n, std::vector<mpq_class>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j <= i; ++j) {
      mpq_class s = inner(b[i], b[j], gram);
      for (size_t k = 0; k < j; ++k) s -= g.mu[j][k] * r[i][k];
      r[i][j] = s;
      if (j < i) {
        if (g.B[j] == 0) throw std::domain_error("lll_reduce: basis not independent");
        g.mu[i][j] = s / g.B[j];
      } else {
        g.B[i] = s;
      }
    }
  }
  return g;
}

}  // namespace

IntMat lll_reduce(IntMat b, const IntMat* gram) {
  const size_t n = b.size();
  if (n <= 1) return b;
  const mpq_class delta(99, 100);
  Gso g = gso_compute(b, gram);

  auto size_reduce = [&](size_t i, size_t j) {
    // Round mu[i][j] to the nearest integer q and set b_i -= q b_j.
    mpq_class m = g.mu[i][j];
    mpz_class num = m.get_num(), den = m.get_den();
    mpz_class q;
    // floor(m + 1/2)
    mpz_class twice = 2 * num + den;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
    if (q == 0) return;
    for (size_t c = 0; c < b[i].size(); ++c) b[i][c] -= q * b[j][c];
    for (size_t k = 0; k < j; ++k) g.mu[i][k] -= mpq_class(q) * g.mu[j][k];
    g.mu[i][j] -= mpq_class(q);
  };

  size_t k = 1;
  while (k < n) {
    size_reduce(k, k - 1);
    mpq_class lhs = g.B[k];
    mpq_class rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.B[k - 1];
    if (lhs >= rhs) {
      for (size_t j = k - 1; j-- > 0;) size_reduce(k, j);
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      g = gso_compute(b, gram);  // dims here are tiny; recompute is simplest
      k = k > 1 ? k - 1 : 1;
    }
  }
  return b;
}

IntMat hnf_rows(IntMat m) {
  if (m.empty()) return m;
  const size_t ncols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < m.size(); ++c) {
    // Euclid within the column: keep combining until one nonzero entry
    // remains at or below row r.
    while (true) {
      size_t best = m.size();
      for (size_t i = r; i < m.size(); ++i) {
        if (m[i][c] != 0 && (best == m.size() || abs(m[i][c]) < abs(m[best][c])))
          best = i;
      }
      if (best == m.size()) break;  // column is all zero below r
      std::swap(m[r], m[best]);
      bool done = true;
      for (size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        for (size_t j = 0; j < ncols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0) {
      for (size_t j = 0; j < ncols; ++j) m[r][j] = -m[r][j];
    }
    for (size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (q != 0) {
        for (size_t j = 0; j < ncols; ++j) m[i][j] -= q * m[r][j];
      }
    }
    ++r;
  }
  m.resize(r);
  return m;
}

mpz_class mat_det(IntMat a) {
  const size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("mat_det: not square");
  }
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = t / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace prat
