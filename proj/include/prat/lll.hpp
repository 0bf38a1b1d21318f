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

#ifndef PRAT_LLL_HPP
#define PRAT_LLL_HPP

#include <vector>
#include <gmpxx.h>

namespace prat {

// Row basis of an integer lattice; rows are basis vectors.
using IntMat = std::vector<std::vector<mpz_class>>;

// Exact-arithmetic LLL reduction (delta = 99/100) of a full row basis.
// Quadratic form defaults to the identity; pass `gram` to reduce with respect
// to a positive-definite symmetric form G (lengths v G v^T).
IntMat lll_reduce(IntMat basis, const IntMat* gram = nullptr);

// Row Hermite normal form (lower-triangular convention: pivot columns
// increase with the row index, pivots positive, entries above a pivot
// reduced to [0, pivot)). Zero rows are dropped.
IntMat hnf_rows(IntMat rows);

// Determinant of a square integer matrix (fraction-free Gaussian elimination).
mpz_class mat_det(IntMat m);

}  // namespace prat

#endif  // PRAT_LLL_HPP
