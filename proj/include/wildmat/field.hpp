// Copyright 2026 The Authors.
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

#ifndef WILDMAT_FIELD_HPP
#define WILDMAT_FIELD_HPP

#include <gmpxx.h>

#include <concepts>
#include <stdexcept>
#include <string>
#include <vector>

#include "wildmat/config.hpp"

namespace wildmat {

// Exact arbitrary-precision rationals. No floating point anywhere.
using Rational = mpq_class;

template <typename F>
concept Field = requires(F a, F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  F(0);
  F(1);
};

template <Field F>
F field_from_long(long v) {
  return F(static_cast<int>(v));
}

template <>
inline Rational field_from_long<Rational>(long v) {
  return Rational(v);
}

inline Rational rational_from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw InputError("bad rational: " + s);
  q.canonicalize();
  return q;
}

// Canonical "num/den" form, denominator always written and positive.
inline std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Prime field GF(P), P a small prime. Used for the cross-field property
// tests; the default field everywhere else is Rational.
template <int P>
struct GF {
  static_assert(P >= 2);
  int v = 0;

  GF() = default;
  GF(int x) : v(((x % P) + P) % P) {}  // NOLINT: implicit by design

  friend GF operator+(GF a, GF b) { return GF(a.v + b.v); }
  friend GF operator-(GF a, GF b) { return GF(a.v - b.v); }
  friend GF operator-(GF a) { return GF(-a.v); }
  friend GF operator*(GF a, GF b) { return GF(a.v * b.v); }
  friend bool operator==(GF a, GF b) { return a.v == b.v; }
  friend bool operator!=(GF a, GF b) { return a.v != b.v; }

  GF inverse() const {
    if (v == 0) throw std::domain_error("division by zero in GF");
    // P is tiny; scan.
    for (int x = 1; x < P; ++x)
      if ((x * v) % P == 1) return GF(x);
    throw std::domain_error("GF inverse: P not prime?");
  }
  friend GF operator/(GF a, GF b) { return a * b.inverse(); }
};

template <int P>
bool is_zero(GF<P> a) {
  return a.v == 0;
}

inline Rational field_div(const Rational& a, const Rational& b) {
  if (is_zero(b)) throw std::domain_error("division by zero");
  return a / b;
}

template <int P>
GF<P> field_div(GF<P> a, GF<P> b) {
  return a / b;
}

// Rank of a column-subset of an exact matrix, by Gaussian elimination.
// Rows indexed [0, m), columns given explicitly.
template <Field F>
int matrix_rank(const std::vector<std::vector<F>>& cols, int m) {
  std::vector<std::vector<F>> work = cols;
  int rank = 0;
  std::vector<bool> rowUsed(m, false);
  for (auto& col : work) {
    int pivot = -1;
    for (int r = 0; r < m; ++r) {
      if (!rowUsed[r] && !(col[r] == F(0))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    rowUsed[pivot] = true;
    ++rank;
    for (auto& other : work) {
      if (&other == &col) continue;
      if (!(other[pivot] == F(0))) {
        F factor = field_div(other[pivot], col[pivot]);
        for (int r = 0; r < m; ++r) other[r] = other[r] - factor * col[r];
      }
    }
  }
  return rank;
}

// Exact integer rank via fraction-free (Bareiss) elimination. For the
// small signed-incidence matrices used here, int64 never overflows
// (entries are 0/±1, minors are bounded by Hadamard on 8x8).
inline int matrix_rank_int(std::vector<std::vector<long long>> cols, int m) {
  int rank = 0;
  long long prev = 1;
  std::size_t nc = cols.size();
  int row = 0;
  for (std::size_t c = 0; c < nc && row < m; ++c) {
    int pivot = -1;
    for (int r = row; r < m; ++r)
      if (cols[c][r] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (std::size_t cc = 0; cc < nc; ++cc) std::swap(cols[cc][row], cols[cc][pivot]);
    for (int r = row + 1; r < m; ++r) {
      for (std::size_t cc = c + 1; cc < nc; ++cc)
        cols[cc][r] =
            (cols[c][row] * cols[cc][r] - cols[c][r] * cols[cc][row]) / prev;
      cols[c][r] = 0;
    }
    prev = cols[c][row];
    ++rank;
    ++row;
  }
  return rank;
}

}  // namespace wildmat

#endif  // WILDMAT_FIELD_HPP
