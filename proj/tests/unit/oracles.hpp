#pragma once

// Test-side reference computations, written without the library's lattice code.

#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "polyrep/exactlin/matrix.hpp"
#include "polyrep/exactlin/rational.hpp"

namespace oracle {

using polyrep::Integer;
using polyrep::IntMatrix;
using polyrep::Rational;
using polyrep::RatMatrix;

// All v in [-bound, bound]^cols with m v = 0, v != 0.
inline std::vector<std::vector<Integer>> small_solutions(const IntMatrix& m, int bound) {
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> v(m.cols(), -bound);
  while (true) {
    bool zero = true, ok = true;
    for (const auto& x : v) zero = zero && x == 0;
    for (std::size_t i = 0; i < m.rows() && ok; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
      ok = s == 0;
    }
    if (ok && !zero) out.push_back(v);
    std::size_t j = 0;
    while (j < v.size() && v[j] == bound) v[j++] = -bound;
    if (j == v.size()) break;
    ++v[j];
  }
  return out;
}

// Laplace expansion; fine for the tiny matrices used here.
inline Integer laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    total += (j % 2 ? -1 : 1) * m(0, j) * laplace_det(minor);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Invariant factors d_k = D_k / D_{k-1}, D_k the gcd of k x k minors.
inline std::vector<Integer> invariant_factors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  const std::size_t r = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= r; ++k) {
    Integer g = 0;
    subsets(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      subsets(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        Integer d = laplace_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(prev == 0 ? Integer(0) : Integer(g / prev));
    prev = g;
  }
  return out;
}

// Solves v = x A for square nonsingular A by Gauss-Jordan over Q.
inline std::optional<std::vector<Rational>> solve_left(const IntMatrix& a, const std::vector<Integer>& v) {
  const std::size_t n = a.rows();
  // Work on A^T x^T = v^T.
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(j, i);
    aug(i, n) = v[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    aug.swap_rows(p, c);
    const Rational inv = 1 / aug(c, c);
    for (std::size_t j = 0; j <= n; ++j) aug(c, j) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug(r, c) == 0) continue;
      const Rational f = aug(r, c);
      for (std::size_t j = 0; j <= n; ++j) aug(r, j) -= f * aug(c, j);
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

// Row lattice of `a` (square, nonsingular) contains v iff the coordinates are integral.
inline bool in_lattice(const IntMatrix& a, const std::vector<Integer>& v) {
  auto x = solve_left(a, v);
  if (!x) return false;
  for (const auto& q : *x)
    if (q.get_den() != 1) return false;
  return true;
}

}  // namespace oracle
