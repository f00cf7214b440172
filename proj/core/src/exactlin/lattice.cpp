#include "polyrep/exactlin/lattice.hpp"

#include <numeric>
#include <string>

namespace polyrep {

namespace {

Integer abs_value(const Integer& z) { return z < 0 ? Integer(-z) : z; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void row_addmul(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) += q * m(src, j);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

// Replaces rows (r, i) by a unimodular combination that clears m(i, col).
void gcd_combine_rows(IntMatrix& m, std::size_t r, std::size_t i, std::size_t col) {
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m(r, col).get_mpz_t(), m(i, col).get_mpz_t());
  const Integer u = m(r, col) / g;
  const Integer v = m(i, col) / g;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Integer a = m(r, j);
    const Integer b = m(i, j);
    m(r, j) = s * a + t * b;
    m(i, j) = u * b - v * a;
  }
}

}  // namespace

IntMatrix hnf(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    for (std::size_t i = r + 1; i < a.rows(); ++i)
      if (a(i, col) != 0) gcd_combine_rows(a, r, i, col);
    if (a(r, col) == 0) continue;
    if (a(r, col) < 0) negate_row(a, r);
    for (std::size_t i = 0; i < r; ++i) row_addmul(a, i, r, -floor_div(a(i, col), a(r, col)));
    ++r;
  }
  return a.row_block(0, r);
}

SmithForm snf(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);
  IntMatrix right_inv = IntMatrix::identity(cols);

  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& q) {
    row_addmul(a, dst, src, q);
    row_addmul(left, dst, src, q);
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    left.swap_rows(x, y);
  };
  // col_dst += q * col_src; the inverse gets row_src -= q * row_dst
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows; ++i) a(i, dst) += q * a(i, src);
    for (std::size_t i = 0; i < cols; ++i) right(i, dst) += q * right(i, src);
    row_addmul(right_inv, src, dst, -q);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    right.swap_cols(x, y);
    right_inv.swap_rows(x, y);
  };

  const std::size_t diag_len = std::min(rows, cols);
  std::vector<Integer> diagonal(diag_len);
  for (std::size_t t = 0; t < diag_len; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pi == rows || abs_value(a(i, j)) < abs_value(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    row_swap(t, pi);
    col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        row_op(i, t, -floor_div(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        col_op(j, t, -floor_div(a(t, j), a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && abs_value(a(i, t)) < abs_value(a(bi, bj))) { bi = i; bj = t; }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && abs_value(a(t, j)) < abs_value(a(bi, bj))) { bi = t; bj = j; }
        row_swap(t, bi);
        col_swap(t, bj);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            row_op(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(left, t);
    }
    diagonal[t] = a(t, t);
  }
  return SmithForm{std::move(diagonal), std::move(left), std::move(right), std::move(right_inv)};
}

IntMatrix saturate(const IntMatrix& m) {
  if (m.rows() == 0) return IntMatrix::with_cols(m.cols());
  const SmithForm s = snf(m);
  std::size_t k = 0;
  while (k < s.diagonal.size() && s.diagonal[k] != 0) ++k;
  return hnf(s.right_inverse.row_block(0, k));
}

IntMatrix rational_kernel(const RatMatrix& m) {
  const std::size_t cols = m.cols();
  RatMatrix a = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < a.rows(); ++col) {
    std::size_t p = r;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    const Rational inv = 1 / a(r, col);
    for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < cols; ++j)
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(col);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  IntMatrix basis = IntMatrix::with_cols(cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a(i, f);
    Integer den = 1;
    for (const auto& q : v) den = lcm(den, Integer(q.get_den()));
    std::vector<Integer> w(cols);
    for (std::size_t j = 0; j < cols; ++j) w[j] = Integer(v[j] * den);
    basis.append_row(w);
  }
  return saturate(basis);
}

RatMatrix expand_cyclotomic_rows(const Matrix<Cyclotomic>& m) {
  int conductor = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) conductor = std::lcm(conductor, m(i, j).conductor());
  const std::size_t width = static_cast<std::size_t>(euler_phi(conductor));
  RatMatrix out(m.rows() * width, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto coeffs = m(i, j).coefficients_in(conductor);
      for (std::size_t k = 0; k < width; ++k) out(i * width + k, j) = coeffs[k];
    }
  return out;
}

IntMatrix rational_kernel(const Matrix<Cyclotomic>& m) { return rational_kernel(expand_cyclotomic_rows(m)); }

IntMatrix unimodular_complete(const IntMatrix& basis) {
  const std::size_t n = basis.cols();
  if (basis.rows() > n) throw std::invalid_argument("unimodular_complete: more rows than columns");
  const SmithForm s = snf(basis);
  for (std::size_t i = 0; i < s.diagonal.size(); ++i)
    if (s.diagonal[i] != 1)
      throw NotSaturatedError("unimodular_complete: invariant factor " + std::to_string(i + 1) + " is " +
                              s.diagonal[i].get_str() + ", rows do not span a saturated direct summand");
  IntMatrix out = basis;
  for (std::size_t i = basis.rows(); i < n; ++i) out.append_row(s.right_inverse.row(i));
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) { return hnf(m).rows(); }

bool in_row_lattice(const IntMatrix& hnf_rows, std::span<const Integer> v) {
  if (v.size() != hnf_rows.cols()) throw std::invalid_argument("in_row_lattice: width mismatch");
  std::vector<Integer> w(v.begin(), v.end());
  for (std::size_t i = 0; i < hnf_rows.rows(); ++i) {
    std::size_t p = 0;
    while (p < w.size() && hnf_rows(i, p) == 0) ++p;
    if (p == w.size()) continue;
    if (w[p] % hnf_rows(i, p) != 0) return false;
    const Integer q = w[p] / hnf_rows(i, p);
    if (q == 0) continue;
    for (std::size_t j = p; j < w.size(); ++j) w[j] -= q * hnf_rows(i, j);
  }
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

}  // namespace polyrep
