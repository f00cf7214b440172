#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "polyrep/exactlin/rational.hpp"
#include "polyrep/symfunc.hpp"

namespace polyrep {

/// How a coefficient type exposes zeros of a given degree.
template <class T>
struct GradedRingTraits {
  static T zero_like(const T& unit, int degree) { return unit.zero_of_degree(degree); }
  static bool is_zero(const T& a) { return a.is_zero(); }
};

template <>
struct GradedRingTraits<Rational> {
  static Rational zero_like(const Rational&, int) { return 0; }
  static bool is_zero(const Rational& a) { return a == 0; }
};

/// Truncated power series sum_{i=0}^{order} a_i t^i whose coefficient a_i is
/// homogeneous of degree i in a graded commutative algebra. Every operation
/// returns a series of the same truncation order as its inputs.
template <class T>
class GradedSeries {
 public:
  using Traits = GradedRingTraits<T>;

  /// Zero series; `unit` is the ring identity and fixes the coefficient ring.
  GradedSeries(int order, T unit) : unit_(std::move(unit)) {
    if (order < 0) throw std::invalid_argument("GradedSeries: negative truncation order");
    coeffs_.reserve(order + 1);
    for (int i = 0; i <= order; ++i) coeffs_.push_back(Traits::zero_like(unit_, i));
  }

  static GradedSeries one(int order, T unit) {
    GradedSeries s(order, unit);
    s.coeffs_[0] = s.unit_;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const T& unit() const { return unit_; }
  const T& operator[](int i) const { return coeffs_.at(i); }
  const std::vector<T>& coefficients() const { return coeffs_; }

  void set(int i, T value) { coeffs_.at(i) = std::move(value); }
  T zero(int degree) const { return Traits::zero_like(unit_, degree); }

  GradedSeries& operator+=(const GradedSeries& other) {
    check_order(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }
  GradedSeries& operator-=(const GradedSeries& other) {
    check_order(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
  }
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }

  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    a.check_order(b);
    GradedSeries out(a.order(), a.unit_);
    for (int i = 0; i <= a.order(); ++i) {
      if (Traits::is_zero(a.coeffs_[i])) continue;
      for (int j = 0; i + j <= a.order(); ++j) {
        if (Traits::is_zero(b.coeffs_[j])) continue;
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  bool operator==(const GradedSeries& other) const { return coeffs_ == other.coeffs_; }

 private:
  void check_order(const GradedSeries& other) const {
    if (other.order() != order()) throw std::invalid_argument("GradedSeries: truncation orders differ");
  }

  T unit_;
  std::vector<T> coeffs_;
};

/// exp(c) = sum_k c^k / k!, computed through n e_n = sum_{k=1}^n k c_k e_{n-k}.
/// Requires a zero constant term.
template <class T>
GradedSeries<T> exp(const GradedSeries<T>& c) {
  using Traits = GradedRingTraits<T>;
  if (!Traits::is_zero(c[0])) throw std::invalid_argument("exp: constant term must be zero");
  auto out = GradedSeries<T>::one(c.order(), c.unit());
  for (int n = 1; n <= c.order(); ++n) {
    T acc = c.zero(n);
    for (int k = 1; k <= n; ++k) {
      if (Traits::is_zero(c[k]) || Traits::is_zero(out[n - k])) continue;
      acc += T(c[k] * out[n - k]) * Rational(k);
    }
    out.set(n, T(acc * Rational(1, n)));
  }
  return out;
}

/// Multiplicative inverse of a series whose constant term is the ring unit:
/// v_0 = 1, v_n = -sum_{k=1}^n x_k v_{n-k}. Integral over any coefficient ring.
template <class T>
GradedSeries<T> inverse(const GradedSeries<T>& x) {
  using Traits = GradedRingTraits<T>;
  if (!(x[0] == x.unit())) throw std::invalid_argument("inverse: constant term must be the unit");
  auto out = GradedSeries<T>::one(x.order(), x.unit());
  for (int n = 1; n <= x.order(); ++n) {
    T acc = x.zero(n);
    for (int k = 1; k <= n; ++k) {
      if (Traits::is_zero(x[k]) || Traits::is_zero(out[n - k])) continue;
      acc -= x[k] * out[n - k];
    }
    out.set(n, std::move(acc));
  }
  return out;
}

/// x^e for any integer e; negative exponents go through inverse().
template <class T>
GradedSeries<T> int_power(const GradedSeries<T>& x, long e) {
  if (!(x[0] == x.unit())) throw std::invalid_argument("int_power: constant term must be the unit");
  GradedSeries<T> base = e < 0 ? inverse(x) : x;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  auto result = GradedSeries<T>::one(x.order(), x.unit());
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

template <class T>
struct SeriesSplit {
  /// Indices divisible by p, index 0 included.
  GradedSeries<T> singular;
  /// Indices prime to p.
  GradedSeries<T> regular;
};

template <class T>
SeriesSplit<T> p_split(const GradedSeries<T>& x, int p) {
  if (p < 2) throw std::invalid_argument("p_split: p must be at least 2");
  SeriesSplit<T> out{GradedSeries<T>(x.order(), x.unit()), GradedSeries<T>(x.order(), x.unit())};
  for (int i = 0; i <= x.order(); ++i) {
    if (i % p == 0) out.singular.set(i, x[i]);
    else out.regular.set(i, x[i]);
  }
  return out;
}

/// Y = V / U for the regular part V and singular part U of x. The constant
/// term of x must be the unit. Coefficients at multiples of p vanish.
template <class T>
GradedSeries<T> quotient_y(const GradedSeries<T>& x, int p) {
  if (!(x[0] == x.unit())) throw std::invalid_argument("quotient_y: constant term must be the unit");
  auto split = p_split(x, p);
  return split.regular * inverse(split.singular);
}

/// sum_{n=0}^{order} x_n t^n over Lambda in the x-basis, x_0 = 1.
GradedSeries<SymElement> complete_series(int order);

/// sum_{n>=1} c_n / n t^n over Lambda in the c-basis, whose exp is complete_series.
GradedSeries<SymElement> power_sum_log_series(int order);

/// y_n = sum over compositions (l_0, l_1, ..., l_k) of n with p not dividing
/// l_0 and p dividing l_1..l_k of (-1)^k x_{l_0} ... x_{l_k}. Zero when p | n.
SymElement y_explicit(int n, int p);

/// The y_n of quotient_y(complete_series(order), p), index 0..order.
std::vector<SymElement> y_series_generators(int order, int p);

}  // namespace polyrep
