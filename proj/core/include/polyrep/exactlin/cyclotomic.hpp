#pragma once

#include <span>
#include <string>
#include <vector>

#include "polyrep/exactlin/rational.hpp"

namespace polyrep {

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(int m);

/// Euler's totient, i.e. the degree of Q(zeta_m) over Q.
int euler_phi(int m);

/// Exact element of Q(zeta_m).
///
/// Stored in the power basis 1, zeta, ..., zeta^(phi(m)-1) after reduction
/// modulo the m-th cyclotomic polynomial, so two values with the same
/// conductor are equal iff their coefficient vectors are. Binary operations
/// work over the lcm of the operand conductors.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(const Rational& q);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}   // NOLINT(google-explicit-constructor)
  Cyclotomic(const Integer& z) : Cyclotomic(Rational(z)) {}  // NOLINT(google-explicit-constructor)

  /// sum_i coeffs[i] * zeta_m^i; exponents are taken mod m, any length is accepted.
  static Cyclotomic from_power_basis(int conductor, std::span<const Rational> coeffs);
  static Cyclotomic zeta(int conductor, int power = 1);

  int conductor() const { return conductor_; }
  /// Reduced coefficients, length phi(conductor).
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Reduced coefficients after embedding into Q(zeta_m); conductor() must divide m.
  std::vector<Rational> coefficients_in(int m) const;
  Cyclotomic lifted(int m) const;

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error when the value is irrational.
  Rational rational_value() const;
  /// All reduced power-basis coefficients are integers (Z[zeta_m] has this integral basis).
  bool is_algebraic_integer() const;

  /// Complex conjugation, zeta -> zeta^(m-1).
  Cyclotomic conj() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& q);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
  friend Cyclotomic operator-(Cyclotomic a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// "3", "1/2", or "1 + 2*z3^1" style with z<m> standing for zeta_m.
  std::string to_string() const;

 private:
  Cyclotomic(int conductor, std::vector<Rational> reduced)
      : conductor_(conductor), coeffs_(std::move(reduced)) {}

  int conductor_ = 1;
  std::vector<Rational> coeffs_;
};

}  // namespace polyrep
