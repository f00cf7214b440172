#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "polyrep/exactlin/rational.hpp"
#include "polyrep/partitions.hpp"

namespace polyrep {

/// X: monomials x_lambda = x_{lambda_1} ... x_{lambda_k} in the trivial-representation
/// classes (complete homogeneous h_n). C: monomials c_lambda in c_n = n * 1_{n-cycle}
/// (power sums p_n).
enum class SymBasis { X, C };

/// Homogeneous element of Lambda (x) Q in one of the two monomial bases.
class SymElement {
 public:
  SymElement(SymBasis basis, int degree) : basis_(basis), degree_(degree) {}

  static SymElement monomial(SymBasis basis, const Partition& index, const Rational& coeff = 1);
  static SymElement one(SymBasis basis) { return monomial(basis, Partition()); }
  /// x_n or c_n.
  static SymElement generator(SymBasis basis, int n) { return monomial(basis, Partition{n}); }

  SymBasis basis() const { return basis_; }
  int degree() const { return degree_; }
  const std::map<Partition, Rational>& terms() const { return terms_; }
  Rational coeff(const Partition& index) const;
  bool is_zero() const { return terms_.empty(); }
  /// Every coefficient is an integer.
  bool is_integral() const;

  /// Adds coeff * monomial(index); index must have size degree().
  void add_term(const Partition& index, const Rational& coeff);

  SymElement zero_of_degree(int degree) const { return SymElement(basis_, degree); }

  SymElement& operator+=(const SymElement& other);
  SymElement& operator-=(const SymElement& other);
  SymElement& operator*=(const Rational& q);

  friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
  friend SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
  friend SymElement operator-(SymElement a) { return a *= Rational(-1); }
  friend SymElement operator*(SymElement a, const Rational& q) { return a *= q; }
  friend SymElement operator*(const Rational& q, SymElement a) { return a *= q; }
  friend SymElement operator*(const SymElement& a, const SymElement& b);

  bool operator==(const SymElement& other) const = default;

 private:
  SymBasis basis_;
  int degree_;
  std::map<Partition, Rational> terms_;
};

/// Monomials multiply by multiset union of their index partitions.
SymElement multiply(const SymElement& a, const SymElement& b);

/// x_n = sum_{lambda |- n} c_lambda / z_lambda, extended multiplicatively.
SymElement x_to_c(const SymElement& a);
/// Inverse of x_to_c, via c_n = n x_n - sum_{i<n} c_i x_{n-i}.
SymElement c_to_x(const SymElement& a);

/// A class function of S_n with rational values, one per cycle type.
class ClassValues {
 public:
  explicit ClassValues(int degree);
  int degree() const { return degree_; }
  const Rational& at(const Partition& cls) const { return values_.at(cls); }
  void set(const Partition& cls, const Rational& value) { values_.at(cls) = value; }
  /// Classes in increasing lexicographic order, (1^n) first.
  const std::map<Partition, Rational>& values() const { return values_; }
  bool operator==(const ClassValues& other) const = default;

 private:
  int degree_;
  std::map<Partition, Rational> values_;
};

/// Character of a virtual representation: the value on class mu is z_mu times
/// the c_mu coefficient.
ClassValues class_values(const SymElement& a);

/// sum_mu a(mu) conj(b(mu)) / z_mu.
Rational inner_product(const ClassValues& a, const ClassValues& b);

/// Number of ways to distribute the cycles of type mu (as labelled cycles)
/// over blocks of sizes lambda_1, lambda_2, ... with matching total length:
/// the permutation character on S_n / S_lambda evaluated at mu.
Integer perm_char_value(const Partition& lambda, const Partition& mu);

/// Irreducible character chi_lambda(mu) via the Murnaghan-Nakayama rule.
Integer mn_character(const Partition& lambda, const Partition& mu);

ClassValues mn_class_values(const Partition& lambda);

/// Schur function s_lambda = det(x_{lambda_i - i + j}) in the x-basis.
SymElement schur_in_x(const Partition& lambda);

struct RenderOptions {
  /// Generator letter, "x" or "c" by default depending on the basis.
  std::optional<std::string> symbol;
  /// When set, each monomial lists its p-regular indices first and terms are
  /// ordered by (regular part, singular part), both decreasing.
  std::optional<int> prime;
};

/// Exact textual form, e.g. "x_7 - x_5x_2 + 2x_1x_4x_2 - 1/2x_1^3".
std::string to_string(const SymElement& a, const RenderOptions& options = {});

/// Parses the to_string grammar: signed terms of an optional rational
/// coefficient followed by factors sym_<n>[^<e>]. Accepts '*' between
/// coefficient and factors and the unicode minus sign. Throws
/// std::invalid_argument on malformed input or inhomogeneous terms.
SymElement parse_sym(std::string_view text, SymBasis basis = SymBasis::X);

}  // namespace polyrep
