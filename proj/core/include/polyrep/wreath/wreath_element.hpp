#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyrep/exactlin/cyclotomic.hpp"
#include "polyrep/partitions.hpp"

namespace polyrep {

struct CharTable;

/// Xi: monomials prod_C prod_i xi_{i,C} indexed by multipartitions over the
/// classes of G. Phi: monomials prod_j Phi_j(x_lambda^(j)) indexed by
/// multipartitions over the irreducibles of G.
enum class WreathBasis { Xi, Phi };

/// Homogeneous element of the class-function algebra of G wr S_n, degree n,
/// in either free polynomial basis.
class WreathElement {
 public:
  WreathElement(WreathBasis basis, std::size_t width, int degree) : basis_(basis), width_(width), degree_(degree) {}

  static WreathElement one(WreathBasis basis, std::size_t width);
  static WreathElement monomial(WreathBasis basis, const MultiPartition& index, const Cyclotomic& coeff = 1);
  /// xi_{n, component} or Phi_component(x_n).
  static WreathElement generator(WreathBasis basis, std::size_t width, std::size_t component, int n,
                                 const Cyclotomic& coeff = 1);

  WreathBasis basis() const { return basis_; }
  std::size_t width() const { return width_; }
  int degree() const { return degree_; }
  const std::map<MultiPartition, Cyclotomic>& terms() const { return terms_; }
  Cyclotomic coeff(const MultiPartition& index) const;
  bool is_zero() const { return terms_.empty(); }
  /// Every coefficient is a rational integer.
  bool is_integral() const;

  void add_term(const MultiPartition& index, const Cyclotomic& coeff);
  WreathElement zero_of_degree(int degree) const { return WreathElement(basis_, width_, degree); }

  WreathElement& operator+=(const WreathElement& other);
  WreathElement& operator-=(const WreathElement& other);
  WreathElement& operator*=(const Cyclotomic& c);

  friend WreathElement operator+(WreathElement a, const WreathElement& b) { return a += b; }
  friend WreathElement operator-(WreathElement a, const WreathElement& b) { return a -= b; }
  friend WreathElement operator-(WreathElement a) { return a *= Cyclotomic(-1); }
  friend WreathElement operator*(WreathElement a, const Cyclotomic& c) { return a *= c; }
  friend WreathElement operator*(WreathElement a, const Rational& q) { return a *= Cyclotomic(q); }
  friend WreathElement operator*(const WreathElement& a, const WreathElement& b);

  bool operator==(const WreathElement& other) const;

 private:
  WreathBasis basis_;
  std::size_t width_;
  int degree_;
  std::map<MultiPartition, Cyclotomic> terms_;
};

/// Renders Phi monomials as Phi[label](x_i) and Xi monomials as xi_i[label],
/// using the table's labels when given and 1-based indices otherwise.
std::string to_string(const WreathElement& a, const CharTable* table = nullptr);

}  // namespace polyrep
