#pragma once

#include <cstddef>
#include <vector>

#include "polyrep/exactlin/lattice.hpp"
#include "polyrep/report.hpp"
#include "polyrep/series.hpp"
#include "polyrep/wreath/char_table.hpp"
#include "polyrep/wreath/wreath_element.hpp"

namespace polyrep {

/// Z-basis of the virtual characters of G vanishing on p-singular classes,
/// completed to a unimodular N x N matrix.
///
/// Row k is phi_k in irreducible-character coordinates, so phi(k, j) is the
/// multiplicity of chi_j in phi_k. Rows 0..regular_rank-1 span the lattice.
struct ELatticeBasis {
  int prime = 0;
  std::size_t regular_rank = 0;
  IntMatrix phi;
};

/// Rows: p-singular classes; columns: irreducibles; entry chi_j(C).
Matrix<Cyclotomic> vanishing_constraints(const CharTable& table, int p);

/// HNF kernel basis followed by a Smith-form completion.
ELatticeBasis e_lattice(const CharTable& table, int p);

/// Wraps a caller-chosen basis after checking that it is unimodular and that
/// its first M rows span the same lattice as e_lattice's. Throws
/// std::invalid_argument otherwise.
ELatticeBasis make_e_lattice(const CharTable& table, int p, IntMatrix phi);

/// Phi_j(c_n) = sum_C chi_j(C) |C|/|G| xi_{n,C}, in the xi-basis.
WreathElement phi_power_sum(const CharTable& table, std::size_t j, int n);

/// The ring morphism from the Phi-monomial basis to the xi-basis, with the
/// images of the generators Phi_j(x_i), i <= max_degree, precomputed as the
/// coefficients of exp(sum_m Phi_j(c_m) / m t^m).
class PhiToXi {
 public:
  PhiToXi(const CharTable& table, int max_degree);

  int max_degree() const { return max_degree_; }
  const WreathElement& generator_image(std::size_t j, int i) const { return images_.at(j).at(i); }
  WreathElement monomial_image(const MultiPartition& phi_index) const;
  WreathElement operator()(const WreathElement& phi_element) const;

 private:
  std::size_t classes_;
  int max_degree_;
  std::vector<std::vector<WreathElement>> images_;  // [irreducible][degree]
};

WreathElement xi_from_phi(const WreathElement& phi_element, const CharTable& table);

/// sum_i Phi_j(x_i) t^i in the Phi-basis.
GradedSeries<WreathElement> phi_complete_series(const CharTable& table, std::size_t j, int order);

/// X_k(t), k 0-based. For k < M the product over all irreducibles j of
/// (sum_i Phi_j(x_i) t^i)^phi(k, j); for k >= M the linear combination
/// sum_i sum_j phi(k, j) Phi_j(x_i) t^i.
GradedSeries<WreathElement> xk_series(const CharTable& table, const ELatticeBasis& e, std::size_t k, int order);

/// Coefficients 0..order of quotient_y(X_k, p) for k < M.
std::vector<WreathElement> yk_generators(const CharTable& table, const ELatticeBasis& e, std::size_t k, int order);

/// A class multipartition is p-regular when only p-regular classes carry
/// nonempty partitions and every part is prime to p.
bool is_p_regular_class(const CharTable& table, const MultiPartition& xi_index, int p);

std::vector<MultiPartition> p_regular_wreath_classes(const CharTable& table, int n, int p);

/// Number of Phi-monomials (equivalently classes of G wr S_n) in degree n.
std::size_t wreath_basis_size(const CharTable& table, int n);

VerificationReport verify_theorem2(const CharTable& table, int p, int n);
VerificationReport verify_theorem2(const CharTable& table, const ELatticeBasis& e, int n);

/// For every degree i <= n: the Phi_j(x_i)-coefficients of X_{k,i} are
/// phi(k, j), phi is unimodular, and the X-monomials of degree i form a
/// Z-basis of the Phi-monomial lattice (square matrix with |det| = 1).
bool generator_exchange_check(const CharTable& table, const ELatticeBasis& e, int n);

/// For k < M: the xi-image of X_k equals exp(C_k) with
/// C_k = sum_i sum_{C p-regular} (sum_j |C|/|G| phi(k, j) chi_j(C)) xi_{i,C} / i t^i,
/// and the same coefficient vanishes for every p-singular C.
bool exp_identity_check(const CharTable& table, const ELatticeBasis& e, std::size_t k, int order);

}  // namespace polyrep
