#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "polyrep/exactlin/cyclotomic.hpp"
#include "polyrep/exactlin/matrix.hpp"

namespace polyrep {

/// Thrown when a row set cannot be completed to a unimodular basis.
class NotSaturatedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Row-style Hermite normal form of the row lattice of `m`.
///
/// Upper echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped, so the result has rank(m) rows and
/// two matrices span the same Z-lattice iff their HNFs compare equal.
IntMatrix hnf(const IntMatrix& m);

struct SmithForm {
  /// min(rows, cols) invariant factors, d_i | d_{i+1}, trailing zeros for rank deficiency.
  std::vector<Integer> diagonal;
  /// Unimodular, left * m * right = diag(diagonal).
  IntMatrix left;
  IntMatrix right;
  /// Inverse of `right`.
  IntMatrix right_inverse;
};

SmithForm snf(const IntMatrix& m);

/// Z-basis (as HNF rows) of the saturated lattice {v in Z^cols : m v = 0}.
IntMatrix rational_kernel(const RatMatrix& m);

/// Cyclotomic constraint rows are expanded into phi(L) rational rows each,
/// L being the lcm of all entry conductors, before solving.
IntMatrix rational_kernel(const Matrix<Cyclotomic>& m);

RatMatrix expand_cyclotomic_rows(const Matrix<Cyclotomic>& m);

/// Z^cols intersected with the rational row span of `m`, as HNF rows.
IntMatrix saturate(const IntMatrix& m);

/// Extends an M x N row set (M <= N) to an N x N unimodular matrix whose
/// first M rows are the input. Throws NotSaturatedError when some invariant
/// factor differs from 1.
IntMatrix unimodular_complete(const IntMatrix& basis);

/// Exact determinant via fraction-free elimination.
Integer determinant(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Membership of `v` in the row lattice of `hnf_rows`, which must be in HNF.
bool in_row_lattice(const IntMatrix& hnf_rows, std::span<const Integer> v);

}  // namespace polyrep
