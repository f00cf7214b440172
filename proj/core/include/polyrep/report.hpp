#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "polyrep/exactlin/matrix.hpp"

namespace polyrep {

/// Outcome of one per-degree lattice-equality check.
///
/// `verdict` is true iff the HNF of the generator monomials equals the HNF
/// of the lattice basis. The other flags are independent cross-checks.
struct VerificationReport {
  std::string subject;  // "S" or the group name for wreath products
  int degree = 0;
  int prime = 0;
  std::size_t lattice_rank = 0;
  std::size_t expected_rank = 0;  // number of p-regular classes
  std::size_t generator_count = 0;
  IntMatrix generator_hnf;
  IntMatrix lattice_hnf;
  bool vanishing_ok = false;  // each generator monomial vanishes on p-singular classes
  bool verdict = false;
  double seconds = 0.0;

  bool rank_ok() const { return lattice_rank == expected_rank && generator_count == expected_rank; }
  bool passed() const { return verdict && vanishing_ok && rank_ok(); }

  bool operator==(const VerificationReport& other) const = default;
};

/// FNV-1a over the canonical text of the matrix, as 16 hex digits.
std::string digest(const IntMatrix& m);

/// Stable JSON object; integers beyond 64 bits are written as strings.
std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(std::string_view json);

}  // namespace polyrep
