#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polyrep/exactlin/cyclotomic.hpp"

namespace polyrep {

/// A character table failed to parse or violates a table invariant; the
/// message names the violated invariant.
class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConjugacyClass {
  std::string label;
  Integer size;
  int element_order = 1;
};

struct IrreducibleCharacter {
  std::string label;
  std::vector<Cyclotomic> values;  // one per class, in class order
};

/// Ordinary character table of a finite group over Q(zeta_conductor).
struct CharTable {
  std::string name;
  Integer order;
  int conductor = 1;
  std::vector<ConjugacyClass> classes;
  std::vector<IrreducibleCharacter> irreducibles;

  std::size_t class_count() const { return classes.size(); }

  /// Throws TableError naming the first violated invariant: class sizes sum
  /// to the order, the table is square, the first class is the identity,
  /// values are algebraic integers in Q(zeta_conductor), and the rows are
  /// orthogonal with sum_C |C| chi_i(C) conj(chi_j(C)) = |G| delta_ij.
  void validate() const;
};

/// Parses the JSON table format:
///   { "name", "order", "conductor",
///     "classes": [{"label", "size", "element_order"}...],
///     "irreducibles": [{"label", "values": [cyclo...]}...] }
/// where cyclo is an integer or a list of `conductor` integers a_i meaning
/// sum a_i zeta^i. The result is validated.
CharTable parse_table(std::string_view json_text);
CharTable load_table(const std::filesystem::path& path);

/// Indices of classes whose element order is prime to p.
std::vector<std::size_t> p_regular_classes(const CharTable& table, int p);

/// The trivial group's table.
CharTable trivial_table();

}  // namespace polyrep
