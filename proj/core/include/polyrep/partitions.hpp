#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "polyrep/exactlin/rational.hpp"

namespace polyrep {

bool is_prime(long n);

/// Integer partition stored as a weakly decreasing list of positive parts.
///
/// Ordering is lexicographic on the part lists, which is the order used for
/// every basis and class index in this library.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts the parts first; zeros are discarded.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// (part value, multiplicity) pairs, largest part first.
  std::vector<std::pair<int, int>> multiplicities() const;

  /// Multiset union of parts.
  Partition join(const Partition& other) const;

  auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }
  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

  /// "[3,1,1]"; the empty partition renders as "[]".
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in decreasing lexicographic order, (n) first.
std::vector<Partition> enumerate(int n);

/// No part is divisible by p.
bool is_p_regular(const Partition& lambda, int p);

/// prod_i i^{m_i} m_i!, the centralizer order of the class of cycle type lambda.
Integer z(const Partition& lambda);

/// Fixed-length tuple of partitions indexed by an external set.
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::size_t width) : components_(width) {}
  explicit MultiPartition(std::vector<Partition> components);

  std::size_t width() const { return components_.size(); }
  int size() const;
  const Partition& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Partition>& components() const { return components_; }

  /// Componentwise join; widths must match.
  MultiPartition join(const MultiPartition& other) const;

  auto operator<=>(const MultiPartition& other) const = default;
  bool operator==(const MultiPartition& other) const = default;

  /// "[[2],[]]".
  std::string to_string() const;

 private:
  std::vector<Partition> components_;
};

using ComponentFilter = std::function<bool(std::size_t component)>;
using PartFilter = std::function<bool(int part)>;

/// All multipartitions of total size n over k components such that only
/// components accepted by `component_allowed` are nonempty and every part is
/// accepted by `part_allowed`.
///
/// Order: size vectors in decreasing lexicographic order, then each
/// component's partition in decreasing lexicographic order, first component
/// varying slowest.
std::vector<MultiPartition> enumerate_multi(std::size_t k, int n, const ComponentFilter& component_allowed = {},
                                            const PartFilter& part_allowed = {});

}  // namespace polyrep
