#include "polyrep/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyrep {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int part : parts_) {
    if (!out.empty() && out.back().first == part) ++out.back().second;
    else out.emplace_back(part, 1);
  }
  return out;
}

Partition Partition::join(const Partition& other) const {
  std::vector<int> merged;
  merged.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), std::back_inserter(merged),
             std::greater<>());
  Partition out;
  out.parts_ = std::move(merged);
  out.size_ = size_ + other.size_;
  return out;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate(int n) {
  if (n < 0) throw std::invalid_argument("enumerate: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(n, n, prefix, out);
  return out;
}

bool is_p_regular(const Partition& lambda, int p) {
  return std::none_of(lambda.parts().begin(), lambda.parts().end(), [p](int part) { return part % p == 0; });
}

Integer z(const Partition& lambda) {
  Integer out = 1;
  for (auto [part, mult] : lambda.multiplicities()) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(mult));
    out *= power * factorial(static_cast<unsigned long>(mult));
  }
  return out;
}

MultiPartition::MultiPartition(std::vector<Partition> components) : components_(std::move(components)) {}

int MultiPartition::size() const {
  int total = 0;
  for (const auto& c : components_) total += c.size();
  return total;
}

MultiPartition MultiPartition::join(const MultiPartition& other) const {
  if (other.width() != width()) throw std::invalid_argument("MultiPartition::join: width mismatch");
  std::vector<Partition> out;
  out.reserve(width());
  for (std::size_t i = 0; i < width(); ++i) out.push_back(components_[i].join(other.components_[i]));
  return MultiPartition(std::move(out));
}

std::string MultiPartition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ",";
    out += components_[i].to_string();
  }
  return out + "]";
}

namespace {

std::vector<Partition> filtered_partitions(int n, const PartFilter& part_allowed) {
  std::vector<Partition> all = enumerate(n);
  if (!part_allowed) return all;
  std::erase_if(all, [&](const Partition& p) {
    return std::any_of(p.parts().begin(), p.parts().end(), [&](int part) { return !part_allowed(part); });
  });
  return all;
}

void distribute(std::size_t component, int remaining, std::vector<Partition>& current,
                const std::vector<std::vector<Partition>>& by_size, const ComponentFilter& component_allowed,
                std::vector<MultiPartition>& out) {
  const std::size_t k = current.size();
  if (component + 1 == k || remaining == 0) {
    if (remaining > 0 && component_allowed && !component_allowed(component)) return;
    for (const auto& p : by_size[remaining]) {
      current[component] = p;
      out.emplace_back(current);
    }
    current[component] = Partition();
    return;
  }
  const bool allowed = !component_allowed || component_allowed(component);
  for (int s = allowed ? remaining : 0; s >= 0; --s) {
    for (const auto& p : by_size[s]) {
      current[component] = p;
      distribute(component + 1, remaining - s, current, by_size, component_allowed, out);
    }
  }
  current[component] = Partition();
}

}  // namespace

std::vector<MultiPartition> enumerate_multi(std::size_t k, int n, const ComponentFilter& component_allowed,
                                            const PartFilter& part_allowed) {
  if (n < 0) throw std::invalid_argument("enumerate_multi: n must be nonnegative");
  std::vector<MultiPartition> out;
  if (k == 0) {
    if (n == 0) out.emplace_back(0);
    return out;
  }
  std::vector<std::vector<Partition>> by_size;
  for (int s = 0; s <= n; ++s) by_size.push_back(filtered_partitions(s, part_allowed));
  std::vector<Partition> current(k);
  distribute(0, n, current, by_size, component_allowed, out);
  return out;
}

}  // namespace polyrep
