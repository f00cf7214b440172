#include "polyrep/exactlin/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace polyrep {

namespace {

std::vector<Integer> poly_divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  std::vector<Integer> quot(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    Integer c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
  return quot;
}

std::vector<Rational> reduce(int m, std::vector<Rational> coeffs) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = coeffs.size(); i-- > d;) {
    if (coeffs[i] == 0) continue;
    const Rational c = coeffs[i];
    for (std::size_t j = 0; j <= d; ++j) coeffs[i - d + j] -= c * phi[j];
  }
  coeffs.resize(d);
  return coeffs;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: conductor must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<Integer>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  // x^m - 1 divided by Phi_d for every proper divisor d
  std::vector<Integer> poly(m + 1);
  poly[0] = -1;
  poly[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) poly = poly_divide_exact(std::move(poly), cyclotomic_polynomial(d));
  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(poly)).first->second;
}

int euler_phi(int m) { return static_cast<int>(cyclotomic_polynomial(m).size()) - 1; }

Cyclotomic::Cyclotomic(const Rational& q) : conductor_(1), coeffs_{q} {}

Cyclotomic Cyclotomic::from_power_basis(int conductor, std::span<const Rational> coeffs) {
  if (conductor < 1) throw std::invalid_argument("Cyclotomic: conductor must be positive");
  std::vector<Rational> folded(conductor);
  for (std::size_t i = 0; i < coeffs.size(); ++i) folded[i % conductor] += coeffs[i];
  return Cyclotomic(conductor, reduce(conductor, std::move(folded)));
}

Cyclotomic Cyclotomic::zeta(int conductor, int power) {
  if (conductor < 1) throw std::invalid_argument("Cyclotomic: conductor must be positive");
  std::vector<Rational> c(conductor);
  c[((power % conductor) + conductor) % conductor] = 1;
  return from_power_basis(conductor, c);
}

Cyclotomic Cyclotomic::lifted(int m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0) throw std::invalid_argument("Cyclotomic::lifted: conductor must divide target");
  const int step = m / conductor_;
  std::vector<Rational> c(m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
  return Cyclotomic(m, reduce(m, std::move(c)));
}

std::vector<Rational> Cyclotomic::coefficients_in(int m) const { return lifted(m).coeffs_; }

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("Cyclotomic: value is not rational: " + to_string());
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

bool Cyclotomic::is_algebraic_integer() const {
  for (const auto& c : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

Cyclotomic Cyclotomic::conj() const {
  if (conductor_ <= 2) return *this;
  std::vector<Rational> c(conductor_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    c[(conductor_ - static_cast<int>(i)) % conductor_] = coeffs_[i];
  return Cyclotomic(conductor_, reduce(conductor_, std::move(c)));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (other.conductor_ != conductor_) {
    const int m = std::lcm(conductor_, other.conductor_);
    *this = lifted(m);
    return *this += other.lifted(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  if (other.conductor_ != conductor_) {
    const int m = std::lcm(conductor_, other.conductor_);
    *this = lifted(m);
    return *this -= other.lifted(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (other.is_rational()) return *this *= other.rational_value();
  if (other.conductor_ != conductor_) {
    const int m = std::lcm(conductor_, other.conductor_);
    *this = lifted(m);
    return *this *= other.lifted(m);
  }
  std::vector<Rational> prod(coeffs_.size() + other.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = reduce(conductor_, std::move(prod));
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const int m = std::lcm(a.conductor_, b.conductor_);
  return a.coefficients_in(m) == b.coefficients_in(m);
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return rational_value().get_str();
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    std::string term;
    if (i == 0) {
      term = c.get_str();
    } else {
      const std::string base = "z" + std::to_string(conductor_) + "^" + std::to_string(i);
      if (c == 1) term = base;
      else if (c == -1) term = "-" + base;
      else term = c.get_str() + "*" + base;
    }
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace polyrep
