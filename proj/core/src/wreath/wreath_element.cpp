#include "polyrep/wreath/wreath_element.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyrep/wreath/char_table.hpp"

namespace polyrep {

WreathElement WreathElement::one(WreathBasis basis, std::size_t width) {
  return monomial(basis, MultiPartition(width));
}

WreathElement WreathElement::monomial(WreathBasis basis, const MultiPartition& index, const Cyclotomic& coeff) {
  WreathElement out(basis, index.width(), index.size());
  out.add_term(index, coeff);
  return out;
}

WreathElement WreathElement::generator(WreathBasis basis, std::size_t width, std::size_t component, int n,
                                       const Cyclotomic& coeff) {
  if (component >= width) throw std::out_of_range("WreathElement::generator: component out of range");
  std::vector<Partition> parts(width);
  parts[component] = Partition{n};
  return monomial(basis, MultiPartition(std::move(parts)), coeff);
}

Cyclotomic WreathElement::coeff(const MultiPartition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Cyclotomic(0) : it->second;
}

bool WreathElement::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return t.second.is_rational() && is_integer(t.second.rational_value());
  });
}

void WreathElement::add_term(const MultiPartition& index, const Cyclotomic& coeff) {
  if (index.width() != width_) throw std::invalid_argument("WreathElement::add_term: width mismatch");
  if (index.size() != degree_) throw std::invalid_argument("WreathElement::add_term: index of wrong degree");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

namespace {

void require_compatible(const WreathElement& a, const WreathElement& b, const char* what) {
  if (a.basis() != b.basis() || a.width() != b.width())
    throw std::invalid_argument(std::string(what) + ": mixed bases");
  if (a.degree() != b.degree()) throw std::invalid_argument(std::string(what) + ": mixed degrees");
}

}  // namespace

WreathElement& WreathElement::operator+=(const WreathElement& other) {
  require_compatible(*this, other, "WreathElement +");
  for (const auto& [index, c] : other.terms_) add_term(index, c);
  return *this;
}

WreathElement& WreathElement::operator-=(const WreathElement& other) {
  require_compatible(*this, other, "WreathElement -");
  for (const auto& [index, c] : other.terms_) add_term(index, -c);
  return *this;
}

WreathElement& WreathElement::operator*=(const Cyclotomic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [index, v] : terms_) v *= c;
  return *this;
}

WreathElement operator*(const WreathElement& a, const WreathElement& b) {
  if (a.basis() != b.basis() || a.width() != b.width())
    throw std::invalid_argument("WreathElement *: mixed bases");
  WreathElement out(a.basis(), a.width(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) out.add_term(ia.join(ib), ca * cb);
  return out;
}

bool WreathElement::operator==(const WreathElement& other) const {
  if (basis_ != other.basis_ || width_ != other.width_ || degree_ != other.degree_) return false;
  if (terms_.size() != other.terms_.size()) return false;
  return std::equal(terms_.begin(), terms_.end(), other.terms_.begin(),
                    [](const auto& l, const auto& r) { return l.first == r.first && l.second == r.second; });
}

std::string to_string(const WreathElement& a, const CharTable* table) {
  if (a.is_zero()) return "0";
  auto label = [&](std::size_t component) {
    if (!table) return std::to_string(component + 1);
    return a.basis() == WreathBasis::Phi ? table->irreducibles.at(component).label
                                         : table->classes.at(component).label;
  };
  std::string out;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [index, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < index.width(); ++k) {
      for (auto [part, mult] : index[k].multiplicities()) {
        mono += a.basis() == WreathBasis::Phi ? "Phi[" + label(k) + "](x_" + std::to_string(part) + ")"
                                              : "xi_" + std::to_string(part) + "[" + label(k) + "]";
        if (mult > 1) mono += "^" + std::to_string(mult);
      }
    }
    std::string coeff;
    bool negative = false;
    if (c.is_rational()) {
      Rational q = c.rational_value();
      negative = q < 0;
      if (negative) q = -q;
      if (q != 1 || mono.empty()) coeff = q.get_str() + (mono.empty() ? "" : "*");
    } else {
      coeff = "(" + c.to_string() + ")" + (mono.empty() ? "" : "*");
    }
    const std::string body = coeff + mono;
    if (out.empty()) out = negative ? "-" + body : body;
    else out += (negative ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace polyrep
