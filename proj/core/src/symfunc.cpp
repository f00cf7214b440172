#include "polyrep/symfunc.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace polyrep {

namespace {

void require_compatible(const SymElement& a, const SymElement& b, const char* what) {
  if (a.basis() != b.basis()) throw std::invalid_argument(std::string(what) + ": mixed bases");
  if (a.degree() != b.degree()) throw std::invalid_argument(std::string(what) + ": mixed degrees");
}

}  // namespace

SymElement SymElement::monomial(SymBasis basis, const Partition& index, const Rational& coeff) {
  SymElement out(basis, index.size());
  out.add_term(index, coeff);
  return out;
}

Rational SymElement::coeff(const Partition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool SymElement::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_integer(t.second); });
}

void SymElement::add_term(const Partition& index, const Rational& coeff) {
  if (index.size() != degree_) throw std::invalid_argument("SymElement::add_term: index of wrong degree");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

SymElement& SymElement::operator+=(const SymElement& other) {
  require_compatible(*this, other, "SymElement +");
  for (const auto& [index, c] : other.terms_) add_term(index, c);
  return *this;
}

SymElement& SymElement::operator-=(const SymElement& other) {
  require_compatible(*this, other, "SymElement -");
  for (const auto& [index, c] : other.terms_) add_term(index, -c);
  return *this;
}

SymElement& SymElement::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [index, c] : terms_) c *= q;
  return *this;
}

SymElement multiply(const SymElement& a, const SymElement& b) {
  if (a.basis() != b.basis()) throw std::invalid_argument("multiply: mixed bases");
  SymElement out(a.basis(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) out.add_term(ia.join(ib), ca * cb);
  return out;
}

SymElement operator*(const SymElement& a, const SymElement& b) { return multiply(a, b); }

namespace {

// Generator images, filled lazily under a lock; entries never change once set.
class GeneratorCache {
 public:
  using Builder = SymElement (*)(int n);
  explicit GeneratorCache(Builder build) : build_(build) {}

  SymElement get(int n) {
    {
      std::lock_guard lock(mutex_);
      if (n < static_cast<int>(cache_.size()) && cache_[n]) return *cache_[n];
    }
    SymElement value = build_(n);
    std::lock_guard lock(mutex_);
    if (n >= static_cast<int>(cache_.size())) cache_.resize(n + 1);
    if (!cache_[n]) cache_[n] = value;
    return *cache_[n];
  }

 private:
  Builder build_;
  std::mutex mutex_;
  std::vector<std::optional<SymElement>> cache_;
};

SymElement build_x_in_c(int n) {
  SymElement out(SymBasis::C, n);
  for (const auto& lambda : enumerate(n)) out.add_term(lambda, Rational(1) / Rational(z(lambda)));
  return out;
}

SymElement x_generator_in_c(int n) {
  static GeneratorCache cache(build_x_in_c);
  return cache.get(n);
}

SymElement c_generator_in_x(int n);

SymElement build_c_in_x(int n) {
  SymElement out = SymElement::generator(SymBasis::X, n) * Rational(n);
  for (int i = 1; i < n; ++i) out -= c_generator_in_x(i) * SymElement::generator(SymBasis::X, n - i);
  return out;
}

SymElement c_generator_in_x(int n) {
  static GeneratorCache cache(build_c_in_x);
  return cache.get(n);
}

template <class GeneratorImage>
SymElement change_basis(const SymElement& a, SymBasis target, GeneratorImage image) {
  SymElement out(target, a.degree());
  for (const auto& [index, c] : a.terms()) {
    SymElement term = SymElement::one(target);
    for (int part : index.parts()) term = term * image(part);
    out += term * c;
  }
  return out;
}

}  // namespace

SymElement x_to_c(const SymElement& a) {
  if (a.basis() != SymBasis::X) throw std::invalid_argument("x_to_c: input must be in the x-basis");
  return change_basis(a, SymBasis::C, x_generator_in_c);
}

SymElement c_to_x(const SymElement& a) {
  if (a.basis() != SymBasis::C) throw std::invalid_argument("c_to_x: input must be in the c-basis");
  return change_basis(a, SymBasis::X, c_generator_in_x);
}

ClassValues::ClassValues(int degree) : degree_(degree) {
  for (const auto& mu : enumerate(degree)) values_.emplace(mu, 0);
}

ClassValues class_values(const SymElement& a) {
  const SymElement in_c = a.basis() == SymBasis::C ? a : x_to_c(a);
  ClassValues out(a.degree());
  for (const auto& [mu, c] : in_c.terms()) out.set(mu, c * z(mu));
  return out;
}

Rational inner_product(const ClassValues& a, const ClassValues& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("inner_product: degree mismatch");
  Rational sum = 0;
  for (const auto& [mu, va] : a.values()) sum += va * b.at(mu) / z(mu);
  return sum;
}

namespace {

Integer count_assignments(const std::vector<int>& cycles, std::size_t idx, std::vector<int>& capacity) {
  if (idx == cycles.size())
    return std::all_of(capacity.begin(), capacity.end(), [](int c) { return c == 0; }) ? 1 : 0;
  Integer total = 0;
  for (auto& cap : capacity) {
    if (cap < cycles[idx]) continue;
    cap -= cycles[idx];
    total += count_assignments(cycles, idx + 1, capacity);
    cap += cycles[idx];
  }
  return total;
}

}  // namespace

Integer perm_char_value(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("perm_char_value: sizes differ");
  std::vector<int> capacity = lambda.parts();
  return count_assignments(mu.parts(), 0, capacity);
}

namespace {

Integer mn_recurse(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t idx) {
  if (idx == mu.size()) return lambda.empty() ? 1 : 0;
  const int r = mu[idx];
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + len - 1 - i;

  Integer total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int crossed = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++crossed;
    std::vector<int> moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> smaller;
    for (int j = 0; j < len; ++j) {
      const int part = moved[j] - (len - 1 - j);
      if (part > 0) smaller.push_back(part);
    }
    const Integer sub = mn_recurse(smaller, mu, idx + 1);
    if (crossed % 2) total -= sub;
    else total += sub;
  }
  return total;
}

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("mn_character: sizes differ");
  return mn_recurse(lambda.parts(), mu.parts(), 0);
}

ClassValues mn_class_values(const Partition& lambda) {
  ClassValues out(lambda.size());
  for (const auto& [mu, unused] : out.values()) out.set(mu, Rational(mn_character(lambda, mu)));
  return out;
}

SymElement schur_in_x(const Partition& lambda) {
  const auto& parts = lambda.parts();
  const std::size_t len = parts.size();
  if (len == 0) return SymElement::one(SymBasis::X);
  if (len > 20) throw std::invalid_argument("schur_in_x: too many parts");

  auto entry = [&](std::size_t i, std::size_t j) -> std::optional<SymElement> {
    const int k = parts[i] - static_cast<int>(i) + static_cast<int>(j);
    if (k < 0) return std::nullopt;
    return k == 0 ? SymElement::one(SymBasis::X) : SymElement::generator(SymBasis::X, k);
  };

  // Expansion over permutations, row by row, keyed by the set of used columns.
  std::vector<std::optional<SymElement>> partial(std::size_t{1} << len);
  partial[0] = SymElement::one(SymBasis::X);
  for (std::size_t mask = 0; mask < partial.size(); ++mask) {
    if (!partial[mask]) continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    if (row == len) continue;
    for (std::size_t col = 0; col < len; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      auto h = entry(row, col);
      if (!h) continue;
      const int above = std::popcount(mask >> (col + 1));
      SymElement term = *partial[mask] * *h;
      if (above % 2) term = -term;
      auto& slot = partial[mask | (std::size_t{1} << col)];
      if (slot) *slot += term;
      else slot = std::move(term);
    }
  }
  auto& full = partial.back();
  return full ? *full : SymElement(SymBasis::X, lambda.size());
}

namespace {

std::string render_monomial(const std::string& symbol, const std::vector<int>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    out += symbol + "_" + std::to_string(factors[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

std::string to_string(const SymElement& a, const RenderOptions& options) {
  if (a.is_zero()) return "0";
  const std::string symbol = options.symbol.value_or(a.basis() == SymBasis::X ? "x" : "c");

  struct Term {
    std::vector<int> regular;
    std::vector<int> singular;
    const Rational* coeff;
  };
  std::vector<Term> terms;
  for (const auto& [index, c] : a.terms()) {
    Term t{{}, {}, &c};
    for (int part : index.parts()) {
      if (options.prime && part % *options.prime == 0) t.singular.push_back(part);
      else t.regular.push_back(part);
    }
    terms.push_back(std::move(t));
  }
  std::sort(terms.begin(), terms.end(), [](const Term& l, const Term& r) {
    if (l.regular != r.regular) return l.regular > r.regular;
    return l.singular > r.singular;
  });

  std::string out;
  for (const auto& t : terms) {
    std::vector<int> factors = t.regular;
    factors.insert(factors.end(), t.singular.begin(), t.singular.end());
    const Rational magnitude = abs(*t.coeff);
    const bool negative = *t.coeff < 0;
    std::string body;
    if (factors.empty()) {
      body = magnitude.get_str();
    } else {
      const std::string mono = render_monomial(symbol, factors);
      if (magnitude == 1) body = mono;
      else if (is_integer(magnitude)) body = magnitude.get_str() + mono;
      else body = magnitude.get_str() + "*" + mono;
    }
    if (out.empty()) out = negative ? "-" + body : body;
    else out += (negative ? " - " : " + ") + body;
  }
  return out;
}

namespace {

class SymParser {
 public:
  SymParser(std::string_view text, SymBasis basis) : basis_(basis) {
    // normalise the unicode minus sign and drop whitespace
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text.substr(i, 3) == "\xE2\x88\x92") {
        src_ += '-';
        i += 2;
      } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        src_ += text[i];
      }
    }
  }

  SymElement parse() {
    std::optional<SymElement> result;
    bool first = true;
    while (pos_ < src_.size() || first) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [index, coeff] = term();
      SymElement t = SymElement::monomial(basis_, index, coeff * sign);
      if (!result) result = SymElement(basis_, index.size());
      if (result->degree() != index.size()) fail("inhomogeneous expression");
      *result += t;
    }
    return *result;
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  char get() { return pos_ < src_.size() ? src_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse_sym: " + why + " at offset " + std::to_string(pos_) + " in '" + src_ + "'");
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out += get();
    if (out.empty()) fail("expected digits");
    return out;
  }

  std::pair<Partition, Rational> term() {
    Rational coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(digits());
      Integer den = 1;
      if (peek() == '/') {
        get();
        den = Integer(digits());
        if (den == 0) fail("zero denominator");
      }
      coeff = make_rational(num, den);
      has_coeff = true;
      if (peek() == '*') get();
    }
    std::vector<int> parts;
    while (std::isalpha(static_cast<unsigned char>(peek()))) {
      while (std::isalpha(static_cast<unsigned char>(peek()))) get();
      if (get() != '_') fail("expected '_'");
      int index;
      if (peek() == '{') {
        get();
        index = std::stoi(digits());
        if (get() != '}') fail("expected '}'");
      } else {
        index = std::stoi(digits());
      }
      int exponent = 1;
      if (peek() == '^') {
        get();
        exponent = std::stoi(digits());
      }
      if (index <= 0) fail("generator index must be positive");
      parts.insert(parts.end(), exponent, index);
    }
    if (!has_coeff && parts.empty()) fail("empty term");
    return {Partition::from_unsorted(std::move(parts)), coeff};
  }

  SymBasis basis_;
  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

SymElement parse_sym(std::string_view text, SymBasis basis) { return SymParser(text, basis).parse(); }

}  // namespace polyrep
