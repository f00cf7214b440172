#include "polyrep/modsym.hpp"

#include <chrono>
#include <stdexcept>

#include "polyrep/exactlin/lattice.hpp"
#include "polyrep/series.hpp"

namespace polyrep {

std::vector<Partition> p_singular_classes(int n, int p) {
  std::vector<Partition> out;
  for (auto& mu : enumerate(n))
    if (!is_p_regular(mu, p)) out.push_back(std::move(mu));
  return out;
}

RatMatrix singular_constraints(int n, int p) {
  const auto columns = enumerate(n);
  const auto singular = p_singular_classes(n, p);
  RatMatrix m(singular.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const ClassValues values = class_values(SymElement::monomial(SymBasis::X, columns[j]));
    for (std::size_t i = 0; i < singular.size(); ++i) m(i, j) = values.at(singular[i]);
  }
  return m;
}

RegLattice reg_lattice(int n, int p) {
  if (n < 0) throw std::invalid_argument("reg_lattice: n must be nonnegative");
  RegLattice out;
  out.degree = n;
  out.prime = p;
  out.columns = enumerate(n);
  out.basis = rational_kernel(singular_constraints(n, p));
  return out;
}

SymElement y_monomial(const Partition& lambda, int p) {
  SymElement out = SymElement::one(SymBasis::X);
  for (int part : lambda.parts()) out = out * y_explicit(part, p);
  return out;
}

std::vector<Integer> x_coordinates(const SymElement& a) {
  if (a.basis() != SymBasis::X) throw std::invalid_argument("x_coordinates: element must be in the x-basis");
  std::vector<Integer> out;
  for (const auto& lambda : enumerate(a.degree())) {
    const Rational c = a.coeff(lambda);
    if (!is_integer(c)) throw std::domain_error("x_coordinates: non-integral coefficient " + c.get_str());
    out.emplace_back(c.get_num());
  }
  return out;
}

IntMatrix y_monomials(int n, int p) {
  IntMatrix out = IntMatrix::with_cols(enumerate(n).size());
  for (const auto& lambda : enumerate(n))
    if (is_p_regular(lambda, p)) out.append_row(x_coordinates(y_monomial(lambda, p)));
  return out;
}

VerificationReport verify_theorem1(int n, int p) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.subject = "S";
  report.degree = n;
  report.prime = p;

  const RegLattice lattice = reg_lattice(n, p);
  report.lattice_hnf = lattice.basis;
  report.lattice_rank = lattice.basis.rows();

  const auto singular = p_singular_classes(n, p);
  report.vanishing_ok = true;
  IntMatrix generators = IntMatrix::with_cols(lattice.columns.size());
  for (const auto& lambda : lattice.columns) {
    if (!is_p_regular(lambda, p)) continue;
    ++report.expected_rank;
    const SymElement y = y_monomial(lambda, p);
    generators.append_row(x_coordinates(y));
    const ClassValues values = class_values(y);
    for (const auto& mu : singular)
      if (values.at(mu) != 0) report.vanishing_ok = false;
  }
  report.generator_count = generators.rows();
  report.generator_hnf = hnf(generators);
  report.verdict = report.generator_hnf == report.lattice_hnf;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Rational> class_value_list(const SymElement& a) {
  const ClassValues values = class_values(a);
  std::vector<Rational> out;
  for (const auto& [mu, v] : values.values()) out.push_back(v);
  return out;
}

namespace {

std::vector<Rational> character_sum(std::initializer_list<Partition> lambdas, int n) {
  ClassValues total(n);
  for (const auto& lambda : lambdas) {
    const ClassValues chi = mn_class_values(lambda);
    for (const auto& [mu, v] : chi.values()) total.set(mu, total.at(mu) + v);
  }
  std::vector<Rational> out;
  for (const auto& [mu, v] : total.values()) out.push_back(v);
  return out;
}

bool vanishes_on_singular(const SymElement& a, int p) {
  const ClassValues values = class_values(a);
  for (const auto& mu : p_singular_classes(a.degree(), p))
    if (values.at(mu) != 0) return false;
  return true;
}

}  // namespace

std::vector<IdentityCheck> example_identities() {
  std::vector<IdentityCheck> out;
  const SymElement y1 = y_explicit(1, 2);
  const SymElement y3 = y_explicit(3, 2);

  {
    const SymElement minus_y3 = -y3;
    IdentityCheck c{"−y_3", 3, class_value_list(minus_y3), character_sum({Partition{2, 1}}, 3), false, false,
                    "class of the Steinberg-type simple module of S_3 over F_2; vanishes on 2-singular classes"};
    c.holds = c.observed == c.expected && vanishes_on_singular(minus_y3, 2);
    out.push_back(std::move(c));
  }
  {
    const SymElement minus_y1y3 = -(y1 * y3);
    IdentityCheck c{"−y_1y_3",
                    4,
                    class_value_list(minus_y1y3),
                    character_sum({Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1}}, 4),
                    false,
                    false,
                    "chi_(3,1) + chi_(2,2) + chi_(2,1,1); vanishes on 2-singular classes"};
    c.holds = c.observed == c.expected && vanishes_on_singular(minus_y1y3, 2);
    out.push_back(std::move(c));
  }
  for (int n = 1; n <= 4; ++n) {
    SymElement power = SymElement::one(SymBasis::X);
    for (int i = 0; i < n; ++i) power = power * y1;
    std::vector<Rational> regular(enumerate(n).size(), 0);
    regular.front() = Rational(factorial(static_cast<unsigned long>(n)));
    IdentityCheck c{"y_1^" + std::to_string(n), n, class_value_list(power), regular, false, false,
                    "regular character of S_" + std::to_string(n)};
    c.holds = c.observed == c.expected;
    out.push_back(std::move(c));
  }
  {
    IdentityCheck c{"2x_2 = y_1^2",
                    2,
                    class_value_list(y1 * y1),
                    class_value_list(SymElement::generator(SymBasis::X, 2) * Rational(2)),
                    false,
                    true,
                    "holds for composition factors of F_2 S_2, not for characters of projectives"};
    c.holds = c.observed == c.expected;
    out.push_back(std::move(c));
  }
  {
    const SymElement x1 = SymElement::generator(SymBasis::X, 1);
    IdentityCheck c{"x_1^3 = 2x_1x_2",
                    3,
                    class_value_list(x1 * x1 * x1),
                    class_value_list(x1 * SymElement::generator(SymBasis::X, 2) * Rational(2)),
                    false,
                    true,
                    "holds for composition factors of F_2 S_3, not for characters of projectives"};
    c.holds = c.observed == c.expected;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace polyrep
