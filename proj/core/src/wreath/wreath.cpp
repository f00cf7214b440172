#include "polyrep/wreath/wreath.hpp"

#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>

namespace polyrep {

Matrix<Cyclotomic> vanishing_constraints(const CharTable& table, int p) {
  const std::size_t n = table.irreducibles.size();
  Matrix<Cyclotomic> m = Matrix<Cyclotomic>::with_cols(n);
  for (std::size_t c = 0; c < table.class_count(); ++c) {
    if (std::gcd(table.classes[c].element_order, p) == 1) continue;
    std::vector<Cyclotomic> row;
    for (const auto& chi : table.irreducibles) row.push_back(chi.values[c]);
    m.append_row(row);
  }
  return m;
}

ELatticeBasis e_lattice(const CharTable& table, int p) {
  const IntMatrix kernel = rational_kernel(vanishing_constraints(table, p));
  ELatticeBasis out;
  out.prime = p;
  out.regular_rank = kernel.rows();
  out.phi = unimodular_complete(kernel);
  if (out.regular_rank != p_regular_classes(table, p).size())
    throw std::logic_error("e_lattice: lattice rank differs from the number of p-regular classes");
  return out;
}

ELatticeBasis make_e_lattice(const CharTable& table, int p, IntMatrix phi) {
  const std::size_t n = table.irreducibles.size();
  if (phi.rows() != n || phi.cols() != n) throw std::invalid_argument("make_e_lattice: phi must be N x N");
  const Integer det = determinant(phi);
  if (det != 1 && det != -1) throw std::invalid_argument("make_e_lattice: phi is not unimodular");
  const IntMatrix kernel = rational_kernel(vanishing_constraints(table, p));
  const std::size_t m = kernel.rows();
  if (hnf(phi.row_block(0, m)) != kernel)
    throw std::invalid_argument("make_e_lattice: leading rows do not span the vanishing lattice");
  return ELatticeBasis{p, m, std::move(phi)};
}

WreathElement phi_power_sum(const CharTable& table, std::size_t j, int n) {
  const std::size_t classes = table.class_count();
  WreathElement out(WreathBasis::Xi, classes, n);
  for (std::size_t c = 0; c < classes; ++c) {
    const Rational weight = make_rational(table.classes[c].size, table.order);
    out += WreathElement::generator(WreathBasis::Xi, classes, c, n, table.irreducibles.at(j).values[c] * weight);
  }
  return out;
}

PhiToXi::PhiToXi(const CharTable& table, int max_degree) : classes_(table.class_count()), max_degree_(max_degree) {
  const WreathElement unit = WreathElement::one(WreathBasis::Xi, classes_);
  for (std::size_t j = 0; j < table.irreducibles.size(); ++j) {
    GradedSeries<WreathElement> log_series(max_degree, unit);
    for (int m = 1; m <= max_degree; ++m) log_series.set(m, phi_power_sum(table, j, m) * Rational(1, m));
    images_.push_back(exp(log_series).coefficients());
  }
}

WreathElement PhiToXi::monomial_image(const MultiPartition& phi_index) const {
  if (phi_index.width() != images_.size()) throw std::invalid_argument("PhiToXi: width mismatch");
  WreathElement out = WreathElement::one(WreathBasis::Xi, classes_);
  for (std::size_t j = 0; j < phi_index.width(); ++j)
    for (int part : phi_index[j].parts()) {
      if (part > max_degree_) throw std::out_of_range("PhiToXi: degree beyond precomputed range");
      out = out * images_[j][part];
    }
  return out;
}

WreathElement PhiToXi::operator()(const WreathElement& phi_element) const {
  if (phi_element.basis() != WreathBasis::Phi) throw std::invalid_argument("PhiToXi: input must be in the Phi basis");
  WreathElement out(WreathBasis::Xi, classes_, phi_element.degree());
  for (const auto& [index, c] : phi_element.terms()) out += monomial_image(index) * c;
  return out;
}

WreathElement xi_from_phi(const WreathElement& phi_element, const CharTable& table) {
  return PhiToXi(table, phi_element.degree())(phi_element);
}

GradedSeries<WreathElement> phi_complete_series(const CharTable& table, std::size_t j, int order) {
  const std::size_t width = table.irreducibles.size();
  auto out = GradedSeries<WreathElement>::one(order, WreathElement::one(WreathBasis::Phi, width));
  for (int i = 1; i <= order; ++i) out.set(i, WreathElement::generator(WreathBasis::Phi, width, j, i));
  return out;
}

GradedSeries<WreathElement> xk_series(const CharTable& table, const ELatticeBasis& e, std::size_t k, int order) {
  const std::size_t width = table.irreducibles.size();
  if (k >= width) throw std::out_of_range("xk_series: k out of range");
  const WreathElement unit = WreathElement::one(WreathBasis::Phi, width);
  if (k < e.regular_rank) {
    auto out = GradedSeries<WreathElement>::one(order, unit);
    for (std::size_t j = 0; j < width; ++j) {
      const Integer& exponent = e.phi(k, j);
      if (exponent == 0) continue;
      out = out * int_power(phi_complete_series(table, j, order), exponent.get_si());
    }
    return out;
  }
  GradedSeries<WreathElement> out(order, unit);
  Integer constant = 0;
  for (std::size_t j = 0; j < width; ++j) constant += e.phi(k, j);
  out.set(0, unit * Cyclotomic(constant));
  for (int i = 1; i <= order; ++i) {
    WreathElement coeff(WreathBasis::Phi, width, i);
    for (std::size_t j = 0; j < width; ++j)
      coeff += WreathElement::generator(WreathBasis::Phi, width, j, i, Cyclotomic(e.phi(k, j)));
    out.set(i, std::move(coeff));
  }
  return out;
}

std::vector<WreathElement> yk_generators(const CharTable& table, const ELatticeBasis& e, std::size_t k, int order) {
  if (k >= e.regular_rank) throw std::out_of_range("yk_generators: k must be below the regular rank");
  return quotient_y(xk_series(table, e, k, order), e.prime).coefficients();
}

bool is_p_regular_class(const CharTable& table, const MultiPartition& xi_index, int p) {
  for (std::size_t c = 0; c < xi_index.width(); ++c) {
    if (xi_index[c].empty()) continue;
    if (std::gcd(table.classes.at(c).element_order, p) != 1) return false;
    if (!is_p_regular(xi_index[c], p)) return false;
  }
  return true;
}

std::vector<MultiPartition> p_regular_wreath_classes(const CharTable& table, int n, int p) {
  return enumerate_multi(
      table.class_count(), n, [&](std::size_t c) { return std::gcd(table.classes[c].element_order, p) == 1; },
      [p](int part) { return part % p != 0; });
}

std::size_t wreath_basis_size(const CharTable& table, int n) {
  return enumerate_multi(table.irreducibles.size(), n).size();
}

namespace {

std::map<MultiPartition, std::size_t> positions(const std::vector<MultiPartition>& indices) {
  std::map<MultiPartition, std::size_t> out;
  for (std::size_t i = 0; i < indices.size(); ++i) out.emplace(indices[i], i);
  return out;
}

std::vector<Integer> phi_coordinates(const WreathElement& a, const std::map<MultiPartition, std::size_t>& columns) {
  std::vector<Integer> out(columns.size());
  for (const auto& [index, c] : a.terms()) {
    if (!c.is_rational() || !is_integer(c.rational_value()))
      throw std::domain_error("Phi-basis coefficient is not an integer: " + c.to_string());
    out.at(columns.at(index)) = c.rational_value().get_num();
  }
  return out;
}

// prod_k prod_{parts of index[k]} factors[k][part]
WreathElement monomial_in(const std::vector<std::vector<WreathElement>>& factors, const MultiPartition& index,
                          const WreathElement& unit) {
  WreathElement out = unit;
  for (std::size_t k = 0; k < index.width(); ++k)
    for (int part : index[k].parts()) out = out * factors[k][part];
  return out;
}

}  // namespace

VerificationReport verify_theorem2(const CharTable& table, int p, int n) {
  return verify_theorem2(table, e_lattice(table, p), n);
}

VerificationReport verify_theorem2(const CharTable& table, const ELatticeBasis& e, int n) {
  const auto start = std::chrono::steady_clock::now();
  const int p = e.prime;
  const std::size_t width = table.irreducibles.size();

  VerificationReport report;
  report.subject = table.name;
  report.degree = n;
  report.prime = p;

  const PhiToXi to_xi(table, n);
  const auto phi_columns = enumerate_multi(width, n);
  const auto column_pos = positions(phi_columns);

  std::vector<MultiPartition> singular;
  for (auto& index : enumerate_multi(table.class_count(), n))
    if (!is_p_regular_class(table, index, p)) singular.push_back(std::move(index));
  const auto singular_pos = positions(singular);

  Matrix<Cyclotomic> constraints(singular.size(), phi_columns.size());
  for (std::size_t col = 0; col < phi_columns.size(); ++col) {
    const WreathElement image = to_xi.monomial_image(phi_columns[col]);
    for (const auto& [index, c] : image.terms())
      if (auto it = singular_pos.find(index); it != singular_pos.end()) constraints(it->second, col) = c;
  }
  report.lattice_hnf = rational_kernel(constraints);
  report.lattice_rank = report.lattice_hnf.rows();
  report.expected_rank = p_regular_wreath_classes(table, n, p).size();

  std::vector<std::vector<WreathElement>> y;
  for (std::size_t k = 0; k < e.regular_rank; ++k) y.push_back(yk_generators(table, e, k, n));

  const WreathElement unit = WreathElement::one(WreathBasis::Phi, width);
  IntMatrix generators = IntMatrix::with_cols(phi_columns.size());
  report.vanishing_ok = true;
  for (const auto& index : enumerate_multi(e.regular_rank, n, {}, [p](int part) { return part % p != 0; })) {
    const WreathElement monomial = monomial_in(y, index, unit);
    generators.append_row(phi_coordinates(monomial, column_pos));
    const WreathElement image = to_xi(monomial);
    for (const auto& [xi_index, c] : image.terms())
      if (!is_p_regular_class(table, xi_index, p)) report.vanishing_ok = false;
  }
  report.generator_count = generators.rows();
  report.generator_hnf = hnf(generators);
  report.verdict = report.generator_hnf == report.lattice_hnf;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool generator_exchange_check(const CharTable& table, const ELatticeBasis& e, int n) {
  const std::size_t width = table.irreducibles.size();
  const Integer det = determinant(e.phi);
  if (det != 1 && det != -1) return false;

  std::vector<std::vector<WreathElement>> x;
  for (std::size_t k = 0; k < width; ++k) x.push_back(xk_series(table, e, k, n).coefficients());

  for (int i = 1; i <= n; ++i)
    for (std::size_t k = 0; k < width; ++k)
      for (std::size_t j = 0; j < width; ++j) {
        const MultiPartition gen = MultiPartition([&] {
          std::vector<Partition> parts(width);
          parts[j] = Partition{i};
          return parts;
        }());
        if (!(x[k][i].coeff(gen) == Cyclotomic(e.phi(k, j)))) return false;
      }

  const WreathElement unit = WreathElement::one(WreathBasis::Phi, width);
  for (int d = 1; d <= n; ++d) {
    const auto basis = enumerate_multi(width, d);
    const auto pos = positions(basis);
    IntMatrix m = IntMatrix::with_cols(basis.size());
    for (const auto& index : basis) {
      const WreathElement monomial = monomial_in(x, index, unit);
      if (!monomial.is_integral()) return false;
      m.append_row(phi_coordinates(monomial, pos));
    }
    const Integer d_det = determinant(m);
    if (d_det != 1 && d_det != -1) return false;
  }
  return true;
}

bool exp_identity_check(const CharTable& table, const ELatticeBasis& e, std::size_t k, int order) {
  if (k >= e.regular_rank) throw std::out_of_range("exp_identity_check: k must be below the regular rank");
  const std::size_t classes = table.class_count();
  const std::size_t width = table.irreducibles.size();

  std::vector<Cyclotomic> weight(classes);
  for (std::size_t c = 0; c < classes; ++c) {
    for (std::size_t j = 0; j < width; ++j)
      weight[c] += table.irreducibles[j].values[c] * Rational(e.phi(k, j));
    weight[c] *= make_rational(table.classes[c].size, table.order);
  }
  for (std::size_t c = 0; c < classes; ++c)
    if (std::gcd(table.classes[c].element_order, e.prime) != 1 && !weight[c].is_zero()) return false;

  const WreathElement xi_unit = WreathElement::one(WreathBasis::Xi, classes);
  GradedSeries<WreathElement> log_series(order, xi_unit);
  for (int i = 1; i <= order; ++i) {
    WreathElement coeff(WreathBasis::Xi, classes, i);
    for (std::size_t c = 0; c < classes; ++c) {
      if (std::gcd(table.classes[c].element_order, e.prime) != 1) continue;
      coeff += WreathElement::generator(WreathBasis::Xi, classes, c, i, weight[c] * Rational(1, i));
    }
    log_series.set(i, std::move(coeff));
  }
  const auto expected = exp(log_series);

  const PhiToXi to_xi(table, order);
  const auto xk = xk_series(table, e, k, order);
  for (int i = 0; i <= order; ++i)
    if (!(to_xi(xk[i]) == expected[i])) return false;
  return true;
}

}  // namespace polyrep
