// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "polyrep/modsym.hpp"
#include "polyrep/series.hpp"
#include "polyrep/symfunc.hpp"
#include "polyrep/wreath/wreath.hpp"

using namespace polyrep;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) detail = what;
    ok = ok && condition;
  }
};

std::string strip(std::string s) {
  std::string out;
  for (char c : s)
    if (c != ' ') out += c;
  return out;
}

std::size_t regular_partitions(int n, int p) {
  std::size_t c = 0;
  for (const auto& l : enumerate(n)) c += is_p_regular(l, p);
  return c;
}

CharTable fixture(const std::string& name) { return load_table(std::string(POLYREP_TABLE_DIR) + "/" + name + ".json"); }

struct WreathCase {
  std::string table;
  int prime;
  int max_degree;
};

const std::vector<WreathCase> kWreathCases{{"c2", 2, 6}, {"c2", 3, 5}, {"c3", 2, 4}, {"s3", 2, 3}};

Outcome generator_reproduction() {
  Outcome o;
  std::ostringstream out, err;
  const int code = cli::run_cli({"sym", "generators", "--p", "2", "--max-degree", "7"}, out, err);
  o.require(code == 0, "sym generators exit code " + std::to_string(code));
  const std::vector<std::string> expected{
      "y_1 = x_1", "y_3 = x_3 - x_1x_2", "y_5 = x_5-x_3x_2+x_1x_2^2-x_1x_4",
      "y_7 = x_7-x_5x_2 - x_3x_4 + x_3x_2^2 - x_1x_6+2x_1x_4x_2-x_1x_2^3"};
  std::vector<std::string> got;
  std::istringstream lines(out.str());
  for (std::string line; std::getline(lines, line);) got.push_back(line);
  o.require(got.size() == expected.size(), "expected four generators, got " + std::to_string(got.size()));
  for (std::size_t i = 0; i < std::min(got.size(), expected.size()); ++i) {
    const auto eq = expected[i].find('=');
    const auto geq = got[i].find('=');
    o.require(geq != std::string::npos && strip(got[i].substr(0, geq)) == strip(expected[i].substr(0, eq)),
              "generator label: " + got[i]);
    o.require(geq != std::string::npos &&
                  parse_sym(got[i].substr(geq + 1)) == parse_sym(expected[i].substr(eq + 1)),
              "generator value: " + got[i]);
    // y_5's listed term order does not follow a single ordering rule, so only equality as polynomials is required.
    if (i != 2) o.require(strip(got[i]) == strip(expected[i]), "verbatim text: " + got[i]);
  }
  for (int p : {2, 3, 5}) {
    const auto series = y_series_generators(12, p);
    for (int n = 1; n <= 12; ++n)
      o.require(y_explicit(n, p) == series[n], "paths differ at n=" + std::to_string(n) + " p=" + std::to_string(p));
  }
  return o;
}

Outcome theorem1() {
  Outcome o;
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 10; ++n) {
      const VerificationReport r = verify_theorem1(n, p);
      const std::string at = " at n=" + std::to_string(n) + " p=" + std::to_string(p);
      o.require(r.verdict, "HNF mismatch" + at);
      o.require(r.vanishing_ok, "vanishing" + at);
      o.require(r.lattice_rank == regular_partitions(n, p) && r.generator_count == r.lattice_rank, "rank" + at);
    }
  o.require(verify_theorem1(3, 2).lattice_rank == 2, "rank at n=3 p=2");
  o.require(verify_theorem1(4, 2).lattice_rank == 2, "rank at n=4 p=2");
  return o;
}

Outcome vanishing() {
  Outcome o;
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 10; ++n) {
      const auto singular = p_singular_classes(n, p);
      for (const auto& lambda : enumerate(n)) {
        if (!is_p_regular(lambda, p)) continue;
        const ClassValues v = class_values(y_monomial(lambda, p));
        for (const auto& mu : singular)
          o.require(v.at(mu) == 0, "y_" + lambda.to_string() + " nonzero on " + mu.to_string());
      }
    }
  return o;
}

Outcome oracles() {
  Outcome o;
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : enumerate(n)) {
      const ClassValues v = class_values(SymElement::monomial(SymBasis::X, lambda));
      for (const auto& mu : enumerate(n))
        o.require(v.at(mu) == perm_char_value(lambda, mu), "perm char " + lambda.to_string() + " " + mu.to_string());
    }
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : enumerate(n)) {
      const ClassValues mn = mn_class_values(lambda);
      o.require(class_values(schur_in_x(lambda)) == mn, "schur " + lambda.to_string());
      for (const auto& other : enumerate(n))
        o.require(inner_product(mn, mn_class_values(other)) == (lambda == other ? 1 : 0),
                  "orthonormality " + lambda.to_string() + " " + other.to_string());
    }
  return o;
}

Outcome examples(std::vector<std::string>& info) {
  Outcome o;
  const auto checks = example_identities();
  const auto values = [](std::initializer_list<int> v) { return std::vector<Rational>(v.begin(), v.end()); };
  bool saw3 = false, saw13 = false, saw_discrepancy = false;
  for (const auto& c : checks) {
    if (c.label == "−y_3") {
      saw3 = true;
      o.require(c.holds && c.observed == values({2, 0, -1}), "−y_3 class values");
    } else if (c.label == "−y_1y_3") {
      saw13 = true;
      o.require(c.holds && c.observed == values({8, 0, 0, -1, 0}), "−y_1y_3 class values");
    } else if (c.informational) {
      saw_discrepancy = saw_discrepancy || c.label == "2x_2 = y_1^2";
      info.push_back(c.label + (c.holds ? " holds" : " differs") + " on characters (reported, not asserted)");
    } else {
      o.require(c.holds, c.label);
    }
  }
  const SymElement y3 = -y_explicit(3, 2);
  const SymElement y13 = -(y_explicit(1, 2) * y_explicit(3, 2));
  for (const auto& mu : p_singular_classes(3, 2)) o.require(class_values(y3).at(mu) == 0, "−y_3 vanishing");
  for (const auto& mu : p_singular_classes(4, 2)) o.require(class_values(y13).at(mu) == 0, "−y_1y_3 vanishing");
  o.require(saw3 && saw13 && saw_discrepancy, "missing example entries");
  return o;
}

Outcome theorem2() {
  Outcome o;
  for (const auto& c : kWreathCases) {
    const CharTable t = fixture(c.table);
    const ELatticeBasis e = e_lattice(t, c.prime);
    for (int n = 1; n <= c.max_degree; ++n) {
      const VerificationReport r = verify_theorem2(t, e, n);
      const std::string at = " for " + c.table + " p=" + std::to_string(c.prime) + " n=" + std::to_string(n);
      const std::size_t count =
          enumerate_multi(e.regular_rank, n, {}, [p = c.prime](int part) { return part % p != 0; }).size();
      o.require(r.verdict, "HNF mismatch" + at);
      o.require(r.vanishing_ok, "vanishing" + at);
      o.require(r.lattice_rank == count && r.generator_count == count, "rank" + at);
      o.require(p_regular_wreath_classes(t, n, c.prime).size() == count, "class count" + at);
    }
  }
  return o;
}

Outcome structural() {
  Outcome o;
  for (const auto& c : kWreathCases) {
    const CharTable t = fixture(c.table);
    const ELatticeBasis e = e_lattice(t, c.prime);
    const std::string at = " for " + c.table + " p=" + std::to_string(c.prime);
    for (std::size_t k = 0; k < e.regular_rank; ++k)
      o.require(exp_identity_check(t, e, k, c.max_degree), "exp identity k=" + std::to_string(k + 1) + at);
    o.require(generator_exchange_check(t, e, c.max_degree), "generator exchange" + at);
  }
  return o;
}

Outcome tanh_check() {
  Outcome o;
  GradedSeries<Rational> e(5, 1);
  Rational f = 1;
  for (int i = 0; i <= 5; ++i) {
    if (i) f /= i;
    e.set(i, f);
  }
  const auto y = quotient_y(e, 2);
  o.require(y[1] == 1, "degree 1");
  o.require(y[3] == Rational(-1, 3), "degree 3");
  o.require(y[5] == Rational(2, 15), "degree 5");
  return o;
}

Outcome trivial_reduction() {
  Outcome o;
  const CharTable one = trivial_table();
  for (int p : {2, 3}) {
    const ELatticeBasis e = e_lattice(one, p);
    const auto y = yk_generators(one, e, 0, 8);
    for (int n = 1; n <= 8; ++n) {
      const std::string at = " at n=" + std::to_string(n) + " p=" + std::to_string(p);
      const SymElement s = y_explicit(n, p);
      o.require(y[n].terms().size() == s.terms().size(), "generator support" + at);
      for (const auto& [lambda, q] : s.terms())
        o.require(y[n].coeff(MultiPartition({lambda})) == Cyclotomic(q), "generator coefficient" + at);
      const VerificationReport w = verify_theorem2(one, e, n);
      const VerificationReport r = verify_theorem1(n, p);
      o.require(w.lattice_hnf == r.lattice_hnf, "lattice basis" + at);
      o.require(w.generator_hnf == r.generator_hnf, "generator basis" + at);
      o.require(w.passed() == r.passed() && w.lattice_rank == r.lattice_rank, "verdict" + at);
    }
  }
  return o;
}

}  // namespace

int main() {
  std::vector<std::string> info;
  struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "generator reproduction", 5, generator_reproduction},
      {2, "theorem 1 lattice equality, n <= 10, p in {2,3,5}", 60, theorem1},
      {3, "y-monomials vanish on p-singular classes", 0, vanishing},
      {4, "character oracle agreement", 0, oracles},
      {5, "low-degree character identities", 0, [&info] { return examples(info); }},
      {6, "theorem 2 lattice equality on fixtures", 300, theorem2},
      {7, "exp identity and generator exchange", 0, structural},
      {8, "scalar tanh coefficients", 0, tanh_check},
      {9, "trivial group reduces to the symmetric case", 0, trivial_reduction},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds && o.ok) {
      o.ok = false;
      o.detail = "exceeded " + std::to_string(static_cast<int>(c.budget_seconds)) + " s";
    }
    failures += !o.ok;
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << seconds;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << time.str() << " s)";
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << "\n";
  }
  for (const auto& line : info) std::cout << "INFO " << line << "\n";
  std::cout << (failures ? "FAILED" : "ALL PASSED") << ": " << criteria.size() - failures << "/" << criteria.size()
            << " criteria\n";
  return failures ? 1 : 0;
}
