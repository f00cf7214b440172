#include "polyrep/wreath/char_table.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <numeric>
#include <sstream>

namespace polyrep {

namespace {

using nlohmann::json;

Cyclotomic parse_value(const json& j, int conductor, const std::string& where) {
  if (j.is_number_integer()) return Cyclotomic(Integer(std::to_string(j.get<long long>())));
  if (!j.is_array()) throw TableError(where + ": value must be an integer or a list of integers");
  if (static_cast<int>(j.size()) != conductor)
    throw TableError(where + ": cyclotomic value must list exactly conductor = " + std::to_string(conductor) +
                     " coefficients");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw TableError(where + ": cyclotomic coefficients must be integers");
    coeffs.emplace_back(Integer(std::to_string(c.get<long long>())));
  }
  return Cyclotomic::from_power_basis(conductor, coeffs);
}

Integer parse_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw TableError(where + ": expected an integer");
}

}  // namespace

void CharTable::validate() const {
  if (order <= 0) throw TableError("group order must be positive");
  if (conductor < 1) throw TableError("conductor must be at least 1");
  if (classes.empty()) throw TableError("table has no classes");

  Integer total = 0;
  for (const auto& c : classes) {
    if (c.size <= 0) throw TableError("class '" + c.label + "' has nonpositive size");
    if (c.element_order < 1) throw TableError("class '" + c.label + "' has invalid element order");
    total += c.size;
  }
  if (total != order)
    throw TableError("class sizes sum to " + total.get_str() + ", not the group order " + order.get_str());
  if (classes.front().size != 1 || classes.front().element_order != 1)
    throw TableError("first class must be the identity (size 1, element order 1)");
  if (irreducibles.size() != classes.size())
    throw TableError("number of irreducibles (" + std::to_string(irreducibles.size()) +
                     ") differs from number of classes (" + std::to_string(classes.size()) + ")");

  for (const auto& chi : irreducibles) {
    if (chi.values.size() != classes.size())
      throw TableError("irreducible '" + chi.label + "' has " + std::to_string(chi.values.size()) +
                       " values for " + std::to_string(classes.size()) + " classes");
    for (const auto& v : chi.values) {
      if (conductor % v.conductor() != 0)
        throw TableError("irreducible '" + chi.label + "' has a value outside Q(zeta_" + std::to_string(conductor) +
                         ")");
      if (!v.is_algebraic_integer())
        throw TableError("irreducible '" + chi.label + "' has a value that is not an algebraic integer");
    }
  }

  for (std::size_t i = 0; i < irreducibles.size(); ++i)
    for (std::size_t j = i; j < irreducibles.size(); ++j) {
      Cyclotomic sum = 0;
      for (std::size_t c = 0; c < classes.size(); ++c)
        sum += irreducibles[i].values[c] * irreducibles[j].values[c].conj() * Rational(classes[c].size);
      const Cyclotomic expected = i == j ? Cyclotomic(order) : Cyclotomic(0);
      if (!(sum == expected))
        throw TableError("row orthogonality fails for irreducibles '" + irreducibles[i].label + "' and '" +
                         irreducibles[j].label + "': sum |C| chi_i(C) conj(chi_j(C)) = " + sum.to_string() +
                         ", expected " + expected.to_string());
    }
}

CharTable parse_table(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw TableError(std::string("malformed table file: ") + e.what());
  }
  CharTable t;
  try {
    t.name = j.at("name").get<std::string>();
    t.order = parse_integer(j.at("order"), "order");
    t.conductor = j.at("conductor").get<int>();
    if (t.conductor < 1) throw TableError("conductor must be at least 1");
    for (const auto& c : j.at("classes")) {
      ConjugacyClass cls;
      cls.label = c.at("label").get<std::string>();
      cls.size = parse_integer(c.at("size"), "class '" + cls.label + "' size");
      cls.element_order = c.at("element_order").get<int>();
      t.classes.push_back(std::move(cls));
    }
    for (const auto& r : j.at("irreducibles")) {
      IrreducibleCharacter chi;
      chi.label = r.at("label").get<std::string>();
      for (const auto& v : r.at("values"))
        chi.values.push_back(parse_value(v, t.conductor, "irreducible '" + chi.label + "'"));
      t.irreducibles.push_back(std::move(chi));
    }
  } catch (const json::exception& e) {
    throw TableError(std::string("malformed table file: ") + e.what());
  }
  t.validate();
  return t;
}

CharTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot open table file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

std::vector<std::size_t> p_regular_classes(const CharTable& table, int p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.classes.size(); ++i)
    if (std::gcd(table.classes[i].element_order, p) == 1) out.push_back(i);
  return out;
}

CharTable trivial_table() {
  CharTable t;
  t.name = "1";
  t.order = 1;
  t.conductor = 1;
  t.classes.push_back({"1", 1, 1});
  t.irreducibles.push_back({"triv", {Cyclotomic(1)}});
  return t;
}

}  // namespace polyrep
