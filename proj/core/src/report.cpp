#include "polyrep/report.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace polyrep {

namespace {

using nlohmann::json;

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("report_from_json: expected an integer");
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"cols", m.cols()}, {"rows", std::move(rows)}};
}

IntMatrix matrix_from_json(const json& j) {
  IntMatrix m = IntMatrix::with_cols(j.at("cols").get<std::size_t>());
  for (const auto& row : j.at("rows")) {
    std::vector<Integer> values;
    for (const auto& v : row) values.push_back(integer_from_json(v));
    m.append_row(values);
  }
  return m;
}

}  // namespace

std::string digest(const IntMatrix& m) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : std::to_string(m.cols()) + ":" + to_string(m)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string report_to_json(const VerificationReport& r) {
  json j{
      {"subject", r.subject},
      {"degree", r.degree},
      {"prime", r.prime},
      {"lattice_rank", r.lattice_rank},
      {"expected_rank", r.expected_rank},
      {"generator_count", r.generator_count},
      {"generator_hnf", matrix_to_json(r.generator_hnf)},
      {"lattice_hnf", matrix_to_json(r.lattice_hnf)},
      {"generator_hnf_digest", digest(r.generator_hnf)},
      {"lattice_hnf_digest", digest(r.lattice_hnf)},
      {"vanishing_ok", r.vanishing_ok},
      {"verdict", r.verdict},
      {"seconds", r.seconds},
  };
  return j.dump();
}

VerificationReport report_from_json(std::string_view text) {
  const json j = json::parse(text);
  VerificationReport r;
  r.subject = j.at("subject").get<std::string>();
  r.degree = j.at("degree").get<int>();
  r.prime = j.at("prime").get<int>();
  r.lattice_rank = j.at("lattice_rank").get<std::size_t>();
  r.expected_rank = j.at("expected_rank").get<std::size_t>();
  r.generator_count = j.at("generator_count").get<std::size_t>();
  r.generator_hnf = matrix_from_json(j.at("generator_hnf"));
  r.lattice_hnf = matrix_from_json(j.at("lattice_hnf"));
  r.vanishing_ok = j.at("vanishing_ok").get<bool>();
  r.verdict = j.at("verdict").get<bool>();
  r.seconds = j.at("seconds").get<double>();
  return r;
}

}  // namespace polyrep
