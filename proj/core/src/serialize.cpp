#include "tqft/serialize.hpp"

#include <stdexcept>

namespace tqft {

using nlohmann::json;

json to_json(const RingSpec& ring) {
  if (ring.is_generic()) return json{{"mode", "generic"}};
  return json{{"mode", "root_of_unity"}, {"p", ring.p()}};
}

RingSpec ring_from_json(const json& j) {
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "generic") return RingSpec::generic();
  if (mode == "root_of_unity") return RingSpec::root_of_unity(j.at("p").get<int>());
  throw std::invalid_argument("unknown ring mode: " + mode);
}

json to_json(const Scalar& s) {
  json j = to_json(s.ring());
  if (s.ring().is_generic()) j["low"] = s.low();
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(c.get_str());
  j["coefficients"] = std::move(coeffs);
  return j;
}

Scalar scalar_from_json(const json& j) {
  const RingSpec ring = ring_from_json(j);
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coefficients")) {
    Rational q;
    if (q.set_str(c.get<std::string>(), 10) != 0) throw std::invalid_argument("bad rational: " + c.dump());
    q.canonicalize();
    coeffs.push_back(q);
  }
  const int low = ring.is_generic() ? j.value("low", 0) : 0;
  return Scalar::from_laurent(ring, low, coeffs);
}

json to_json(const Fraction& f) {
  json den = json::array();
  for (const auto& [d, e] : f.denominator()) den.push_back(json::array({d, e}));
  return json{{"num", to_json(f.numerator())}, {"den", std::move(den)}};
}

Fraction fraction_from_json(const json& j) {
  Fraction::Denominator den;
  for (const auto& entry : j.at("den")) den[entry.at(0).get<int>()] += entry.at(1).get<int>();
  return Fraction(scalar_from_json(j.at("num")), std::move(den));
}

json to_json(const RingMatrix& m) {
  json rows = json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"ring", to_json(m.ring())},   {"rows", m.rows()},         {"cols", m.cols()},
              {"row_labels", m.row_labels}, {"col_labels", m.col_labels}, {"entries", std::move(rows)}};
}

RingMatrix matrix_from_json(const json& j) {
  const RingSpec ring = ring_from_json(j.at("ring"));
  const auto rows = j.at("rows").get<size_t>();
  const auto cols = j.at("cols").get<size_t>();
  RingMatrix m(ring, rows, cols);
  const json& entries = j.at("entries");
  if (entries.size() != rows) throw std::invalid_argument("matrix row count mismatch");
  for (size_t r = 0; r < rows; ++r) {
    if (entries[r].size() != cols) throw std::invalid_argument("matrix column count mismatch");
    for (size_t c = 0; c < cols; ++c) {
      m(r, c) = fraction_from_json(entries[r][c]);
      if (m(r, c).ring() != ring) throw std::invalid_argument("matrix entry ring mismatch");
    }
  }
  m.row_labels = j.value("row_labels", std::vector<std::string>{});
  m.col_labels = j.value("col_labels", std::vector<std::string>{});
  return m;
}

}  // namespace tqft
