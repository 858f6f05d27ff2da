#include "braidlef/serialize.hpp"

#include <string>

#include "braidlef/errors.hpp"

namespace braidlef {

using nlohmann::ordered_json;

namespace {

Int int_from_string(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + s + "'");
  }
}

}  // namespace

ordered_json ring_to_json(const RingElem& x) {
  ordered_json terms = ordered_json::array();
  for (const auto& [w, c] : x.terms())
    terms.push_back({{"word", w.str()}, {"coeff", c.str()}});
  return ordered_json{{"terms", std::move(terms)}};
}

RingElem ring_from_json(const ordered_json& j, int n) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("ring element: expected {\"terms\": [...]}");
  RingElem x(n);
  for (const auto& t : j["terms"]) {
    if (!t.contains("word") || !t.contains("coeff"))
      throw ParseError("ring element term: expected word and coeff");
    x.add_term(FreeWord::parse(t["word"].get<std::string>(), n, Basis::a),
               int_from_string(t["coeff"].get<std::string>()));
  }
  return x;
}

ordered_json normal_form_to_json(const NormalForm& nf) {
  return ordered_json{{"mu", nf.mu},
                      {"I", nf.I},
                      {"gamma", braid_str(nf.gamma)},
                      {"n", nf.n}};
}

NormalForm normal_form_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("mu") || !j.contains("I") ||
      !j.contains("gamma") || !j.contains("n"))
    throw ParseError("normal form: expected mu, I, gamma, n");
  NormalForm nf;
  nf.mu = j["mu"].get<long long>();
  nf.I = j["I"].get<std::vector<long long>>();
  nf.n = j["n"].get<int>();
  nf.gamma = parse_braid(j["gamma"].get<std::string>(), nf.n);
  nf.central_only = nf.I.empty();
  return nf;
}

ordered_json laurent_to_json(const LaurentPoly& p) {
  ordered_json j = ordered_json::object();
  for (const auto& [e, c] : p.coeffs()) j[std::to_string(e)] = c.str();
  return j;
}

LaurentPoly laurent_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("laurent polynomial: expected object");
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) {
    long long e = 0;
    try {
      std::size_t used = 0;
      e = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("laurent exponent: not an integer: '" + key + "'");
    }
    p.add_term(e, int_from_string(value.get<std::string>()));
  }
  return p;
}

ordered_json laurent_matrix_to_json(const LaurentMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.dim; ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.dim; ++j)
      row.push_back(laurent_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace braidlef
