#include "dqsym/json_io.hpp"

#include <stdexcept>

namespace dqsym {

namespace {

Json exponents_to_json(const ExponentList& list) {
  Json out = Json::array();
  for (const auto& [index, exp] : list) out.push_back({index, exp});
  return out;
}

ExponentList exponents_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("exponent list must be an array");
  ExponentList out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
        !pair[1].is_number_unsigned())
      throw std::invalid_argument("exponent entries must be [index, exponent] pairs");
    out.emplace_back(pair[0].get<unsigned>(), pair[1].get<unsigned>());
  }
  return out;
}

Json injection_to_json(const OrderedInjection& f) {
  Json out = Json::array();
  for (auto image : f.images()) out.push_back(image);
  return out;
}

}  // namespace

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms())
    out.push_back({{"coeff", c.str()},
                   {"x", exponents_to_json(m.x_exponents())},
                   {"y", exponents_to_json(m.y_exponents())}});
  return out;
}

Json to_json(const Composition& c) {
  Json out = Json::array();
  for (unsigned part : c) out.push_back(part);
  return out;
}

Json to_json(const Expansion& e) {
  Json out = Json::array();
  for (const auto& [gamma, c] : e.coefficients())
    out.push_back({{"gamma", to_json(gamma)}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const SkewEdgeTableau& s) {
  return {{"c", s.total_boxes()}, {"a", s.empty_boxes()}, {"edges", s.edges()}};
}

Json to_json(const SkylineTableau& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) rows.push_back(to_json(row));
  return {{"gamma", to_json(t.gamma)},
          {"iota", injection_to_json(t.iota)},
          {"jota", injection_to_json(t.jota)},
          {"rows", rows}};
}

Json to_json(const CoefficientRecord& r) {
  return {{"alpha", to_json(r.alpha)},
          {"beta", to_json(r.beta)},
          {"gamma", to_json(r.gamma)},
          {"coeff", to_json(r.coeff)}};
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of terms");
  Polynomial out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term["coeff"].is_string())
      throw std::invalid_argument("term needs a decimal string 'coeff'");
    Integer c;
    try {
      c = Integer(term["coeff"].get<std::string>());
    } catch (const std::exception&) {
      throw std::invalid_argument("bad coefficient '" + term["coeff"].get<std::string>() + "'");
    }
    const Json empty = Json::array();
    Monomial m(exponents_from_json(term.value("x", empty)),
               exponents_from_json(term.value("y", empty)));
    out.add_term(m, c);
  }
  return out;
}

Composition composition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("composition must be an integer array");
  std::vector<unsigned> parts;
  for (const auto& part : j) {
    if (!part.is_number_unsigned()) throw std::invalid_argument("composition parts must be positive integers");
    parts.push_back(part.get<unsigned>());
  }
  return Composition(std::move(parts));
}

Expansion expansion_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expansion must be an array");
  Expansion out;
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("gamma") || !entry.contains("coeff"))
      throw std::invalid_argument("expansion entries need 'gamma' and 'coeff'");
    out.add(composition_from_json(entry["gamma"]), polynomial_from_json(entry["coeff"]));
  }
  return out;
}

SkewEdgeTableau tableau_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("c") || !j.contains("a"))
    throw std::invalid_argument("tableau needs 'c' and 'a'");
  std::vector<unsigned> edges;
  if (j.contains("edges")) edges = j["edges"].get<std::vector<unsigned>>();
  return SkewEdgeTableau(j["c"].get<unsigned>(), j["a"].get<unsigned>(), std::move(edges));
}

}  // namespace dqsym
