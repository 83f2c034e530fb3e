#include "paritypoly/json_io.hpp"

#include <stdexcept>

namespace paritypoly {

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    nlohmann::json term;
    if (t.coef.fits_slong_p()) {
      term["c"] = t.coef.get_si();
    } else {
      term["c"] = t.coef.get_str();
    }
    term["s"] = exponent(t.exp, Var::S);
    term["t"] = exponent(t.exp, Var::T);
    term["q"] = exponent(t.exp, Var::Q);
    term["h"] = exponent(t.exp, Var::Theta);
    out.push_back(std::move(term));
  }
  return out;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Term> terms;
  for (const auto& term : j) {
    Term t;
    const auto& c = term.at("c");
    t.coef = c.is_string() ? mpz_class(c.get<std::string>()) : mpz_class(c.get<long>());
    exponent(t.exp, Var::S) = term.value("s", 0);
    exponent(t.exp, Var::T) = term.value("t", 0);
    exponent(t.exp, Var::Q) = term.value("q", 0);
    exponent(t.exp, Var::Theta) = term.value("h", 0);
    terms.push_back(std::move(t));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace paritypoly
