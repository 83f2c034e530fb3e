#include "paritypoly/foxcalc.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace paritypoly {

Generator Generator::arc_label(int i) {
  if (i <= 0) throw std::invalid_argument("arc index must be positive");
  return {Kind::Arc, i};
}

std::string Generator::name() const {
  switch (kind) {
    case Kind::Arc: return "a" + std::to_string(arc);
    case Kind::S: return "s";
    case Kind::Q: return "q";
    case Kind::Theta: return "h";
  }
  return "?";
}

GroupWord::GroupWord(const Generator& g, int exponent) {
  if (exponent != 1 && exponent != -1) throw std::invalid_argument("letter exponent must be +-1");
  letters_.push_back({g, exponent});
}

GroupWord GroupWord::from_letters(const std::vector<Letter>& letters) {
  GroupWord w;
  for (const auto& l : letters) w.push(l);
  return w;
}

void GroupWord::push(const Letter& l) {
  if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exponent == -l.exponent) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back({it->gen, -it->exponent});
  }
  return w;
}

GroupWord& GroupWord::operator*=(const GroupWord& other) {
  for (const auto& l : other.letters_) push(l);
  return *this;
}

std::string GroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.gen.name();
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

GroupWord multiply(const GroupWord& u, const GroupWord& v) { return u * v; }
GroupWord invert(const GroupWord& u) { return u.inverse(); }

GroupWord commutator(const GroupWord& a, const GroupWord& b) {
  return a * b * a.inverse() * b.inverse();
}

GroupWord parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<Letter> letters;
  while (in >> tok) {
    if (tok == "1") continue;
    int exponent = 1;
    std::string base = tok;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      std::string e = tok.substr(caret + 1);
      base = tok.substr(0, caret);
      if (e == "-1") {
        exponent = -1;
      } else if (e != "1") {
        throw std::invalid_argument("bad exponent in word token '" + tok + "'");
      }
    }
    Generator g;
    if (base == "s") {
      g = Generator::s();
    } else if (base == "q") {
      g = Generator::q();
    } else if (base == "h") {
      g = Generator::theta();
    } else if (base.size() > 1 && base[0] == 'a' &&
               std::all_of(base.begin() + 1, base.end(),
                           [](unsigned char c) { return std::isdigit(c); })) {
      g = Generator::arc_label(std::stoi(base.substr(1)));
    } else {
      throw std::invalid_argument("bad word token '" + tok + "'");
    }
    letters.push_back({g, exponent});
  }
  return GroupWord::from_letters(letters);
}

GroupRingElement::GroupRingElement(const GroupWord& w, const mpz_class& coef) { add(w, coef); }

void GroupRingElement::add(const GroupWord& w, const mpz_class& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement e;
  for (const auto& [w, c] : terms_) e.terms_.emplace(w, -c);
  return e;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) out.add(u * v, cu * cv);
  }
  return out;
}

GroupRingElement operator*(const GroupWord& w, const GroupRingElement& e) {
  GroupRingElement out;
  for (const auto& [v, c] : e.terms_) out.add(w * v, c);
  return out;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    mpz_class mag = abs(c);
    if (mag != 1) out += mag.get_str() + "*";
    out += "(" + w.to_string() + ")";
  }
  return out;
}

GroupRingElement fox_derivative(const GroupWord& w, const Generator& g) {
  // d(l_1...l_k) = sum_i l_1...l_{i-1} d(l_i); d(g) = 1, d(g^-1) = -g^-1.
  GroupRingElement out;
  GroupWord prefix;
  for (const auto& l : w.letters()) {
    if (l.gen == g) {
      if (l.exponent > 0) {
        out.add(prefix, 1);
      } else {
        out.add(prefix * GroupWord(g, -1), -1);
      }
    }
    prefix *= GroupWord(l.gen, l.exponent);
  }
  return out;
}

Exponents standard_image(const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::Arc: return {0, 1, 0, 0};
    case Generator::Kind::S: return {1, 0, 0, 0};
    case Generator::Kind::Q: return {0, 0, 1, 0};
    case Generator::Kind::Theta: return {0, 0, 0, 1};
  }
  return {0, 0, 0, 0};
}

namespace {

Exponents word_image(const GroupWord& w, const MonomialAssignment& assignment) {
  Exponents e{0, 0, 0, 0};
  for (const auto& l : w.letters()) {
    Exponents g = assignment(l.gen);
    for (std::size_t i = 0; i < 4; ++i) e[i] += l.exponent * g[i];
  }
  return e;
}

}  // namespace

LaurentPoly abelianize(const GroupRingElement& e, const MonomialAssignment& assignment) {
  std::vector<Term> terms;
  terms.reserve(e.terms().size());
  for (const auto& [w, c] : e.terms()) terms.push_back(Term{word_image(w, assignment), c});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly abelianize(const GroupWord& w, const MonomialAssignment& assignment) {
  return LaurentPoly::monomial(word_image(w, assignment));
}

std::vector<Generator> support(const GroupWord& w) {
  std::vector<Generator> out;
  for (const auto& l : w.letters()) {
    if (std::find(out.begin(), out.end(), l.gen) == out.end()) out.push_back(l.gen);
  }
  return out;
}

bool fundamental_identity_check(const GroupWord& w, const MonomialAssignment& assignment) {
  LaurentPoly lhs;
  for (const auto& g : support(w)) {
    LaurentPoly image = LaurentPoly::monomial(assignment(g)) - LaurentPoly(1);
    lhs += abelianize(fox_derivative(w, g), assignment) * image;
  }
  return lhs == abelianize(w, assignment) - LaurentPoly(1);
}

}  // namespace paritypoly
