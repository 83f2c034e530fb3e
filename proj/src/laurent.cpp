#include "paritypoly/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace paritypoly {

namespace {

// Storage/render key: (s, t, theta, q).
constexpr std::array<std::size_t, 4> kOrderKey{0, 1, 3, 2};

bool term_less(const Term& a, const Term& b) { return monomial_less(a.exp, b.exp); }

Exponents add_exp(const Exponents& a, const Exponents& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Exponents sub_exp(const Exponents& a, const Exponents& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

// Sorted, merged, zero-free.
std::vector<Term> normalize_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return out;
}

}  // namespace

char var_symbol(Var v) {
  switch (v) {
    case Var::S: return 's';
    case Var::T: return 't';
    case Var::Q: return 'q';
    case Var::Theta: return 'h';
  }
  return '?';
}

bool monomial_less(const Exponents& a, const Exponents& b) {
  for (auto k : kOrderKey) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.push_back(Term{{0, 0, 0, 0}, mpz_class(constant)});
}

LaurentPoly::LaurentPoly(const mpz_class& constant) {
  if (constant != 0) terms_.push_back(Term{{0, 0, 0, 0}, constant});
}

LaurentPoly LaurentPoly::monomial(const Exponents& exp, const mpz_class& coef) {
  LaurentPoly p;
  if (coef != 0) p.terms_.push_back(Term{exp, coef});
  return p;
}

LaurentPoly LaurentPoly::variable(Var v, int power) {
  Exponents e{0, 0, 0, 0};
  exponent(e, v) = power;
  return monomial(e);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = normalize_terms(std::move(terms));
  return p;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coef == 1 || terms_[0].coef == -1);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].coef == 1 && terms_[0].exp == Exponents{0, 0, 0, 0};
}

Exponents LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {0, 0, 0, 0};
  Exponents m = terms_.front().exp;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < 4; ++i) m[i] = std::min(m[i], t.exp[i]);
  }
  return m;
}

Exponents LaurentPoly::max_exponents() const {
  if (terms_.empty()) return {0, 0, 0, 0};
  Exponents m = terms_.front().exp;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < 4; ++i) m[i] = std::max(m[i], t.exp[i]);
  }
  return m;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, int sign) {
  if (other.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && monomial_less(a->exp, b->exp))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || monomial_less(b->exp, a->exp)) {
      out.push_back(Term{b->exp, sign > 0 ? b->coef : mpz_class(-b->coef)});
      ++b;
    } else {
      mpz_class c = sign > 0 ? mpz_class(a->coef + b->coef) : mpz_class(a->coef - b->coef);
      if (c != 0) out.push_back(Term{a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  add_scaled(other, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) return b.times_monomial(a.terms_[0].exp, a.terms_[0].coef);
  if (b.is_monomial()) return a.times_monomial(b.terms_[0].exp, b.terms_[0].coef);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back(Term{add_exp(x.exp, y.exp), x.coef * y.coef});
  }
  return LaurentPoly::from_terms(std::move(prod));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::times_monomial(const Exponents& exp, const mpz_class& coef) const {
  if (coef == 0) return {};
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  // Shifting by a monomial preserves the order.
  for (const auto& t : terms_) p.terms_.push_back(Term{add_exp(t.exp, exp), t.coef * coef});
  return p;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw InexactDivision("not a unit: " + to_string());
  const auto& t = terms_[0];
  return monomial({-t.exp[0], -t.exp[1], -t.exp[2], -t.exp[3]}, t.coef);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coef < 0;
    mpz_class mag = abs(t.coef);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (auto v : kAllVars) {
      int e = exponent(t.exp, v);
      if (e == 0) continue;
      mono += var_symbol(v);
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mag != 1 || mono.empty()) out << mag.get_str();
    out << mono;
  }
  return out.str();
}

LaurentPoly pow(Var v, int e) { return LaurentPoly::variable(v, e); }

namespace {

// Division in Z[s,t,q,h] of polynomials with non-negative exponents.
std::optional<LaurentPoly> poly_divide(LaurentPoly r, const LaurentPoly& b) {
  const Term lead_b = b.terms().back();
  std::vector<Term> quotient;
  while (!r.is_zero()) {
    const Term& lead_r = r.terms().back();
    Exponents e = sub_exp(lead_r.exp, lead_b.exp);
    for (int x : e) {
      if (x < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(lead_r.coef.get_mpz_t(), lead_b.coef.get_mpz_t())) return std::nullopt;
    mpz_class c = lead_r.coef / lead_b.coef;
    r -= b.times_monomial(e, c);
    quotient.push_back(Term{e, std::move(c)});
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw InexactDivision("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  if (b.is_monomial()) {
    const Term& t = b.terms()[0];
    if (t.coef == 1 || t.coef == -1) {
      return a.times_monomial({-t.exp[0], -t.exp[1], -t.exp[2], -t.exp[3]}, t.coef);
    }
  }
  Exponents ma = a.min_exponents();
  Exponents mb = b.min_exponents();
  LaurentPoly pa = a.times_monomial({-ma[0], -ma[1], -ma[2], -ma[3]});
  LaurentPoly pb = b.times_monomial({-mb[0], -mb[1], -mb[2], -mb[3]});
  auto q = poly_divide(std::move(pa), pb);
  if (!q) return std::nullopt;
  return q->times_monomial(sub_exp(ma, mb));
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = try_exact_div(a, b);
  if (!q) throw InexactDivision("inexact division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return std::move(*q);
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return try_exact_div(a, b).has_value();
}

Canonical canonicalize(const LaurentPoly& a) {
  if (a.is_zero()) return {LaurentPoly{}, LaurentPoly(1)};
  Exponents m = a.min_exponents();
  LaurentPoly shifted = a.times_monomial({-m[0], -m[1], -m[2], -m[3]});
  int sign = shifted.terms().front().coef > 0 ? 1 : -1;
  if (sign < 0) shifted = -shifted;
  return {std::move(shifted), LaurentPoly::monomial(m, sign)};
}

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
  return canonicalize(a).poly == canonicalize(b).poly;
}

int width(const LaurentPoly& a, Var v) {
  if (a.is_zero()) throw VanishingPolynomial("width of the zero polynomial is undefined");
  return exponent(a.max_exponents(), v) - exponent(a.min_exponents(), v);
}

LaurentPoly substitute_inverses(const LaurentPoly& a, const std::vector<Var>& vars) {
  std::vector<Term> terms = a.terms();
  for (auto& t : terms) {
    for (auto v : vars) exponent(t.exp, v) = -exponent(t.exp, v);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly substitute_inverses(const LaurentPoly& a, std::initializer_list<Var> vars) {
  return substitute_inverses(a, std::vector<Var>(vars));
}

namespace {

// Recursive primitive-PRS gcd over Z[s,t,q,h]. Inputs have non-negative exponents.

std::optional<Var> leading_var(const LaurentPoly& a, const LaurentPoly& b) {
  for (auto v : kAllVars) {
    for (const auto* p : {&a, &b}) {
      for (const auto& t : p->terms()) {
        if (exponent(t.exp, v) != 0) return v;
      }
    }
  }
  return std::nullopt;
}

int degree_in(const LaurentPoly& a, Var v) { return exponent(a.max_exponents(), v); }

std::map<int, LaurentPoly> coefficients_in(const LaurentPoly& a, Var v) {
  std::map<int, std::vector<Term>> groups;
  for (auto t : a.terms()) {
    int d = exponent(t.exp, v);
    exponent(t.exp, v) = 0;
    groups[d].push_back(std::move(t));
  }
  std::map<int, LaurentPoly> out;
  for (auto& [d, ts] : groups) out.emplace(d, LaurentPoly::from_terms(std::move(ts)));
  return out;
}

LaurentPoly positive_lead(LaurentPoly a) {
  if (!a.is_zero() && a.terms().back().coef < 0) a = -a;
  return a;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_in(const LaurentPoly& a, Var v) {
  LaurentPoly g;
  for (const auto& [d, c] : coefficients_in(a, v)) {
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

LaurentPoly primitive_part(const LaurentPoly& a, Var v) {
  if (a.is_zero()) return a;
  return positive_lead(exact_div(a, content_in(a, v)));
}

LaurentPoly pseudo_remainder(LaurentPoly r, const LaurentPoly& b, Var v) {
  const int db = degree_in(b, v);
  const LaurentPoly lcb = coefficients_in(b, v).rbegin()->second;
  while (!r.is_zero() && degree_in(r, v) >= db) {
    const int dr = degree_in(r, v);
    LaurentPoly lcr = coefficients_in(r, v).rbegin()->second;
    Exponents shift{0, 0, 0, 0};
    exponent(shift, v) = dr - db;
    r = lcb * r - (lcr * b).times_monomial(shift);
  }
  return r;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return positive_lead(b);
  if (b.is_zero()) return positive_lead(a);
  auto v = leading_var(a, b);
  if (!v) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.terms()[0].coef.get_mpz_t(), b.terms()[0].coef.get_mpz_t());
    return LaurentPoly(g);
  }
  LaurentPoly ca = content_in(a, *v);
  LaurentPoly cb = content_in(b, *v);
  LaurentPoly c = poly_gcd(ca, cb);
  LaurentPoly pa = exact_div(a, ca);
  LaurentPoly pb = exact_div(b, cb);
  if (degree_in(pa, *v) < degree_in(pb, *v)) std::swap(pa, pb);
  while (!pb.is_zero() && degree_in(pb, *v) > 0) {
    LaurentPoly r = pseudo_remainder(pa, pb, *v);
    pa = std::move(pb);
    pb = primitive_part(r, *v);
  }
  LaurentPoly g = pb.is_zero() ? primitive_part(pa, *v) : LaurentPoly(1);
  return positive_lead(c * g);
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  auto strip = [](const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Exponents m = p.min_exponents();
    return p.times_monomial({-m[0], -m[1], -m[2], -m[3]});
  };
  return canonicalize(poly_gcd(strip(a), strip(b))).poly;
}

namespace {

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = get() == '-' ? -1 : 1;
    }
    terms.push_back(parse_term(sign));
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = get();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      terms.push_back(parse_term(c == '-' ? -1 : 1));
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  Term parse_term(int sign) {
    skip_ws();
    Term t{{0, 0, 0, 0}, mpz_class(sign)};
    bool any = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coef *= mpz_class(read_digits());
      any = true;
    }
    while (true) {
      skip_ws();
      if (!at_end() && peek() == '*') {
        get();
        skip_ws();
      }
      if (at_end()) break;
      char c = peek();
      std::optional<Var> v;
      if (c == 's') v = Var::S;
      if (c == 't') v = Var::T;
      if (c == 'q') v = Var::Q;
      if (c == 'h') v = Var::Theta;
      if (!v) break;
      get();
      int e = 1;
      if (!at_end() && peek() == '^') {
        get();
        int esign = 1;
        if (!at_end() && peek() == '-') {
          get();
          esign = -1;
        }
        e = esign * std::stoi(read_digits());
      }
      exponent(t.exp, *v) += e;
      any = true;
    }
    if (!any) fail("expected a term");
    return t;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " +
                                what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return LaurentParser(text).parse(); }

}  // namespace paritypoly
