#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace paritypoly {

/// The four ring variables. Theta is written `h` in all ASCII input/output.
enum class Var : std::uint8_t { S = 0, T = 1, Q = 2, Theta = 3 };

inline constexpr std::array<Var, 4> kAllVars{Var::S, Var::T, Var::Q, Var::Theta};

/// Exponent vector indexed by Var.
using Exponents = std::array<int, 4>;

inline int& exponent(Exponents& e, Var v) { return e[static_cast<std::size_t>(v)]; }
inline int exponent(const Exponents& e, Var v) { return e[static_cast<std::size_t>(v)]; }

char var_symbol(Var v);

/// Fixed monomial order used for storage, rendering and the canonical sign rule:
/// lexicographic on (e_s, e_t, e_theta, e_q).
bool monomial_less(const Exponents& a, const Exponents& b);

/// Raised when a division that must be exact is not.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a width is requested from the zero polynomial.
class VanishingPolynomial : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Term {
  Exponents exp{};
  mpz_class coef;

  bool operator==(const Term& other) const { return exp == other.exp && coef == other.coef; }
};

/// Integer Laurent polynomial in s, t, q, theta.
///
/// Terms are kept sorted ascending by monomial_less with no zero coefficients, so
/// structural equality is polynomial equality and the zero polynomial is empty.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const mpz_class& constant);

  static LaurentPoly monomial(const Exponents& exp, const mpz_class& coef = 1);
  static LaurentPoly variable(Var v, int power = 1);
  /// Builds from unsorted terms; equal monomials are merged.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// True for +-monomials, the units of the Laurent ring.
  bool is_unit() const;
  bool is_one() const;

  /// Minimum exponent of each variable; all zero for the zero polynomial.
  Exponents min_exponents() const;
  Exponents max_exponents() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly& other) const { return terms_ == other.terms_; }

  /// Multiplies by coef * (monomial exp).
  LaurentPoly times_monomial(const Exponents& exp, const mpz_class& coef = 1) const;
  /// Inverse of a unit; throws InexactDivision otherwise.
  LaurentPoly unit_inverse() const;

  std::string to_string() const;

 private:
  void add_scaled(const LaurentPoly& other, int sign);

  std::vector<Term> terms_;
};

/// Power of a variable as a polynomial: s, t^-1, and so on.
LaurentPoly pow(Var v, int e);

/// Returns c with a = b * c. Both operands are first stripped of their monomial
/// content, division happens in the ordinary polynomial ring, and the monomial
/// quotient is restored. Throws InexactDivision if no Laurent quotient exists.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// True iff b divides a in the Laurent ring (b = 0 divides only 0).
bool divides(const LaurentPoly& b, const LaurentPoly& a);

struct Canonical {
  LaurentPoly poly;
  /// Signed monomial with input = poly * unit.
  LaurentPoly unit;
};

/// Canonical representative of a's unit class: every variable has minimum
/// exponent 0 and the coefficient of the smallest monomial is positive.
Canonical canonicalize(const LaurentPoly& a);

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);

/// max - min exponent of v. Throws VanishingPolynomial for zero.
int width(const LaurentPoly& a, Var v);

/// Replaces each variable in vars by its inverse.
LaurentPoly substitute_inverses(const LaurentPoly& a, std::initializer_list<Var> vars);
LaurentPoly substitute_inverses(const LaurentPoly& a, const std::vector<Var>& vars);

/// Greatest common divisor, canonicalized. gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Parses the text rendering, e.g. "q^2 + h^2 + st - sth^2" or "-2s^-1t + 3".
/// Throws std::invalid_argument.
LaurentPoly parse_laurent(std::string_view text);

}  // namespace paritypoly
