#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "paritypoly/laurent.hpp"

namespace paritypoly {

/// Free generator: a semi-arc label a_i (i >= 1) or one of s, q, theta.
struct Generator {
  enum class Kind : std::uint8_t { Arc, S, Q, Theta };

  Kind kind = Kind::Arc;
  int arc = 0;

  static Generator arc_label(int i);
  static Generator s() { return {Kind::S, 0}; }
  static Generator q() { return {Kind::Q, 0}; }
  static Generator theta() { return {Kind::Theta, 0}; }

  std::string name() const;
  auto operator<=>(const Generator&) const = default;
};

struct Letter {
  Generator gen;
  int exponent = 1;  // +1 or -1

  auto operator<=>(const Letter&) const = default;
};

/// Freely reduced word in the free group on Generators.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(const Generator& g, int exponent = 1);
  /// Reduces the given letters.
  static GroupWord from_letters(const std::vector<Letter>& letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  GroupWord inverse() const;
  GroupWord& operator*=(const GroupWord& other);
  friend GroupWord operator*(GroupWord a, const GroupWord& b) { return a *= b; }

  /// Space-separated letters, e.g. "a1 a2 s a1^-1 s^-1"; the empty word is "1".
  std::string to_string() const;

  auto operator<=>(const GroupWord&) const = default;

 private:
  void push(const Letter& l);

  std::vector<Letter> letters_;
};

GroupWord multiply(const GroupWord& u, const GroupWord& v);
GroupWord invert(const GroupWord& u);
GroupWord commutator(const GroupWord& a, const GroupWord& b);

/// Parses the debug word syntax: letters a<i>, s, q, h each optionally followed
/// by ^-1 (or ^1), separated by whitespace. "1" is the empty word.
GroupWord parse_word(std::string_view text);

/// Element of Z[F]: finite integer combination of reduced words.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(const GroupWord& w, const mpz_class& coef = 1);

  const std::map<GroupWord, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  GroupRingElement operator-() const;
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    return a += b;
  }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
    return a -= b;
  }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  /// Left multiplication by a group element.
  friend GroupRingElement operator*(const GroupWord& w, const GroupRingElement& e);

  void add(const GroupWord& w, const mpz_class& coef);

  bool operator==(const GroupRingElement&) const = default;
  std::string to_string() const;

 private:
  std::map<GroupWord, mpz_class> terms_;
};

/// Free differential d w / d g.
GroupRingElement fox_derivative(const GroupWord& w, const Generator& g);

/// Sends each generator to a Laurent monomial.
using MonomialAssignment = std::function<Exponents(const Generator&)>;

/// a_i -> t, s -> s, q -> q, theta -> theta.
Exponents standard_image(const Generator& g);

/// Ring homomorphism Z[F] -> Z[s^+-1, t^+-1, q^+-1, theta^+-1].
LaurentPoly abelianize(const GroupRingElement& e, const MonomialAssignment& assignment = standard_image);
LaurentPoly abelianize(const GroupWord& w, const MonomialAssignment& assignment = standard_image);

/// Generators occurring in w, in first-occurrence order.
std::vector<Generator> support(const GroupWord& w);

/// Checks sum_g ab(dw/dg) (ab(g) - 1) == ab(w) - 1.
bool fundamental_identity_check(const GroupWord& w,
                                const MonomialAssignment& assignment = standard_image);

}  // namespace paritypoly
