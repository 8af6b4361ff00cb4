#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "equiline/rational.hpp"

namespace equiline {

// Squarefree integer d not in {0, 1}; selects the field Q(sqrt(d)).
// d < 0 gives a subfield of C not contained in R.
class Discriminant {
 public:
  explicit Discriminant(std::int64_t d);

  std::int64_t value() const { return d_; }
  bool is_real_field() const { return d_ > 0; }

  friend bool operator==(Discriminant, Discriminant) = default;
  friend auto operator<=>(Discriminant, Discriminant) = default;

 private:
  std::int64_t d_;
};

bool is_squarefree(std::int64_t d);

// a + b*sqrt(d) with a, b kept in lowest terms. Every element remembers its
// discriminant; arithmetic between different fields throws FieldMismatchError.
class QuadElement {
 public:
  explicit QuadElement(Discriminant d, Rational a = 0, Rational b = 0);

  static QuadElement zero(Discriminant d) { return QuadElement(d); }
  static QuadElement one(Discriminant d) { return QuadElement(d, 1); }
  // sqrt(d) itself.
  static QuadElement root(Discriminant d) { return QuadElement(d, 0, 1); }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  Discriminant discriminant() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  // a^2 - d*b^2; zero only for the zero element since d is squarefree and != 1.
  Rational norm() const;
  QuadElement conjugate() const { return QuadElement(d_, a_, -b_); }

  QuadElement& operator+=(const QuadElement& other);
  QuadElement& operator-=(const QuadElement& other);
  QuadElement& operator*=(const QuadElement& other);
  QuadElement& operator/=(const QuadElement& other);

  friend QuadElement operator+(QuadElement x, const QuadElement& y) { return x += y; }
  friend QuadElement operator-(QuadElement x, const QuadElement& y) { return x -= y; }
  friend QuadElement operator*(QuadElement x, const QuadElement& y) { return x *= y; }
  friend QuadElement operator/(QuadElement x, const QuadElement& y) { return x /= y; }
  QuadElement operator-() const { return QuadElement(d_, -a_, -b_); }

  friend bool operator==(const QuadElement& x, const QuadElement& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  // Total order on representations (not a field order); used for dedup keys.
  friend std::strong_ordering operator<=>(const QuadElement& x, const QuadElement& y);

 private:
  void require_same_field(const QuadElement& other) const;

  Discriminant d_;
  Rational a_;
  Rational b_;
};

QuadElement add(const QuadElement& x, const QuadElement& y);
QuadElement mul(const QuadElement& x, const QuadElement& y);
// Throws DivisionByZeroError on zero.
QuadElement invert(const QuadElement& x);

// True iff the value lies in R: the field is real, or the radical part is 0.
bool is_real(const QuadElement& x);

// Textual form "a/b", "a/b+c/e*sqrt(d)", "sqrt(d)", "-sqrt(d)", "c/e*sqrt(d)".
// The d inside sqrt(...) must match the ambient discriminant. Throws ParseError.
QuadElement parse_element(std::string_view text, Discriminant d);
std::string to_string(const QuadElement& x);

}  // namespace equiline
