#include "equiline/quadfield.hpp"

#include <cctype>
#include <optional>

#include "equiline/errors.hpp"

namespace equiline {

namespace {

std::strong_ordering compare(const Rational& x, const Rational& y) {
  const int c = cmp(x, y);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

bool is_squarefree(std::int64_t d) {
  // Work on the magnitude; -1 is squarefree, 0 is not.
  if (d == 0) return false;
  std::uint64_t m = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1 : static_cast<std::uint64_t>(d);
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return false;
  }
  return true;
}

Discriminant::Discriminant(std::int64_t d) : d_(d) {
  if (d == 0 || d == 1 || !is_squarefree(d)) {
    throw InvalidDiscriminantError("discriminant " + std::to_string(d) +
                                   " must be a squarefree integer other than 0 and 1");
  }
}

QuadElement::QuadElement(Discriminant d, Rational a, Rational b)
    : d_(d), a_(std::move(a)), b_(std::move(b)) {
  if (sgn(a_.get_den()) == 0 || sgn(b_.get_den()) == 0) {
    throw DivisionByZeroError("zero denominator in quadratic field element");
  }
  a_.canonicalize();
  b_.canonicalize();
}

void QuadElement::require_same_field(const QuadElement& other) const {
  if (d_ != other.d_) {
    throw FieldMismatchError("elements of Q(sqrt(" + std::to_string(d_.value()) + ")) and Q(sqrt(" +
                             std::to_string(other.d_.value()) + ")) cannot be combined");
  }
}

Rational QuadElement::norm() const {
  Rational r = a_ * a_ - Rational(d_.value()) * b_ * b_;
  return r;
}

QuadElement& QuadElement::operator+=(const QuadElement& other) {
  require_same_field(other);
  a_ += other.a_;
  b_ += other.b_;
  return *this;
}

QuadElement& QuadElement::operator-=(const QuadElement& other) {
  require_same_field(other);
  a_ -= other.a_;
  b_ -= other.b_;
  return *this;
}

QuadElement& QuadElement::operator*=(const QuadElement& other) {
  require_same_field(other);
  Rational a = a_ * other.a_ + b_ * other.b_ * Rational(d_.value());
  Rational b = a_ * other.b_ + b_ * other.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadElement& QuadElement::operator/=(const QuadElement& other) {
  require_same_field(other);
  return *this *= invert(other);
}

std::strong_ordering operator<=>(const QuadElement& x, const QuadElement& y) {
  if (auto c = x.d_ <=> y.d_; c != 0) return c;
  if (auto c = compare(x.a_, y.a_); c != 0) return c;
  return compare(x.b_, y.b_);
}

QuadElement add(const QuadElement& x, const QuadElement& y) { return x + y; }

QuadElement mul(const QuadElement& x, const QuadElement& y) { return x * y; }

QuadElement invert(const QuadElement& x) {
  const Rational n = x.norm();
  if (sgn(n) == 0) throw DivisionByZeroError("inverse of zero");
  Rational a = x.rational_part() / n;
  Rational b = -x.radical_part() / n;
  return QuadElement(x.discriminant(), std::move(a), std::move(b));
}

bool is_real(const QuadElement& x) { return x.discriminant().is_real_field() || x.is_rational(); }

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, Discriminant d) : d_(d) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
    }
  }

  QuadElement parse() {
    if (text_.empty()) fail("empty element");
    std::optional<Rational> rational;
    std::optional<Rational> radical;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      first = false;
      auto [coefficient, has_root] = term();
      coefficient *= sign;
      auto& slot = has_root ? radical : rational;
      if (slot) fail(has_root ? "more than one sqrt term" : "more than one rational term");
      slot = coefficient;
    }
    return QuadElement(d_, rational.value_or(0), radical.value_or(0));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("", "cannot parse element '" + text_ + "': " + why);
  }

  bool consume(std::string_view token) {
    if (text_.compare(pos_, token.size(), token) != 0) return false;
    pos_ += token.size();
    return true;
  }

  std::string digits(bool allow_sign) {
    std::string out;
    if (allow_sign && peek() == '-') {
      out += '-';
      ++pos_;
    }
    while (std::isdigit(static_cast<unsigned char>(peek()))) out += text_[pos_++];
    if (out.empty() || out == "-") fail("expected digits at position " + std::to_string(pos_));
    return out;
  }

  void radical() {
    if (!consume("sqrt(")) fail("expected 'sqrt('");
    const std::string value = digits(true);
    if (!consume(")")) fail("expected ')'");
    if (value != std::to_string(d_.value())) {
      throw FieldMismatchError("element '" + text_ + "' uses sqrt(" + value +
                               ") but the ambient discriminant is " + std::to_string(d_.value()));
    }
  }

  std::pair<Rational, bool> term() {
    if (peek() == 's') {
      radical();
      return {Rational(1), true};
    }
    Integer num(digits(false));
    Integer den(1);
    if (consume("/")) {
      den = Integer(digits(false));
      if (den == 0) throw DivisionByZeroError("zero denominator in '" + text_ + "'");
    }
    Rational value(num, den);
    value.canonicalize();
    if (consume("*")) {
      radical();
      return {value, true};
    }
    return {value, false};
  }

  Discriminant d_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadElement parse_element(std::string_view text, Discriminant d) { return ElementParser(text, d).parse(); }

std::string to_string(const QuadElement& x) {
  const Rational& a = x.rational_part();
  const Rational& b = x.radical_part();
  if (sgn(b) == 0) return to_fraction_string(a);
  const std::string root = "sqrt(" + std::to_string(x.discriminant().value()) + ")";
  const Rational magnitude = abs(b);
  std::string radical = magnitude == 1 ? root : to_fraction_string(magnitude) + "*" + root;
  if (sgn(a) == 0) return (sgn(b) < 0 ? "-" : "") + radical;
  return to_fraction_string(a) + (sgn(b) < 0 ? "-" : "+") + radical;
}

}  // namespace equiline
