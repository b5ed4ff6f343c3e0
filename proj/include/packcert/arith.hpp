#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace packcert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "p/q" or a finite decimal literal ("-0.125", "3e-2") exactly.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

inline double to_double(const Rational& x) { return x.get_d(); }

bool is_integer(const Rational& x);

/// C(a, b) for a, b >= 0; zero when b > a.
Integer binomial(std::int64_t a, std::int64_t b);

struct SqrtResult {
  Integer floor_root;
  bool is_exact = false;
};

/// Floor square root of a nonnegative integer.
SqrtResult int_sqrt(const Integer& x);

/// Exact square root when numerator and denominator are both perfect squares.
std::optional<Rational> rational_sqrt(const Rational& x);

/// Sign of q - (a + sqrt(b)), decided without floating point. Requires b >= 0.
std::strong_ordering cmp_surd(const Rational& q, const Rational& a, const Rational& b);

/// Smallest integer m with m >= a + sqrt(b).
Integer ceil_surd(const Rational& a, const Rational& b);

/// Element a + c*sqrt(b) of a real quadratic field Q(sqrt(b)), b >= 0.
///
/// The radicand is normalized to a positive non-square integer with square
/// factors below 1024^2 pulled out (or the element is rational and both c
/// and b are zero). Binary operations accept
/// operands whose radicands differ by a rational square factor; combining
/// genuinely different quadratic fields throws std::domain_error.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(const Rational& a);  // NOLINT(google-explicit-constructor)
  QuadraticSurd(long a) : QuadraticSurd(Rational(a)) {}  // NOLINT(google-explicit-constructor)
  QuadraticSurd(const Rational& a, const Rational& c, const Rational& b);

  /// sqrt(x) for x >= 0; rational when x is a rational square.
  static QuadraticSurd sqrt(const Rational& x);

  const Rational& rational_part() const { return a_; }
  const Rational& coefficient() const { return c_; }
  const Rational& radicand() const { return b_; }

  bool is_rational() const { return c_ == 0; }
  std::optional<Rational> to_rational() const;
  bool is_integer() const;

  int sign() const;
  double approx() const;
  QuadraticSurd conjugate() const;
  std::string str() const;

  QuadraticSurd operator-() const;
  QuadraticSurd& operator+=(const QuadraticSurd& rhs);
  QuadraticSurd& operator-=(const QuadraticSurd& rhs);
  QuadraticSurd& operator*=(const QuadraticSurd& rhs);
  QuadraticSurd& operator/=(const QuadraticSurd& rhs);

  friend QuadraticSurd operator+(QuadraticSurd lhs, const QuadraticSurd& rhs) { return lhs += rhs; }
  friend QuadraticSurd operator-(QuadraticSurd lhs, const QuadraticSurd& rhs) { return lhs -= rhs; }
  friend QuadraticSurd operator*(QuadraticSurd lhs, const QuadraticSurd& rhs) { return lhs *= rhs; }
  friend QuadraticSurd operator/(QuadraticSurd lhs, const QuadraticSurd& rhs) { return lhs /= rhs; }

  /// Exact comparison; unlike arithmetic it also works across quadratic fields.
  friend int compare(const QuadraticSurd& lhs, const QuadraticSurd& rhs);
  friend bool operator==(const QuadraticSurd& lhs, const QuadraticSurd& rhs) { return compare(lhs, rhs) == 0; }
  friend std::strong_ordering operator<=>(const QuadraticSurd& lhs, const QuadraticSurd& rhs) {
    const int s = compare(lhs, rhs);
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  void normalize();
  // Rewrites rhs's irrational part over this radicand; throws when incompatible.
  Rational aligned_coefficient(const QuadraticSurd& rhs) const;

  Rational a_{0};
  Rational c_{0};
  Rational b_{0};
};

using Surd = QuadraticSurd;

}  // namespace packcert
