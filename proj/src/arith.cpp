#include "packcert/arith.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace packcert {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
  }
  if (text.empty()) throw std::invalid_argument("empty numeric literal");

  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    Integer num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0 || den.set_str(text.substr(slash + 1), 10) != 0) {
      throw std::invalid_argument("malformed rational literal '" + raw + "'");
    }
    return make_rational(num, den);
  }

  // Decimal literal: [sign] digits [. digits] [e|E [sign] digits]
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  std::string digits;
  long exponent = 0;
  bool seen_digit = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    digits.push_back(text[pos++]);
    seen_digit = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits.push_back(text[pos++]);
      --exponent;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed numeric literal '" + raw + "'");
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(text.substr(pos), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed exponent in '" + raw + "'");
    }
    pos += used;
    exponent += e;
  }
  if (pos != text.size()) throw std::invalid_argument("trailing characters in '" + raw + "'");

  Integer mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? make_rational(mantissa, scale) : Rational(mantissa * scale);
}

std::string to_string(const Integer& x) { return x.get_str(10); }

std::string to_string(const Rational& x) {
  Rational q = x;
  q.canonicalize();
  return q.get_str(10);
}

bool is_integer(const Rational& x) { return mpz_divisible_p(x.get_num_mpz_t(), x.get_den_mpz_t()) != 0; }

Integer binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw std::invalid_argument("binomial arguments must be nonnegative");
  if (b > a) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

SqrtResult int_sqrt(const Integer& x) {
  if (x < 0) throw std::domain_error("int_sqrt of a negative integer");
  SqrtResult out;
  Integer rem;
  mpz_sqrtrem(out.floor_root.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t());
  out.is_exact = rem == 0;
  return out;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) throw std::domain_error("rational_sqrt of a negative value");
  const SqrtResult num = int_sqrt(x.get_num());
  if (!num.is_exact) return std::nullopt;
  const SqrtResult den = int_sqrt(x.get_den());
  if (!den.is_exact) return std::nullopt;
  return make_rational(num.floor_root, den.floor_root);
}

std::strong_ordering cmp_surd(const Rational& q, const Rational& a, const Rational& b) {
  if (b < 0) throw std::domain_error("cmp_surd requires a nonnegative radicand");
  const Rational u = q - a;
  if (u < 0) return std::strong_ordering::less;
  const Rational u2 = u * u;
  if (u2 < b) return std::strong_ordering::less;
  if (u2 > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer ceil_surd(const Rational& a, const Rational& b) {
  if (b < 0) throw std::domain_error("ceil_surd requires a nonnegative radicand");
  // floor(sqrt(b)) <= sqrt(b) < floor(sqrt(b)) + 1, so the answer is within two of ceil(a) + floor root.
  Integer root = int_sqrt(Integer(b.get_num() / b.get_den())).floor_root;
  Integer a_ceil;
  mpz_cdiv_q(a_ceil.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  Integer m = a_ceil + root - 2;
  while (cmp_surd(Rational(m), a, b) == std::strong_ordering::less) ++m;
  return m;
}

// ---------------------------------------------------------------------------

QuadraticSurd::QuadraticSurd(const Rational& a) : a_(a) {}

QuadraticSurd::QuadraticSurd(const Rational& a, const Rational& c, const Rational& b) : a_(a), c_(c), b_(b) {
  if (b_ < 0) throw std::domain_error("negative radicand");
  normalize();
}

QuadraticSurd QuadraticSurd::sqrt(const Rational& x) {
  if (x < 0) throw std::domain_error("square root of a negative value");
  return QuadraticSurd(0, 1, x);
}

void QuadraticSurd::normalize() {
  if (c_ == 0 || b_ == 0) {
    c_ = 0;
    b_ = 0;
    return;
  }
  if (auto root = rational_sqrt(b_)) {
    a_ += c_ * *root;
    c_ = 0;
    b_ = 0;
    return;
  }
  // sqrt(p/q) = sqrt(p*q) / q
  if (b_.get_den() != 1) {
    const Integer q = b_.get_den();
    c_ /= Rational(q);
    b_ = Rational(b_.get_num() * q);
  }
  // Pull out small square factors; radicands of different fields stay distinct either way.
  Integer r = b_.get_num();
  Integer outside = 1;
  for (unsigned long p = 2; p < 1024 && mpz_cmp_ui(r.get_mpz_t(), p * p) >= 0; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(r.get_mpz_t(), p * p) != 0) {
      r /= p * p;
      outside *= p;
    }
  }
  if (outside != 1) {
    c_ *= Rational(outside);
    b_ = Rational(r);
  }
}

int compare(const QuadraticSurd& lhs, const QuadraticSurd& rhs) {
  const bool shared = lhs.is_rational() || rhs.is_rational() || lhs.radicand() == rhs.radicand() ||
                      rational_sqrt(Rational(lhs.radicand() / rhs.radicand())).has_value();
  if (shared) return (lhs - rhs).sign();
  // x = lhs.a - rhs.a + lhs.c sqrt(lhs.b) against y = rhs.c sqrt(rhs.b): equal signs reduce to squares.
  const QuadraticSurd x = QuadraticSurd(lhs.rational_part() - rhs.rational_part(), lhs.coefficient(), lhs.radicand());
  const QuadraticSurd y(0, rhs.coefficient(), rhs.radicand());
  const int sx = x.sign(), sy = y.sign();
  if (sx != sy) return sx > sy ? 1 : -1;
  const Rational y2 = rhs.coefficient() * rhs.coefficient() * rhs.radicand();
  return sx * (x * x - QuadraticSurd(y2)).sign();
}

Rational QuadraticSurd::aligned_coefficient(const QuadraticSurd& rhs) const {
  if (rhs.c_ == 0) return 0;
  if (b_ == rhs.b_) return rhs.c_;
  const auto ratio = rational_sqrt(rhs.b_ / b_);
  if (!ratio) {
    throw std::domain_error("surds sqrt(" + to_string(b_) + ") and sqrt(" + to_string(rhs.b_) +
                            ") lie in different quadratic fields");
  }
  return rhs.c_ * *ratio;
}

std::optional<Rational> QuadraticSurd::to_rational() const {
  if (c_ != 0) return std::nullopt;
  return a_;
}

bool QuadraticSurd::is_integer() const { return c_ == 0 && packcert::is_integer(a_); }

int QuadraticSurd::sign() const {
  if (c_ == 0) return sgn(a_);
  // a + c sqrt(b) with c != 0: reduce to cmp_surd on the scaled form.
  if (c_ > 0) {
    // sign(a/c + sqrt(b)) = -cmp(0, a/c, b)
    const auto ord = cmp_surd(0, a_ / c_, b_);
    return ord == std::strong_ordering::less ? 1 : (ord == std::strong_ordering::greater ? -1 : 0);
  }
  // sign(a/|c| - sqrt(b)) = cmp(a/|c|, 0, b)
  const auto ord = cmp_surd(a_ / (-c_), 0, b_);
  return ord == std::strong_ordering::less ? -1 : (ord == std::strong_ordering::greater ? 1 : 0);
}

double QuadraticSurd::approx() const {
  if (c_ == 0) return a_.get_d();
  // 256-bit evaluation keeps cancellation between a and c*sqrt(b) visible.
  mpf_class root(b_, 256);
  mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
  mpf_class value(a_, 256);
  value += mpf_class(c_, 256) * root;
  return value.get_d();
}

QuadraticSurd QuadraticSurd::conjugate() const {
  QuadraticSurd out = *this;
  out.c_ = -out.c_;
  return out;
}

std::string QuadraticSurd::str() const {
  if (c_ == 0) return to_string(a_);
  std::ostringstream os;
  if (a_ != 0) os << to_string(a_) << (c_ > 0 ? " + " : " - ");
  else if (c_ < 0) os << "-";
  const Rational mag = abs(c_);
  if (mag != 1) os << to_string(mag) << "*";
  os << "sqrt(" << to_string(b_) << ")";
  return os.str();
}

QuadraticSurd QuadraticSurd::operator-() const {
  QuadraticSurd out = *this;
  out.a_ = -out.a_;
  out.c_ = -out.c_;
  return out;
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& rhs) {
  if (c_ == 0 && rhs.c_ != 0) {
    a_ += rhs.a_;
    c_ = rhs.c_;
    b_ = rhs.b_;
    return *this;
  }
  c_ += aligned_coefficient(rhs);
  a_ += rhs.a_;
  if (c_ == 0) b_ = 0;
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& rhs) { return *this += -rhs; }

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& rhs) {
  if (rhs.c_ == 0) {
    a_ *= rhs.a_;
    c_ *= rhs.a_;
    if (c_ == 0) b_ = 0;
    return *this;
  }
  if (c_ == 0) {
    const Rational scalar = a_;
    *this = rhs;
    a_ *= scalar;
    c_ *= scalar;
    if (c_ == 0) b_ = 0;
    return *this;
  }
  const Rational rc = aligned_coefficient(rhs);
  const Rational a = a_ * rhs.a_ + c_ * rc * b_;
  const Rational c = a_ * rc + c_ * rhs.a_;
  a_ = a;
  c_ = c;
  if (c_ == 0) b_ = 0;
  return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& rhs) {
  if (rhs.sign() == 0) throw std::domain_error("division by zero");
  if (rhs.c_ == 0) {
    a_ /= rhs.a_;
    c_ /= rhs.a_;
    return *this;
  }
  // 1/(p + q sqrt(b)) = (p - q sqrt(b)) / (p^2 - q^2 b)
  const Rational norm = rhs.a_ * rhs.a_ - rhs.c_ * rhs.c_ * rhs.b_;
  QuadraticSurd inv = rhs.conjugate();
  inv.a_ /= norm;
  inv.c_ /= norm;
  return *this *= inv;
}

}  // namespace packcert
