#include "packcert/srg.hpp"

#include <stdexcept>

namespace packcert {

std::string SrgParams::str() const {
  return "(" + v.str() + ", " + k.str() + ", " + lambda.str() + ", " + mu.str() + ")";
}

bool SrgSpectrum::integral_multiplicities() const {
  return n1 && n2 && n1->is_integer() && n2->is_integer();
}

SrgSpectrum spectrum(const SrgParams& p) {
  const Surd lm = p.lambda - p.mu;
  const Surd disc = lm * lm + Surd(4) * (p.k - p.mu);
  if (disc.sign() < 0) throw std::domain_error("srg spectrum: negative discriminant");
  const auto disc_q = disc.to_rational();
  if (!disc_q) {
    throw std::domain_error("srg spectrum: discriminant " + disc.str() + " is not rational");
  }
  const Surd root = Surd::sqrt(*disc_q);

  SrgSpectrum out;
  out.r1 = (lm + root) / Surd(2);
  out.r2 = (lm - root) / Surd(2);
  if (root.sign() != 0) {
    const Surd vm1 = p.v - Surd(1);
    const Surd skew = (Surd(2) * p.k + vm1 * lm) / root;
    out.n1 = (vm1 - skew) / Surd(2);
    out.n2 = (vm1 + skew) / Surd(2);
  }
  return out;
}

KreinValues krein(const SrgParams& p, const SrgSpectrum& s) {
  const Surd one(1);
  const Surd two(2);
  const Surd cross = two * s.r1 * s.r2;
  KreinValues out;
  out.k1 = (p.k + s.r1) * (s.r2 + one) * (s.r2 + one) - (s.r1 + one) * (p.k + s.r1 + cross);
  out.k2 = (p.k + s.r2) * (s.r1 + one) * (s.r1 + one) - (s.r2 + one) * (p.k + s.r2 + cross);
  return out;
}

KreinValues krein(const SrgParams& p) { return krein(p, spectrum(p)); }

ConsistencyResult consistency_check(const SrgParams& p) {
  for (const Surd* x : {&p.v, &p.k, &p.lambda, &p.mu}) {
    if (!x->is_integer()) return {false, "parameter " + x->str() + " is not an integer"};
    if (x->sign() < 0) return {false, "parameter " + x->str() + " is negative"};
  }
  if (!(p.k < p.v)) return {false, "degree k must be smaller than v"};
  const Surd lhs = p.k * (p.k - p.lambda - Surd(1));
  const Surd rhs = (p.v - p.k - Surd(1)) * p.mu;
  if (lhs != rhs) return {false, "k(k-lambda-1) = " + lhs.str() + " but (v-k-1)mu = " + rhs.str()};

  SrgSpectrum s;
  try {
    s = spectrum(p);
  } catch (const std::domain_error& e) {
    return {false, e.what()};
  }
  if (!s.n1 || !s.n2) return {false, "eigenvalues coincide; multiplicities undefined"};
  if (!s.integral_multiplicities()) {
    return {false, "multiplicities " + s.n1->str() + ", " + s.n2->str() + " are not integral"};
  }
  return {true, ""};
}

bool is_conference(const SrgParams& p) {
  return p.k == (p.v - Surd(1)) / Surd(2) && p.lambda == (p.v - Surd(5)) / Surd(4) &&
         p.mu == (p.v - Surd(1)) / Surd(4);
}

}  // namespace packcert
