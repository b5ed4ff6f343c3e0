#include "packcert/gegenbauer.hpp"

namespace packcert {

Integer harm_dim(int d, int k) {
  if (d < 2) throw std::invalid_argument("harm_dim: dimension must be >= 2");
  if (k < 0) throw std::invalid_argument("harm_dim: degree must be >= 0");
  if (k == 0) return 1;
  if (k == 1) return d;
  return binomial(d + k - 1, k) - binomial(d + k - 3, k - 2);
}

GegenbauerStep gegenbauer_step(int d, int k) {
  GegenbauerStep step;
  step.scale = make_rational(d + 2 * k, k + 1);
  const int den = d + 2 * k - 4;
  step.back = den == 0 ? Rational(1) : make_rational(d + k - 3, den);
  return step;
}

std::vector<Polynomial<Rational>> gegenbauer_family(int d, int kmax) {
  if (d < 2) throw std::invalid_argument("gegenbauer: dimension must be >= 2");
  std::vector<Polynomial<Rational>> out;
  out.push_back(Polynomial<Rational>::constant(1));
  if (kmax >= 1) out.push_back(Polynomial<Rational>::monomial(1, Rational(d)));
  for (int k = 1; k < kmax; ++k) {
    const GegenbauerStep step = gegenbauer_step(d, k);
    Polynomial<Rational> next = out[static_cast<std::size_t>(k)].shifted();
    next -= out[static_cast<std::size_t>(k - 1)] * step.back;
    next *= step.scale;
    out.push_back(std::move(next));
  }
  return out;
}

Polynomial<Rational> gegenbauer_poly(int d, int k) {
  if (k < 0) throw std::invalid_argument("gegenbauer: degree must be >= 0");
  return gegenbauer_family(d, k)[static_cast<std::size_t>(k)];
}

}  // namespace packcert
