#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "packcert/arith.hpp"
#include "packcert/polynomial.hpp"

namespace packcert {

/// Dimension h_k of the degree-k harmonic polynomials in d variables.
Integer harm_dim(int d, int k);

/// Coefficients of the three-term recurrence
///   G_{k+1} = scale_k * (x G_k - back_k G_{k-1}),   k >= 1,
/// with scale_k = (d+2k)/(k+1) and back_k = (d+k-3)/(d+2k-4). At d = 2, k = 1
/// back_k is 0/0 and is taken as 1, its limit in d.
struct GegenbauerStep {
  Rational scale;
  Rational back;
};
GegenbauerStep gegenbauer_step(int d, int k);

/// G_k^{(d)} with G_0 = 1, G_1 = d x and G_k(1) = h_k.
Polynomial<Rational> gegenbauer_poly(int d, int k);

/// G_0 .. G_kmax.
std::vector<Polynomial<Rational>> gegenbauer_family(int d, int kmax);

/// G_0(x) .. G_kmax(x), evaluated with the recurrence directly in X.
template <typename X>
std::vector<X> gegenbauer_values(int d, int kmax, const X& x) {
  if (d < 2) throw std::invalid_argument("gegenbauer: dimension must be >= 2");
  std::vector<X> out;
  out.reserve(static_cast<std::size_t>(kmax) + 1);
  out.push_back(X(1));
  if (kmax >= 1) out.push_back(X(d) * x);
  for (int k = 1; k < kmax; ++k) {
    const GegenbauerStep step = gegenbauer_step(d, k);
    X next = x * out[static_cast<std::size_t>(k)];
    next -= scalar_cast<X>(step.back) * out[static_cast<std::size_t>(k - 1)];
    next *= scalar_cast<X>(step.scale);
    out.push_back(next);
  }
  return out;
}

template <typename X>
X gegenbauer_eval(int d, int k, const X& x) {
  if (k < 0) throw std::invalid_argument("gegenbauer: degree must be >= 0");
  return gegenbauer_values(d, k, x)[static_cast<std::size_t>(k)];
}

/// p(x) = sum_k coeffs[k] * G_k^{(d)}(x).
template <typename Scalar>
struct GegenbauerExpansion {
  int dimension = 2;
  std::vector<Scalar> coeffs;

  Polynomial<Scalar> recombine() const {
    const auto family = gegenbauer_family(dimension, static_cast<int>(coeffs.size()) - 1);
    Polynomial<Scalar> out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      std::vector<Scalar> g;
      for (const Rational& c : family[k].coefficients()) g.push_back(scalar_cast<Scalar>(c));
      out += Polynomial<Scalar>(std::move(g)) * coeffs[k];
    }
    return out;
  }
};

/// Expansion by leading-term deflation: the top remaining monomial fixes the
/// coefficient of the Gegenbauer polynomial of that degree.
template <typename Scalar>
GegenbauerExpansion<Scalar> gegenbauer_expand(const Polynomial<Scalar>& p, int d) {
  if (d < 2) throw std::invalid_argument("gegenbauer_expand: dimension must be >= 2");
  GegenbauerExpansion<Scalar> out;
  out.dimension = d;
  const int deg = p.degree();
  if (deg < 0) return out;

  const auto family = gegenbauer_family(d, deg);
  std::vector<Scalar> rem = p.coefficients();
  out.coeffs.assign(static_cast<std::size_t>(deg) + 1, Scalar(0));
  for (int k = deg; k >= 0; --k) {
    const auto& g = family[static_cast<std::size_t>(k)].coefficients();
    const Scalar f = rem[static_cast<std::size_t>(k)] / scalar_cast<Scalar>(g.back());
    out.coeffs[static_cast<std::size_t>(k)] = f;
    for (int i = 0; i <= k; ++i) {
      rem[static_cast<std::size_t>(i)] -= f * scalar_cast<Scalar>(g[static_cast<std::size_t>(i)]);
    }
    rem[static_cast<std::size_t>(k)] = Scalar(0);
  }
  return out;
}

/// prod over angles a of (x - a) / (1 - a): equals 1 at x = 1 and vanishes on
/// the angle set. Rational angles give an exact polynomial.
template <typename Scalar>
Polynomial<Scalar> annihilator(std::span<const Scalar> angles) {
  Polynomial<Scalar> out = Polynomial<Scalar>::constant(Scalar(1));
  for (const Scalar& a : angles) {
    if (!(a < Scalar(1))) throw std::domain_error("annihilator: angles must be strictly less than 1");
    const Scalar inv = Scalar(1) / (Scalar(1) - a);
    out = out * Polynomial<Scalar>(std::vector<Scalar>{-a * inv, inv});
  }
  return out;
}

template <typename Scalar>
Polynomial<Scalar> annihilator(const std::vector<Scalar>& angles) {
  return annihilator(std::span<const Scalar>(angles));
}

}  // namespace packcert
