#pragma once

#include <optional>
#include <string>

#include "packcert/arith.hpp"
#include "packcert/report.hpp"

namespace packcert {

/// Strongly-regular-graph parameters (v, k, lambda, mu).
///
/// Entries are quadratic surds rather than integers so that parameters
/// derived from a frame (irrational or fractional ones included) can be
/// carried through the spectrum and Krein computations and reported as
/// infeasibility witnesses.
struct SrgParams {
  Surd v, k, lambda, mu;

  static SrgParams of(long v, long k, long lambda, long mu) { return {v, k, lambda, mu}; }
  std::string str() const;
};

/// Eigenvalues r1 >= r2 of the adjacency matrix besides k, and their
/// multiplicities. Multiplicities are absent when r1 == r2.
struct SrgSpectrum {
  Surd r1, r2;
  std::optional<Surd> n1, n2;

  bool integral_multiplicities() const;
};

SrgSpectrum spectrum(const SrgParams& p);

struct KreinValues {
  Surd k1, k2;
  bool satisfied() const { return k1.sign() >= 0 && k2.sign() >= 0; }
};

/// K1 = (k+r1)(r2+1)^2 - (r1+1)(k+r1+2 r1 r2), K2 with r1 and r2 swapped.
KreinValues krein(const SrgParams& p);
KreinValues krein(const SrgParams& p, const SrgSpectrum& s);

struct ConsistencyResult {
  bool ok = false;
  std::string reason;
};

/// Integral nonnegative parameters with k < v, k(k - lambda - 1) = (v - k - 1) mu,
/// and integral eigenvalue multiplicities.
ConsistencyResult consistency_check(const SrgParams& p);

/// (v, (v-1)/2, (v-5)/4, (v-1)/4).
bool is_conference(const SrgParams& p);

}  // namespace packcert
