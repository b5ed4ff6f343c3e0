#pragma once

#include <optional>
#include <string>
#include <vector>

#include "packcert/arith.hpp"
#include "packcert/report.hpp"
#include "packcert/srg.hpp"

namespace packcert {

/// Squared Levenstein coherence (3n - d(d+2)) / ((d+2)(n-d)) on the
/// attainability domain n > d(d+1)/2.
Rational alpha_sq(long d, long n);

/// Graph on the packing (adjacent iff the inner product is nonzero) with its
/// parameters and spectrum in closed form.
struct LevenGraph {
  SrgParams params;
  SrgSpectrum spectrum;
};

LevenGraph leven_srg(long d, long n);

struct AlIntegrality {
  Status status = Status::not_applicable;
  Rational alpha_sq;
  std::optional<Rational> alpha;
  std::optional<Rational> inv_alpha;          // 1/alpha
  std::optional<Rational> scaled_inv_alpha;   // (n-d)/(d alpha)
  std::string reason;
};

/// 1/alpha and (n-d)/(d alpha) must both be integers (d >= 4).
AlIntegrality al_integrality(long d, long n);

struct SizeCandidate {
  Integer n;
  std::optional<long> alpha;  // absent for the special size d(d+2)/2
  bool in_window = false;     // d(d+3)/2 <= n <= d(d+2)^2/9
  bool is_half_size = false;  // n == d(d+2)/2
  bool is_tight_size = false; // n == d(d+1)(d+2)/6
  Status al = Status::not_applicable;
};

/// Sizes n = d(d+2)(d-1+alpha)/(3 alpha) for integer alpha in
/// [2, 2(d-1)(d+2)/(d+5)], plus d(d+2)/2 when integral, sorted ascending.
std::vector<SizeCandidate> enumerate_sizes(long d, bool apply_al_filter);

struct EmbeddingAngles {
  Rational negative;  // -d/(n-d)
  Rational positive;  // d/(2n - d(d+1))
};

/// Angles of the two-distance set obtained from the r2-eigenspace embedding.
/// Rejects n = d(d+2)/2, where the positive angle degenerates to 1.
EmbeddingAngles embedding_angles(long d, long n);

struct TwoDistanceCheck {
  Status status = Status::not_applicable;
  Integer m;      // n - d(d+1)/2
  Integer limit;  // m(m+3)/2
};

/// n <= m(m+3)/2 with m = n - d(d+1)/2.
TwoDistanceCheck two_distance_bound_check(long d, long n);

FeasibilityReport leven_report(long d, long n);

struct AntipodalSizes {
  std::vector<Integer> sizes;
  std::vector<std::string> notes;
};

/// Admissible |X| for antipodal 4-distance sets of strength 5 (even values only).
AntipodalSizes antipodal_4_5_sizes(long d);

}  // namespace packcert
