#include <algorithm>

#include "doctest.h"
#include "packcert/bounds.hpp"
#include "packcert/leven.hpp"

using namespace packcert;

namespace {

std::vector<long> sizes_of(long d, bool filter) {
  std::vector<long> out;
  for (const SizeCandidate& c : enumerate_sizes(d, filter)) out.push_back(c.n.get_si());
  return out;
}

Status status_of(const FeasibilityReport& r, const std::string& id) {
  const Condition* c = r.find(id);
  REQUIRE(c != nullptr);
  return c->status;
}

}  // namespace

TEST_CASE("alpha_sq") {
  CHECK(alpha_sq(7, 63) == Rational(1, 4));
  CHECK(alpha_sq(22, 1408) == Rational(1, 9));
  CHECK(alpha_sq(4, 20) == Rational(3, 8));
  CHECK_THROWS_AS(alpha_sq(7, 28), std::domain_error);
  for (long d = 2; d <= 30; ++d) {
    for (long n = d * (d + 1) / 2 + 1; n <= d * d * 2; ++n) REQUIRE(alpha_sq(d, n) == levenstein_sq(d, n));
  }
}

TEST_CASE("leven_srg") {
  const LevenGraph g = leven_srg(7, 63);
  CHECK(g.params.v == Surd(63));
  CHECK(g.params.k == Surd(32));
  CHECK(g.params.lambda == Surd(16));
  CHECK(g.params.mu == Surd(16));
  CHECK(g.spectrum.r1 == Surd(4));
  CHECK(g.spectrum.r2 == Surd(-4));
  CHECK(*g.spectrum.n1 == Surd(27));
  CHECK(*g.spectrum.n2 == Surd(35));
  CHECK(Surd(1) + *g.spectrum.n1 + *g.spectrum.n2 == g.params.v);
  CHECK(leven_srg(22, 1408).params.k == Surd(567));

  const SrgSpectrum s = spectrum(g.params);
  CHECK(s.r1 == g.spectrum.r1);
  CHECK(s.r2 == g.spectrum.r2);
}

TEST_CASE("leven_srg closed forms agree with the generic spectrum") {
  for (long d = 4; d <= 40; ++d) {
    for (const SizeCandidate& c : enumerate_sizes(d, false)) {
      const LevenGraph g = leven_srg(d, c.n.get_si());
      REQUIRE(Surd(1) + *g.spectrum.n1 + *g.spectrum.n2 == g.params.v);
      REQUIRE(g.params.k + *g.spectrum.n1 * g.spectrum.r1 + *g.spectrum.n2 * g.spectrum.r2 == Surd(0));
      const ConsistencyResult cr = consistency_check(g.params);
      const FeasibilityReport r = leven_report(d, c.n.get_si());
      REQUIRE((status_of(r, "srg_consistency") == Status::pass) == cr.ok);
    }
  }
}

TEST_CASE("al_integrality") {
  AlIntegrality a = al_integrality(7, 63);
  CHECK(a.status == Status::pass);
  CHECK(*a.inv_alpha == 2);
  CHECK(*a.scaled_inv_alpha == 16);
  CHECK(al_integrality(7, 42).status == Status::fail);
  a = al_integrality(4, 20);
  CHECK(a.status == Status::fail);
  CHECK_FALSE(a.alpha.has_value());
  CHECK(al_integrality(3, 7).status == Status::not_applicable);
}

TEST_CASE("al_integrality pass matches the graph eigenvalue") {
  for (long d = 4; d <= 40; ++d) {
    for (const SizeCandidate& c : enumerate_sizes(d, true)) {
      const long n = c.n.get_si();
      const Rational a2 = alpha_sq(d, n);
      const Rational r2 = Rational(-1 / a2);
      REQUIRE(is_integer(r2));
      REQUIRE(leven_srg(d, n).spectrum.r2 == Surd(r2));
      const Integer D(d), N(n);
      REQUIRE(r2 == make_rational(-(N - D) * (D + 2), 3 * N - D * (D + 2)));
    }
  }
}

TEST_CASE("enumerate_sizes") {
  CHECK(sizes_of(7, false) == std::vector<long>{35, 39, 42, 63, 84});
  CHECK(sizes_of(7, true) == std::vector<long>{63});
  const auto all = enumerate_sizes(7, false);
  const auto it = std::find_if(all.begin(), all.end(), [](const SizeCandidate& c) { return c.n == 63; });
  REQUIRE(it != all.end());
  CHECK(*it->alpha == 3);
  CHECK(it->in_window);
  CHECK(all.back().is_tight_size);
  CHECK_THROWS(enumerate_sizes(3, false));
  // d(d+2)/2 is included when integral
  const auto even = sizes_of(6, false);
  CHECK(std::find(even.begin(), even.end(), 24) != even.end());
}

TEST_CASE("enumerated sizes lie in the window or are special") {
  for (long d = 4; d <= 40; ++d) {
    const Integer D(d);
    for (const SizeCandidate& c : enumerate_sizes(d, false)) {
      const bool window = 2 * c.n >= D * (D + 3) && 9 * c.n <= D * (D + 2) * (D + 2);
      REQUIRE((window || c.is_half_size || c.is_tight_size));
      REQUIRE(c.in_window == window);
    }
  }
}

TEST_CASE("embedding_angles") {
  EmbeddingAngles a = embedding_angles(7, 63);
  CHECK(a.negative == Rational(-1, 8));
  CHECK(a.positive == Rational(1, 10));
  a = embedding_angles(4, 14);
  CHECK(a.negative == Rational(-2, 5));
  CHECK(a.positive == Rational(1, 2));
  CHECK_THROWS_AS(embedding_angles(6, 24), std::domain_error);
  for (long d = 2; d <= 25; ++d) {
    for (long n = d * (d + 1) / 2 + 1; n <= d * d * 2; ++n) {
      if (2 * n == d * (d + 2)) continue;
      const EmbeddingAngles e = embedding_angles(d, n);
      REQUIRE(e.negative < 0);
      REQUIRE(e.positive > 0);
      REQUIRE(e.negative == make_rational(-d, n - d));
    }
  }
}

TEST_CASE("two_distance_bound_check") {
  TwoDistanceCheck t = two_distance_bound_check(7, 63);
  CHECK(t.status == Status::pass);
  CHECK(t.limit == 665);
  t = two_distance_bound_check(7, 34);
  CHECK(t.status == Status::fail);
  CHECK(t.limit == 27);
  for (long d = 2; d <= 30; ++d) {
    const TwoDistanceCheck b = two_distance_bound_check(d, d * (d + 3) / 2);
    REQUIRE(b.status == Status::pass);
    REQUIRE(b.limit == d * (d + 3) / 2);
  }
}

TEST_CASE("leven_report") {
  FeasibilityReport r = leven_report(7, 63);
  CHECK(r.verdict == Verdict::feasible);
  for (const Condition& c : r.conditions) CHECK(c.status == Status::pass);

  r = leven_report(7, 42);
  CHECK(r.verdict == Verdict::infeasible);
  CHECK(status_of(r, "al_integrality") == Status::fail);

  r = leven_report(7, 20);
  CHECK(r.verdict == Verdict::infeasible);
  CHECK(status_of(r, "levenstein_domain") == Status::fail);

  r = leven_report(3, 7);
  CHECK(status_of(r, "al_integrality") == Status::not_applicable);
  CHECK(status_of(r, "enum_membership") == Status::not_applicable);

  r = leven_report(22, 1408);
  CHECK(r.verdict == Verdict::feasible);
}

TEST_CASE("antipodal_4_5_sizes") {
  const AntipodalSizes s = antipodal_4_5_sizes(7);
  std::vector<long> got;
  for (const Integer& v : s.sizes) got.push_back(v.get_si());
  CHECK(got == std::vector<long>{70, 78, 84, 126});
  CHECK_FALSE(s.notes.empty());
  for (long d = 4; d <= 40; ++d) {
    const AntipodalSizes a = antipodal_4_5_sizes(d);
    const Integer top = Integer(2 * d) * (d + 2) * (d + 2) / 9;
    if ((2 * d * (d + 2) * (d + 2)) % 9 == 0) REQUIRE(a.sizes.back() == top);
    for (const Integer& v : a.sizes) {
      REQUIRE(v % 2 == 0);
      REQUIRE(9 * v <= Integer(2 * d) * (d + 2) * (d + 2));
    }
  }
}
