#include "packcert/leven.hpp"

#include <algorithm>
#include <stdexcept>

namespace packcert {

namespace {

bool in_domain(long d, long n) { return 2 * Integer(n) > Integer(d) * (d + 1); }

void require_domain(long d, long n, const char* what) {
  if (d < 2) throw std::invalid_argument(std::string(what) + ": dimension must be >= 2");
  if (!in_domain(d, n)) {
    throw std::domain_error(std::string(what) + ": the Levenstein bound is attainable only for n > d(d+1)/2");
  }
}

long alpha_upper(long d) {
  const Integer num = Integer(2) * (d - 1) * (d + 2);
  return Integer(num / (d + 5)).get_si();
}

}  // namespace

Rational alpha_sq(long d, long n) {
  require_domain(d, n, "alpha_sq");
  const Integer D(d), N(n);
  return make_rational(3 * N - D * (D + 2), (D + 2) * (N - D));
}

LevenGraph leven_srg(long d, long n) {
  require_domain(d, n, "leven_srg");
  const Rational D(d), N(n);
  const Rational nd = N - D;
  const Rational q = 3 * N - D * (D + 2);

  LevenGraph g;
  g.params.v = Surd(N);
  g.params.k = Surd(Rational(nd * nd * (D + 2) / (D * q)));
  g.params.lambda = Surd(Rational(nd * ((D + 8) * N * N - 9 * D * (D + 2) * N + 2 * D * D * (D + 2) * (D + 2)) /
                                  (D * q * q)));
  g.params.mu = Surd(Rational(nd * nd * (D + 2) * N / (D * q * q)));
  g.spectrum.r1 = Surd(Rational(nd * (2 * N - D * (D + 2)) / (D * q)));
  g.spectrum.r2 = Surd(Rational(-nd * (D + 2) / q));
  const Rational half = D * (D + 1) / 2;
  g.spectrum.n1 = Surd(Rational(half - 1));
  g.spectrum.n2 = Surd(Rational(N - half));
  return g;
}

AlIntegrality al_integrality(long d, long n) {
  AlIntegrality out;
  if (d < 4) {
    out.reason = "integrality of 1/alpha is established only for d >= 4";
    return out;
  }
  out.alpha_sq = alpha_sq(d, n);
  out.alpha = rational_sqrt(out.alpha_sq);
  if (!out.alpha) {
    out.status = Status::fail;
    out.reason = "alpha^2 = " + to_string(out.alpha_sq) + " is not a rational square";
    return out;
  }
  out.inv_alpha = Rational(1 / *out.alpha);
  out.scaled_inv_alpha = Rational(Rational(n - d) / (Rational(d) * *out.alpha));
  const bool ok = is_integer(*out.inv_alpha) && is_integer(*out.scaled_inv_alpha);
  out.status = ok ? Status::pass : Status::fail;
  if (!ok) {
    out.reason = "1/alpha = " + to_string(*out.inv_alpha) + ", (n-d)/(d alpha) = " +
                 to_string(*out.scaled_inv_alpha) + " not both integers";
  }
  return out;
}

std::vector<SizeCandidate> enumerate_sizes(long d, bool apply_al_filter) {
  if (d < 4) throw std::invalid_argument("enumerate_sizes requires d >= 4");
  const Integer D(d);
  const Integer base = D * (D + 2);

  std::vector<SizeCandidate> raw;
  for (long alpha = 2; alpha <= alpha_upper(d); ++alpha) {
    const Integer num = base * (D - 1 + alpha);
    const Integer den = 3 * Integer(alpha);
    if (num % den != 0) continue;
    SizeCandidate c;
    c.n = num / den;
    c.alpha = alpha;
    raw.push_back(c);
  }
  if (base % 2 == 0) {
    SizeCandidate c;
    c.n = base / 2;
    raw.push_back(c);
  }

  std::vector<SizeCandidate> out;
  for (SizeCandidate& c : raw) {
    c.in_window = 2 * c.n >= D * (D + 3) && 9 * c.n <= base * (D + 2);
    c.is_half_size = 2 * c.n == base;
    c.is_tight_size = 6 * c.n == base * (D + 1);
    c.al = al_integrality(d, c.n.get_si()).status;
    if (apply_al_filter && c.al != Status::pass) continue;
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const SizeCandidate& a, const SizeCandidate& b) { return a.n < b.n; });
  out.erase(std::unique(out.begin(), out.end(), [](const SizeCandidate& a, const SizeCandidate& b) { return a.n == b.n; }),
            out.end());
  return out;
}

EmbeddingAngles embedding_angles(long d, long n) {
  require_domain(d, n, "embedding_angles");
  const Integer D(d), N(n);
  const Integer pos_den = 2 * N - D * (D + 1);
  if (pos_den == D) throw std::domain_error("embedding_angles: n = d(d+2)/2 makes the positive angle 1");
  return {make_rational(-D, N - D), make_rational(D, pos_den)};
}

TwoDistanceCheck two_distance_bound_check(long d, long n) {
  require_domain(d, n, "two_distance_bound_check");
  TwoDistanceCheck out;
  out.m = Integer(n) - Integer(d) * (d + 1) / 2;
  out.limit = out.m * (out.m + 3) / 2;
  out.status = Integer(n) <= out.limit ? Status::pass : Status::fail;
  return out;
}

FeasibilityReport leven_report(long d, long n) {
  if (d < 2 || n < 1) throw std::invalid_argument("leven_report requires d >= 2 and n >= 1");
  FeasibilityReport rep;
  rep.kind = "leven";
  rep.query = {{"d", Rational(d)}, {"n", Rational(n)}};
  rep.notes.push_back("feasible means no implemented necessary condition fails; existence is not claimed");

  const std::vector<std::string> ids = {"alpha_exact", "al_integrality", "srg_consistency",
                                        "krein", "enum_membership", "two_distance"};
  if (!in_domain(d, n)) {
    rep.conditions.push_back({"levenstein_domain", Status::fail, {}, "Levenstein equality requires n > d(d+1)/2"});
    for (const auto& id : ids) rep.conditions.push_back({id, Status::not_applicable, {}, "outside the domain"});
    rep.finalize();
    return rep;
  }
  rep.conditions.push_back({"levenstein_domain", Status::pass, {}, ""});

  const Rational a2 = alpha_sq(d, n);
  {
    const auto alpha = rational_sqrt(a2);
    Condition c{"alpha_exact", alpha ? Status::pass : Status::fail, {{"alpha_sq", a2}}, ""};
    if (alpha) c.witness.emplace_back("alpha", *alpha);
    else c.note = "alpha is irrational";
    rep.conditions.push_back(std::move(c));
  }

  {
    const AlIntegrality al = al_integrality(d, n);
    Condition c{"al_integrality", al.status, {}, al.reason};
    if (al.inv_alpha) c.witness.emplace_back("1/alpha", *al.inv_alpha);
    if (al.scaled_inv_alpha) c.witness.emplace_back("(n-d)/(d alpha)", *al.scaled_inv_alpha);
    rep.conditions.push_back(std::move(c));
  }

  const LevenGraph g = leven_srg(d, n);
  {
    const ConsistencyResult cr = consistency_check(g.params);
    Condition c{"srg_consistency", cr.ok ? Status::pass : Status::fail, {}, cr.reason};
    c.witness = {{"v", g.params.v},         {"k", g.params.k},         {"lambda", g.params.lambda},
                 {"mu", g.params.mu},       {"r1", g.spectrum.r1},     {"r2", g.spectrum.r2},
                 {"n1", *g.spectrum.n1},    {"n2", *g.spectrum.n2}};
    rep.conditions.push_back(std::move(c));
  }

  {
    const KreinValues kv = krein(g.params, g.spectrum);
    rep.conditions.push_back({"krein", kv.satisfied() ? Status::pass : Status::fail, {{"K1", kv.k1}, {"K2", kv.k2}}, ""});
  }

  {
    Condition c{"enum_membership", Status::not_applicable, {}, ""};
    if (d < 4) {
      c.note = "size enumeration established only for d >= 4";
    } else {
      const auto sizes = enumerate_sizes(d, false);
      const auto it = std::find_if(sizes.begin(), sizes.end(), [&](const SizeCandidate& s) { return s.n == n; });
      c.status = it != sizes.end() ? Status::pass : Status::fail;
      if (it != sizes.end()) {
        if (it->alpha) c.witness.emplace_back("alpha_param", Rational(*it->alpha));
        c.witness.emplace_back("in_window", it->in_window);
        c.witness.emplace_back("is_half_size", it->is_half_size);
        c.witness.emplace_back("is_tight_size", it->is_tight_size);
      } else {
        c.note = "n is not of the form d(d+2)(d-1+alpha)/(3 alpha) with admissible alpha, nor d(d+2)/2";
      }
    }
    rep.conditions.push_back(std::move(c));
  }

  {
    Condition c{"two_distance", Status::not_applicable, {}, ""};
    if (2 * Integer(n) == Integer(d) * (d + 2)) {
      c.note = "n = d(d+2)/2: the embedding degenerates";
    } else {
      const TwoDistanceCheck td = two_distance_bound_check(d, n);
      const EmbeddingAngles ang = embedding_angles(d, n);
      c.status = td.status;
      c.witness = {{"m", Rational(td.m)},
                   {"limit", Rational(td.limit)},
                   {"angle_negative", ang.negative},
                   {"angle_positive", ang.positive}};
    }
    rep.conditions.push_back(std::move(c));
  }

  rep.finalize();
  return rep;
}

AntipodalSizes antipodal_4_5_sizes(long d) {
  if (d < 4) throw std::invalid_argument("antipodal_4_5_sizes requires d >= 4");
  const Integer D(d);
  const Integer base = 2 * D * (D + 2);
  AntipodalSizes out;
  auto consider = [&](const Integer& v, const std::string& origin) {
    if (v % 2 != 0) {
      out.notes.push_back("dropped odd size " + to_string(v) + " (" + origin + "): antipodal sets have even size");
      return;
    }
    out.sizes.push_back(v);
  };
  for (long alpha = 3; alpha <= alpha_upper(d); ++alpha) {
    const Integer num = base * (D - 1 + alpha);
    const Integer den = 3 * Integer(alpha);
    if (num % den != 0) continue;
    consider(num / den, "alpha = " + std::to_string(alpha));
  }
  consider(D * (D + 2), "d(d+2)");
  std::sort(out.sizes.begin(), out.sizes.end());
  out.sizes.erase(std::unique(out.sizes.begin(), out.sizes.end()), out.sizes.end());
  return out;
}

}  // namespace packcert
