#include "packcert/etf.hpp"

#include <stdexcept>

namespace packcert {

namespace {

void require_nontrivial(long d, long n) {
  if (!(n > d + 1 && d + 1 > 2)) throw std::invalid_argument("ETF analysis requires n > d+1 > 2");
}

bool odd_integer(const Surd& x) {
  if (!x.is_integer()) return false;
  const Integer v = x.rational_part().get_num();
  return mpz_odd_p(v.get_mpz_t()) != 0;
}

}  // namespace

const char* to_string(EtfClass c) {
  switch (c) {
    case EtfClass::exceptional_lower: return "exceptional_lower";
    case EtfClass::exceptional_upper: return "exceptional_upper";
    case EtfClass::window: return "window";
    case EtfClass::infeasible: return "infeasible";
    case EtfClass::not_applicable: return "not_applicable";
  }
  return "?";
}

EtfGraph etf_srg(long d, long n) {
  require_nontrivial(d, n);
  EtfGraph out;
  out.radicand = make_rational(Integer(d) * (n - 1), n - d);
  out.root = Surd::sqrt(out.radicand);
  out.rational = out.root.is_rational();
  const Surd a = Surd(make_rational(n - 2, 2)) + Surd(make_rational(2 * d - n, 2 * d)) * out.root;
  out.params.v = Surd(n - 1);
  out.params.k = a;
  out.params.lambda = (Surd(3) * a - Surd(n)) / Surd(2);
  out.params.mu = a / Surd(2);
  return out;
}

AwIntegrality aw_integrality(long d, long n) {
  AwIntegrality out;
  if (n <= d + 1 || d + 1 <= 2) {
    out.reason = "requires n > d+1 > 2";
    return out;
  }
  if (n == 2 * d) {
    out.reason = "n = 2d is excluded";
    return out;
  }
  out.root_a = Surd::sqrt(make_rational(Integer(d) * (n - 1), n - d));
  out.root_b = Surd::sqrt(make_rational(Integer(n - d) * (n - 1), d));
  const bool ok_a = odd_integer(*out.root_a);
  const bool ok_b = odd_integer(*out.root_b);
  out.status = ok_a && ok_b ? Status::pass : Status::fail;
  if (!ok_a) out.reason = "sqrt(d(n-1)/(n-d)) = " + out.root_a->str() + " is not an odd integer";
  else if (!ok_b) out.reason = "sqrt((n-d)(n-1)/d) = " + out.root_b->str() + " is not an odd integer";
  return out;
}

EtfClassification coro1_classify(long d, long n) {
  EtfClassification out;
  if (d < 5 || n <= d + 1) return out;
  const Rational center = Rational(d) + Rational(1, 2);
  out.window_lo = ceil_surd(center, Rational(3 * d) + Rational(1, 4));
  out.window_hi = Integer(d) * (d + 2) / 3;

  const Integer N(n);
  if (cmp_surd(Rational(N), center, Rational(2 * d) + Rational(1, 4)) == std::strong_ordering::equal) {
    out.cls = EtfClass::exceptional_lower;
  } else if (2 * N == Integer(d) * (d + 1)) {
    out.cls = EtfClass::exceptional_upper;
  } else if (N >= out.window_lo && 3 * N <= Integer(d) * (d + 2)) {
    out.cls = EtfClass::window;
  } else {
    out.cls = EtfClass::infeasible;
  }
  return out;
}

FeasibilityReport etf_report(long d, long n) {
  require_nontrivial(d, n);
  FeasibilityReport rep;
  rep.kind = "etf";
  rep.query = {{"d", Rational(d)}, {"n", Rational(n)}};

  {
    const GerzonResult g = gerzon_check(d, n);
    Condition c{"gerzon", g.inside() ? Status::pass : Status::fail, {}, ""};
    c.witness = {{"side", std::string(to_string(g.side))},
                 {"lower_form", Rational(g.lower_form)},
                 {"upper_limit", Rational(g.upper_limit)},
                 {"on_lower_boundary", g.on_lower_boundary},
                 {"on_upper_boundary", g.on_upper_boundary}};
    rep.conditions.push_back(std::move(c));
  }

  {
    const AwIntegrality aw = aw_integrality(d, n);
    Condition c{"aw_integrality", aw.status, {}, aw.reason};
    if (aw.root_a) c.witness.emplace_back("sqrt_d(n-1)/(n-d)", *aw.root_a);
    if (aw.root_b) c.witness.emplace_back("sqrt_(n-d)(n-1)/d", *aw.root_b);
    rep.conditions.push_back(std::move(c));
  }

  const EtfGraph graph = etf_srg(d, n);
  {
    Condition c{"srg_consistency", Status::fail, {}, ""};
    c.witness = {{"v", graph.params.v}, {"k", graph.params.k}, {"lambda", graph.params.lambda},
                 {"mu", graph.params.mu}};
    if (!graph.rational) {
      c.note = "a is irrational: radicand d(n-1)/(n-d) = " + to_string(graph.radicand) + " is not a rational square";
    } else {
      const ConsistencyResult cr = consistency_check(graph.params);
      c.status = cr.ok ? Status::pass : Status::fail;
      c.note = cr.reason;
      if (cr.ok) {
        const SrgSpectrum sp = spectrum(graph.params);
        c.witness.emplace_back("r1", sp.r1);
        c.witness.emplace_back("r2", sp.r2);
        c.witness.emplace_back("n1", *sp.n1);
        c.witness.emplace_back("n2", *sp.n2);
      }
    }
    rep.conditions.push_back(std::move(c));
  }

  {
    const KreinValues kv = krein(graph.params);
    Condition c{"krein", kv.satisfied() ? Status::pass : Status::fail, {}, ""};
    c.witness = {{"K1", kv.k1}, {"K2", kv.k2}};
    rep.conditions.push_back(std::move(c));
  }

  {
    const EtfClassification cl = coro1_classify(d, n);
    Condition c{"coro1_window", Status::not_applicable, {}, ""};
    if (cl.cls == EtfClass::not_applicable) {
      c.note = "size window established only for d >= 5";
    } else {
      c.status = cl.cls == EtfClass::infeasible ? Status::fail : Status::pass;
      c.witness = {{"class", std::string(to_string(cl.cls))},
                   {"window_lo", Rational(cl.window_lo)},
                   {"window_hi", Rational(cl.window_hi)}};
    }
    rep.conditions.push_back(std::move(c));
  }

  // Partner pair of the open correspondence between the two extremal sizes.
  const Integer D(d), N(n);
  if (3 * N == D * (D + 2)) {
    rep.notes.push_back("informational: ETF(" + std::to_string(d) + ", " + to_string(N) +
                        ") is conjecturally tied to ETF(" + std::to_string(d + 1) + ", " +
                        to_string(Integer((D + 1) * (D + 2) / 2)) + "); not asserted");
  } else if (2 * N == D * (D + 1) && d >= 6 && ((D - 1) * (D + 1)) % 3 == 0) {
    rep.notes.push_back("informational: ETF(" + std::to_string(d) + ", " + to_string(N) +
                        ") is conjecturally tied to ETF(" + std::to_string(d - 1) + ", " +
                        to_string(Integer((D - 1) * (D + 1) / 3)) + "); not asserted");
  }
  rep.notes.push_back("feasible means no implemented necessary condition fails; existence is not claimed");
  rep.finalize();
  return rep;
}

}  // namespace packcert
