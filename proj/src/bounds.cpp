#include "packcert/bounds.hpp"

#include <stdexcept>

#include "packcert/gegenbauer.hpp"

namespace packcert {

namespace {

void require_dimension(int d) {
  if (d < 2) throw std::invalid_argument("bounds: dimension must be >= 2");
}

void require_odd_strength(int t) {
  if (t < 1 || t % 2 == 0) throw std::invalid_argument("bounds: strength of an antipodal set must be odd and positive");
}

Rational dgs_value(int d, int s) { return Rational(2 * binomial(d + s - 2, s - 1)); }

std::string integral_note(const Rational& value) {
  if (is_integer(value)) return "";
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return "integer sizes must not exceed floor(" + to_string(value) + ") = " + to_string(fl);
}

}  // namespace

const char* to_string(FormulaId id) {
  switch (id) {
    case FormulaId::dgs: return "dgs";
    case FormulaId::nozaki_suda: return "nozaki_suda";
    case FormulaId::xxy: return "xxy";
    case FormulaId::table1_row: return "table1_row";
    case FormulaId::welch: return "welch";
    case FormulaId::levenstein: return "levenstein";
    case FormulaId::gerzon: return "gerzon";
  }
  return "?";
}

const char* to_string(GerzonSide side) {
  switch (side) {
    case GerzonSide::below: return "below";
    case GerzonSide::inside: return "inside";
    case GerzonSide::above: return "above";
  }
  return "?";
}

BoundReport dgs_antipodal(int d, int s) {
  require_dimension(d);
  if (s < 1) throw std::invalid_argument("dgs_antipodal: s must be >= 1");
  BoundReport out;
  out.formula_id = FormulaId::dgs;
  out.applicable = true;
  out.value = dgs_value(d, s);
  return out;
}

BoundReport nozaki_suda(int d, int s, int t) {
  require_dimension(d);
  require_odd_strength(t);
  if (s < 1) throw std::invalid_argument("nozaki_suda: s must be >= 1");
  BoundReport out;
  out.formula_id = FormulaId::nozaki_suda;
  const int delta = s % 2;
  const int lo = s - delta - 1;
  const int hi = 2 * s - 2 * delta - 3;
  if (t < lo || t > hi) {
    out.note = "requires t in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    return out;
  }
  out.applicable = true;
  out.value = Rational(2 * binomial(d + s - delta - 1, s - delta) - 2 * harm_dim(d, t - s + delta + 1));
  return out;
}

BoundReport xxy_bound(int d, int s, int t) {
  require_dimension(d);
  require_odd_strength(t);
  BoundReport out;
  out.formula_id = FormulaId::xxy;
  if (t < 3 || s % 2 != 0 || 2 * s < t + 5 || s > t + 1) {
    out.note = "requires t >= 3 and even s in [(t+5)/2, t+1]";
    return out;
  }
  out.applicable = true;
  out.value = dgs_value(d, s) - Rational(2 * harm_dim(d, t - s + 2));
  return out;
}

BoundReport best_known(int d, int s, int t) {
  require_dimension(d);
  require_odd_strength(t);
  if (s < 2) throw std::invalid_argument("best_known: s must be >= 2");

  BoundReport out;
  out.formula_id = FormulaId::table1_row;
  out.applicable = true;
  const Rational dgs = dgs_value(d, s);

  if (s == 3 && t == 3 && d >= 5) {
    out.value = make_rational(2 * d * (d + 2), 3);
    out.note = "s=3, t=3 row (antipodal halves are real ETFs)";
  } else if (s == 4 && t == 5 && d >= 4) {
    out.value = make_rational(2 * d * (d + 2) * (d + 2), 9);
    out.note = "s=4, t=5 row (antipodal halves are Levenstein-equality packings)";
  } else if (s % 2 == 0 && 2 * s == t + 3 && t >= 7) {
    const Rational ns = Rational(2 * binomial(d + s - 1, s) - 2 * harm_dim(d, t - s + 1));
    out.candidates = {{FormulaId::dgs, dgs}, {FormulaId::nozaki_suda, ns}};
    out.value = ns < dgs ? ns : dgs;
    out.note = std::string("even s=(t+3)/2 row: minimum of dgs and nozaki_suda, attained by ") +
               (ns < dgs ? "nozaki_suda" : "dgs");
  } else if (s % 2 == 0 && 2 * s >= t + 5 && s <= t + 1) {
    out = xxy_bound(d, s, t);
    out.note = "even s in [(t+5)/2, t+1] row";
  } else if (s % 2 == 1 && 2 * s >= t + 5 && s <= t + 2) {
    out = nozaki_suda(d, s, t);
    out.note = "odd s in [(t+5)/2, t+2] row";
  } else {
    out.formula_id = FormulaId::dgs;
    out.value = dgs;
    if (2 * s < t + 1) {
      out.note = "no antipodal s-distance set has strength t when 2s < t+1; dgs reported";
    } else if (2 * s == t + 1) {
      out.note = "tight case t+1 = 2s; dgs bound applies";
    } else {
      out.note = "outside every tabulated row; dgs fallback";
    }
  }

  const std::string floor_note = integral_note(*out.value);
  if (!floor_note.empty()) out.note += "; " + floor_note;
  return out;
}

Rational welch_sq(long d, long n) {
  if (d < 1 || n <= d) throw std::domain_error("welch_sq requires n > d >= 1");
  return make_rational(n - d, Integer(d) * (n - 1));
}

Rational levenstein_sq(long d, long n) {
  if (d < 1 || n <= d) throw std::domain_error("levenstein_sq requires n > d >= 1");
  const Integer num = Integer(3) * n - Integer(d) * (d + 2);
  if (num <= 0) throw std::domain_error("levenstein_sq requires 3n > d(d+2)");
  return make_rational(num, Integer(d + 2) * (n - d));
}

GerzonResult gerzon_check(long d, long n) {
  if (!(n > d + 1 && d + 1 > 2)) throw std::invalid_argument("gerzon_check requires n > d+1 > 2");
  GerzonResult out;
  const Integer N(n), D(d);
  out.lower_form = N * N - (2 * D + 1) * N + D * D - D;
  out.upper_limit = D * (D + 1) / 2;
  out.on_lower_boundary = out.lower_form == 0;
  out.on_upper_boundary = N == out.upper_limit;
  if (out.lower_form < 0) {
    out.side = GerzonSide::below;
  } else if (N > out.upper_limit) {
    out.side = GerzonSide::above;
  } else {
    out.side = GerzonSide::inside;
  }
  return out;
}

}  // namespace packcert
