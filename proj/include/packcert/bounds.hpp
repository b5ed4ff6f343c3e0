#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "packcert/arith.hpp"

namespace packcert {

enum class FormulaId { dgs, nozaki_suda, xxy, table1_row, welch, levenstein, gerzon };

const char* to_string(FormulaId id);

/// A size bound and where it came from. Values are exact; flooring to an
/// integer size happens only in presentation (see note).
struct BoundReport {
  std::optional<Rational> value;
  FormulaId formula_id = FormulaId::dgs;
  bool applicable = false;
  std::string note;
  /// Every candidate considered when a row takes a minimum of formulas.
  std::vector<std::pair<FormulaId, Rational>> candidates;
};

/// 2 C(d+s-2, s-1).
BoundReport dgs_antipodal(int d, int s);

/// 2 C(d+s-delta-1, s-delta) - 2 h_{t-s+delta+1}, delta = s mod 2,
/// applicable for odd t in [s-delta-1, 2s-2 delta-3].
BoundReport nozaki_suda(int d, int s, int t);

/// 2 C(d+s-2, s-1) - 2 h_{t-s+2} for even s in [(t+5)/2, t+1], t >= 3.
BoundReport xxy_bound(int d, int s, int t);

/// Best known upper bound on |X| for an antipodal s-distance set of strength t.
BoundReport best_known(int d, int s, int t);

/// Squared Welch bound (n-d) / (d(n-1)); requires n > d.
Rational welch_sq(long d, long n);

/// Squared Levenstein bound (3n - d(d+2)) / ((d+2)(n-d)); requires 3n > d(d+2).
Rational levenstein_sq(long d, long n);

enum class GerzonSide { below, inside, above };
const char* to_string(GerzonSide side);

struct GerzonResult {
  GerzonSide side = GerzonSide::inside;
  bool on_lower_boundary = false;
  bool on_upper_boundary = false;
  /// n^2 - (2d+1) n + d^2 - d; nonnegative exactly when n clears the lower bound.
  Integer lower_form;
  Integer upper_limit;  // d(d+1)/2

  bool inside() const { return side == GerzonSide::inside; }
};

/// d + 1/2 + sqrt(2d + 1/4) <= n <= d(d+1)/2, for n > d+1 > 2.
GerzonResult gerzon_check(long d, long n);

}  // namespace packcert
