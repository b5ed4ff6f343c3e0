#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "packcert/arith.hpp"
#include "packcert/eigen_rational.hpp"
#include "packcert/gegenbauer.hpp"

namespace packcert {

inline constexpr double kDefaultTolerance = 1e-9;

/// floating: coordinates only. exact: rational coordinates with exactly unit
/// norms. gram_exact: coordinates are floating but every inner product is
/// known exactly (e.g. rational coordinates under a common sqrt scale).
enum class PointMode { floating, exact, gram_exact };
const char* to_string(PointMode m);

/// Finite set of unit vectors in R^d, one per row. Immutable once validated.
class PointSet {
 public:
  static PointSet from_rows(Eigen::MatrixXd rows, double tol = kDefaultTolerance);

  /// Points sqrt(gram_scale) * rows. Engages exact mode (gram_scale == 1) or
  /// gram_exact mode when every squared norm is exactly one; otherwise falls
  /// back to floating mode under the usual norm tolerance.
  static PointSet from_exact(const RationalMatrix& rows, const Rational& gram_scale = Rational(1),
                             double tol = kDefaultTolerance);

  /// Floating coordinates with an exact Gram matrix supplied by the caller
  /// (checked against the coordinates within tolerance).
  static PointSet with_exact_gram(Eigen::MatrixXd rows, RationalMatrix gram, double tol = kDefaultTolerance);

  int dim() const { return static_cast<int>(rows_.cols()); }
  Eigen::Index size() const { return rows_.rows(); }
  double tolerance() const { return tol_; }
  PointMode mode() const { return mode_; }

  const Eigen::MatrixXd& points() const { return rows_; }
  const Eigen::MatrixXd& gram() const { return gram_; }
  const std::optional<RationalMatrix>& exact_gram() const { return exact_gram_; }
  const std::optional<RationalMatrix>& exact_rows() const { return exact_rows_; }
  const Rational& gram_scale() const { return gram_scale_; }

  /// Points at the given indices, in that order; exact data is carried along.
  PointSet subset(std::span<const Eigen::Index> indices) const;

  PointSet with_tolerance(double tol) const;

 private:
  PointSet() = default;
  void finish();

  Eigen::MatrixXd rows_;
  Eigen::MatrixXd gram_;
  std::optional<RationalMatrix> exact_gram_;
  std::optional<RationalMatrix> exact_rows_;
  Rational gram_scale_{1};
  double tol_ = kDefaultTolerance;
  PointMode mode_ = PointMode::floating;
};

/// Validation entry points matching the raw file content.
PointSet validate(const std::vector<std::vector<double>>& points, double tol = kDefaultTolerance);
PointSet validate_exact(const std::vector<std::vector<Rational>>& points, const Rational& gram_scale = Rational(1),
                        double tol = kDefaultTolerance);

struct AngleClass {
  double value = 0;
  std::optional<Rational> exact;
  std::size_t pairs = 0;  // unordered pairs of distinct points
};

/// Distinct inner products between distinct points, ascending. Floating
/// values are clustered single-linkage with gap 10 * tolerance. Throws
/// std::invalid_argument when two points coincide.
std::vector<AngleClass> angle_set(const PointSet& x);

double coherence(const PointSet& x);
std::optional<Rational> coherence_sq_exact(const PointSet& x);

bool is_antipodal(const PointSet& x);

/// One point per antipodal pair: the member whose first coordinate of
/// magnitude above tolerance is positive, listed in first-occurrence order.
PointSet half(const PointSet& x);

/// D_k = (G_k(<x,y>)) built entrywise from a Gram matrix.
template <typename Scalar>
Matrix<Scalar> gegenbauer_matrix(const Matrix<Scalar>& gram, int d, int k) {
  Matrix<Scalar> out(gram.rows(), gram.cols());
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    for (Eigen::Index j = 0; j < gram.cols(); ++j) out(i, j) = gegenbauer_eval(d, k, Scalar(gram(i, j)));
  }
  return out;
}

/// S_0 .. S_kmax with S_k = sum over all ordered pairs of G_k(<x,y>).
template <typename Scalar>
std::vector<Scalar> gegenbauer_moments(const Matrix<Scalar>& gram, int d, int kmax) {
  std::vector<Scalar> sums(static_cast<std::size_t>(kmax) + 1, Scalar(0));
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    for (Eigen::Index j = 0; j < gram.cols(); ++j) {
      const std::vector<Scalar> g = gegenbauer_values(d, kmax, Scalar(gram(i, j)));
      for (std::size_t k = 0; k < sums.size(); ++k) sums[k] += g[k];
    }
  }
  return sums;
}

/// Moments indexed by degree: values[k] = S_k for k = 0 .. kmax (values[0] = n^2).
struct MomentVector {
  std::vector<double> values;
  std::optional<std::vector<Rational>> exact;
};

MomentVector moments(const PointSet& x, int kmax);
double gegenbauer_moment(const PointSet& x, int k);

struct StrengthResult {
  int strength = 0;
  bool capped = false;  // every tested degree up to kmax vanished
  bool exact = false;
  MomentVector moments;  // through the highest degree evaluated
};

/// Largest t <= kmax with S_k <= tolerance * n^2 * h_k for 1 <= k <= t (S_k == 0
/// in exact mode). Odd degrees are skipped for antipodal sets.
StrengthResult design_strength(const PointSet& x, int kmax);

struct TightFrameResult {
  bool tight = false;
  double residual = 0;  // max |sum x x^T - (n/d) I|
};

TightFrameResult tight_frame_check(const PointSet& x);

/// AngleSet uses A(X) as is; OddExtension uses A(X) together with its
/// negatives and 0, the odd annihilator x * prod (x^2 - a^2)/(1 - a^2) suited
/// to a half of an antipodal set.
enum class AnnihilatorBasis { angle_set, odd_extension };

struct AnnihilatorIdentity {
  double residual = 0;  // max |sum_k f_k D_k - I|
  std::vector<double> coeffs;
  std::optional<std::vector<Rational>> exact_coeffs;
};

AnnihilatorIdentity verify_annihilator_identity(const PointSet& x,
                                                AnnihilatorBasis basis = AnnihilatorBasis::odd_extension);

/// Same check with a caller-supplied polynomial (exact when the Gram matrix is).
AnnihilatorIdentity verify_annihilator_identity(const PointSet& x, const Polynomial<Rational>& p);
AnnihilatorIdentity verify_annihilator_identity(const PointSet& x, const Polynomial<double>& p);

/// Annihilator of the chosen angle basis: exact when every angle is known
/// exactly, else with real coefficients.
struct AnnihilatorChoice {
  std::optional<Polynomial<Rational>> exact;
  Polynomial<double> real;
};
AnnihilatorChoice annihilator_of(const PointSet& x, AnnihilatorBasis basis);

/// max |D_k D_l - [k == l] |X| D_k| for a half X of an antipodal design of the
/// given strength; requires k + l <= strength and k = l (mod 2).
double verify_orthogonality(const PointSet& half_set, int k, int l, int strength);

struct DimIdentity {
  Eigen::Index dimension = 0;
  Eigen::Index size = 0;
  bool match = false;
  std::vector<int> positive_degrees;
};

/// Numerical dim of the sum of V_k(X) over degrees with positive annihilator
/// coefficient; V_k spans eigenvectors of D_k above 1e-8 of its top eigenvalue.
DimIdentity dim_identity(const PointSet& x, AnnihilatorBasis basis = AnnihilatorBasis::odd_extension);

enum class PackingVerdict { etf, levenstein, none };
const char* to_string(PackingVerdict v);

struct DesignProfile {
  std::vector<AngleClass> angles;
  int s = 0;
  double coherence = 0;
  std::optional<Rational> coherence_sq;
  bool antipodal = false;
  StrengthResult strength;
  bool tight_frame = false;

  bool etf = false;
  bool levenstein = false;
  PackingVerdict verdict = PackingVerdict::none;
  std::optional<Rational> welch_sq;
  std::optional<Rational> levenstein_sq;
  bool dgs_tight = false;
  std::vector<std::string> notes;
};

/// Full profile. kmax <= 0 selects 2s + 2.
DesignProfile classify(const PointSet& x, int kmax = 0);

}  // namespace packcert
