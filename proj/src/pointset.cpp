#include "packcert/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "packcert/bounds.hpp"

namespace packcert {

using Eigen::Index;

namespace {

double gap(const PointSet& x) { return 10 * x.tolerance(); }

// G_0(x) .. G_kmax(x) in double with the recurrence coefficients cached.
class RealRecurrence {
 public:
  RealRecurrence(int d, int kmax) : d_(d), kmax_(kmax), buf_(static_cast<std::size_t>(kmax) + 1) {
    for (int k = 1; k < kmax; ++k) {
      const GegenbauerStep step = gegenbauer_step(d, k);
      scale_.push_back(step.scale.get_d());
      back_.push_back(step.back.get_d());
    }
  }

  const std::vector<double>& operator()(double x) {
    buf_[0] = 1;
    if (kmax_ >= 1) buf_[1] = d_ * x;
    for (int k = 1; k < kmax_; ++k) {
      const auto i = static_cast<std::size_t>(k);
      buf_[i + 1] = scale_[i - 1] * (x * buf_[i] - back_[i - 1] * buf_[i - 1]);
    }
    return buf_;
  }

 private:
  int d_;
  int kmax_;
  std::vector<double> scale_, back_;
  std::vector<double> buf_;
};

// Inner products over unordered pairs i < j, grouped by exact value.
std::map<Rational, std::size_t> pair_distribution(const RationalMatrix& g) {
  std::map<Rational, std::size_t> out;
  for (Index i = 0; i < g.rows(); ++i) {
    for (Index j = i + 1; j < g.cols(); ++j) ++out[g(i, j)];
  }
  return out;
}

bool opposite(const PointSet& x, Index i, Index j) {
  if (const auto& g = x.exact_gram()) return (*g)(i, j) == -1;
  return x.gram()(i, j) <= -1 + gap(x);
}

void check_unit_rows(const Eigen::MatrixXd& rows, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (rows.cols() < 2) throw std::invalid_argument("dimension must be >= 2");
  if (rows.rows() < 1) throw std::invalid_argument("a point set needs at least one point");
  if (!rows.allFinite()) throw std::invalid_argument("coordinates must be finite");
  for (Index i = 0; i < rows.rows(); ++i) {
    const double err = std::abs(rows.row(i).squaredNorm() - 1);
    if (err > tol) {
      throw std::invalid_argument("point " + std::to_string(i) + " has squared norm " +
                                  std::to_string(rows.row(i).squaredNorm()) + ", not 1 within tolerance");
    }
  }
}

Rational max_abs_entry_minus_identity(const RationalMatrix& m) {
  Rational worst = 0;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      Rational v = m(i, j);
      if (i == j) v -= 1;
      v = abs(v);
      if (v > worst) worst = v;
    }
  }
  return worst;
}

std::vector<double> real_coefficients(const Polynomial<Rational>& p) {
  std::vector<double> out;
  for (const Rational& c : p.coefficients()) out.push_back(c.get_d());
  return out;
}

}  // namespace

const char* to_string(PointMode m) {
  switch (m) {
    case PointMode::floating: return "floating";
    case PointMode::exact: return "exact";
    case PointMode::gram_exact: return "gram_exact";
  }
  return "?";
}

const char* to_string(PackingVerdict v) {
  switch (v) {
    case PackingVerdict::etf: return "etf";
    case PackingVerdict::levenstein: return "levenstein";
    case PackingVerdict::none: return "none";
  }
  return "?";
}

void PointSet::finish() { gram_ = rows_ * rows_.transpose(); }

PointSet PointSet::from_rows(Eigen::MatrixXd rows, double tol) {
  check_unit_rows(rows, tol);
  PointSet out;
  out.rows_ = std::move(rows);
  out.tol_ = tol;
  out.finish();
  return out;
}

PointSet PointSet::from_exact(const RationalMatrix& rows, const Rational& gram_scale, double tol) {
  if (gram_scale <= 0) throw std::invalid_argument("gram_scale must be positive");
  if (rows.cols() < 2) throw std::invalid_argument("dimension must be >= 2");
  if (rows.rows() < 1) throw std::invalid_argument("a point set needs at least one point");

  const Index n = rows.rows(), d = rows.cols();
  const double root = std::sqrt(gram_scale.get_d());
  Eigen::MatrixXd real(n, d);
  bool unit = true;
  for (Index i = 0; i < n; ++i) {
    Rational norm = 0;
    for (Index c = 0; c < d; ++c) {
      norm += rows(i, c) * rows(i, c);
      real(i, c) = rows(i, c).get_d() * root;
    }
    if (norm * gram_scale != 1) unit = false;
  }
  if (!unit) return from_rows(std::move(real), tol);

  check_unit_rows(real, tol);
  PointSet out;
  out.rows_ = std::move(real);
  out.tol_ = tol;
  out.exact_rows_ = rows;
  out.gram_scale_ = gram_scale;
  out.mode_ = gram_scale == 1 ? PointMode::exact : PointMode::gram_exact;
  RationalMatrix g(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      Rational dot = 0;
      for (Index c = 0; c < d; ++c) dot += rows(i, c) * rows(j, c);
      dot *= gram_scale;
      g(i, j) = dot;
      g(j, i) = dot;
    }
  }
  out.exact_gram_ = std::move(g);
  out.finish();
  return out;
}

PointSet PointSet::with_exact_gram(Eigen::MatrixXd rows, RationalMatrix gram, double tol) {
  check_unit_rows(rows, tol);
  const Index n = rows.rows();
  if (gram.rows() != n || gram.cols() != n) throw std::invalid_argument("exact Gram matrix has the wrong shape");
  PointSet out;
  out.rows_ = std::move(rows);
  out.tol_ = tol;
  out.finish();
  for (Index i = 0; i < n; ++i) {
    if (gram(i, i) != 1) throw std::invalid_argument("exact Gram matrix must have unit diagonal");
    for (Index j = 0; j < n; ++j) {
      if (gram(i, j) != gram(j, i)) throw std::invalid_argument("exact Gram matrix must be symmetric");
      if (std::abs(gram(i, j).get_d() - out.gram_(i, j)) > 10 * tol) {
        throw std::invalid_argument("exact Gram matrix disagrees with the coordinates");
      }
    }
  }
  out.exact_gram_ = std::move(gram);
  out.mode_ = PointMode::gram_exact;
  return out;
}

PointSet PointSet::subset(std::span<const Index> indices) const {
  const auto m = static_cast<Index>(indices.size());
  if (m < 1) throw std::invalid_argument("subset must be nonempty");
  for (Index i : indices) {
    if (i < 0 || i >= size()) throw std::out_of_range("subset index out of range");
  }
  PointSet out;
  out.tol_ = tol_;
  out.mode_ = mode_;
  out.gram_scale_ = gram_scale_;
  out.rows_.resize(m, rows_.cols());
  for (Index a = 0; a < m; ++a) out.rows_.row(a) = rows_.row(indices[static_cast<std::size_t>(a)]);
  if (exact_rows_) {
    RationalMatrix r(m, rows_.cols());
    for (Index a = 0; a < m; ++a) {
      for (Index c = 0; c < r.cols(); ++c) r(a, c) = (*exact_rows_)(indices[static_cast<std::size_t>(a)], c);
    }
    out.exact_rows_ = std::move(r);
  }
  if (exact_gram_) {
    RationalMatrix g(m, m);
    for (Index a = 0; a < m; ++a) {
      for (Index b = 0; b < m; ++b) {
        g(a, b) = (*exact_gram_)(indices[static_cast<std::size_t>(a)], indices[static_cast<std::size_t>(b)]);
      }
    }
    out.exact_gram_ = std::move(g);
  }
  out.finish();
  return out;
}

PointSet PointSet::with_tolerance(double tol) const {
  check_unit_rows(rows_, tol);
  PointSet out = *this;
  out.tol_ = tol;
  return out;
}

PointSet validate(const std::vector<std::vector<double>>& points, double tol) {
  if (points.empty()) throw std::invalid_argument("a point set needs at least one point");
  const std::size_t d = points.front().size();
  Eigen::MatrixXd rows(static_cast<Index>(points.size()), static_cast<Index>(d));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != d) throw std::invalid_argument("ragged input: point " + std::to_string(i));
    for (std::size_t c = 0; c < d; ++c) rows(static_cast<Index>(i), static_cast<Index>(c)) = points[i][c];
  }
  return PointSet::from_rows(std::move(rows), tol);
}

PointSet validate_exact(const std::vector<std::vector<Rational>>& points, const Rational& gram_scale, double tol) {
  if (points.empty()) throw std::invalid_argument("a point set needs at least one point");
  const std::size_t d = points.front().size();
  RationalMatrix rows(static_cast<Index>(points.size()), static_cast<Index>(d));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != d) throw std::invalid_argument("ragged input: point " + std::to_string(i));
    for (std::size_t c = 0; c < d; ++c) rows(static_cast<Index>(i), static_cast<Index>(c)) = points[i][c];
  }
  return PointSet::from_exact(rows, gram_scale, tol);
}

std::vector<AngleClass> angle_set(const PointSet& x) {
  const Index n = x.size();
  std::vector<AngleClass> out;
  auto duplicate = [](Index i, Index j) {
    return std::invalid_argument("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  };

  if (const auto& g = x.exact_gram()) {
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        if ((*g)(i, j) == 1) throw duplicate(i, j);
      }
    }
    for (const auto& [v, count] : pair_distribution(*g)) out.push_back({v.get_d(), v, count});
    return out;
  }

  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double v = x.gram()(i, j);
      if (v >= 1 - gap(x)) throw duplicate(i, j);
      vals.push_back(v);
    }
  }
  std::sort(vals.begin(), vals.end());
  for (std::size_t a = 0; a < vals.size();) {
    std::size_t b = a;
    double sum = vals[a];
    while (b + 1 < vals.size() && vals[b + 1] - vals[b] <= gap(x)) sum += vals[++b];
    const std::size_t count = b - a + 1;
    out.push_back({sum / static_cast<double>(count), std::nullopt, count});
    a = b + 1;
  }
  return out;
}

double coherence(const PointSet& x) {
  double best = 0;
  for (Index i = 0; i < x.size(); ++i) {
    for (Index j = i + 1; j < x.size(); ++j) best = std::max(best, std::abs(x.gram()(i, j)));
  }
  return best;
}

std::optional<Rational> coherence_sq_exact(const PointSet& x) {
  const auto& g = x.exact_gram();
  if (!g) return std::nullopt;
  Rational best = 0;
  for (Index i = 0; i < x.size(); ++i) {
    for (Index j = i + 1; j < x.size(); ++j) {
      const Rational sq = (*g)(i, j) * (*g)(i, j);
      if (sq > best) best = sq;
    }
  }
  return best;
}

bool is_antipodal(const PointSet& x) {
  for (Index i = 0; i < x.size(); ++i) {
    bool found = false;
    for (Index j = 0; j < x.size() && !found; ++j) found = j != i && opposite(x, i, j);
    if (!found) return false;
  }
  return true;
}

PointSet half(const PointSet& x) {
  const Index n = x.size();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<Index> keep;
  auto positive_lead = [&](Index i) {
    for (Index c = 0; c < x.dim(); ++c) {
      const double v = x.points()(i, c);
      if (std::abs(v) > x.tolerance()) return v > 0;
    }
    return true;
  };
  for (Index i = 0; i < n; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    Index partner = -1;
    for (Index j = i + 1; j < n && partner < 0; ++j) {
      if (!used[static_cast<std::size_t>(j)] && opposite(x, i, j)) partner = j;
    }
    if (partner < 0) throw std::invalid_argument("half: point " + std::to_string(i) + " has no antipode");
    used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(partner)] = 1;
    keep.push_back(positive_lead(i) ? i : partner);
  }
  return x.subset(keep);
}

MomentVector moments(const PointSet& x, int kmax) {
  if (kmax < 0) throw std::invalid_argument("moments: kmax must be >= 0");
  const int d = x.dim();
  const Index n = x.size();
  const auto len = static_cast<std::size_t>(kmax) + 1;
  MomentVector out;

  if (const auto& g = x.exact_gram()) {
    std::vector<Rational> sums(len);
    for (std::size_t k = 0; k < len; ++k) sums[k] = Rational(harm_dim(d, static_cast<int>(k)) * n);
    for (const auto& [v, count] : pair_distribution(*g)) {
      const std::vector<Rational> vals = gegenbauer_values(d, kmax, v);
      for (std::size_t k = 0; k < len; ++k) sums[k] += 2 * Rational(static_cast<unsigned long>(count)) * vals[k];
    }
    for (const Rational& s : sums) out.values.push_back(s.get_d());
    out.exact = std::move(sums);
    return out;
  }

  RealRecurrence rec(d, kmax);
  std::vector<double> off(len, 0.0);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const auto& vals = rec(x.gram()(i, j));
      for (std::size_t k = 0; k < len; ++k) off[k] += vals[k];
    }
  }
  const auto& diag = rec(1.0);
  out.values.resize(len);
  for (std::size_t k = 0; k < len; ++k) out.values[k] = static_cast<double>(n) * diag[k] + 2 * off[k];
  return out;
}

double gegenbauer_moment(const PointSet& x, int k) {
  if (k < 0) throw std::invalid_argument("gegenbauer_moment: degree must be >= 0");
  return moments(x, k).values[static_cast<std::size_t>(k)];
}

StrengthResult design_strength(const PointSet& x, int kmax) {
  if (kmax < 1) throw std::invalid_argument("design_strength: kmax must be >= 1");
  const bool antipodal = is_antipodal(x);
  const double n2 = static_cast<double>(x.size()) * static_cast<double>(x.size());
  StrengthResult out;
  // Moments are computed through a growing degree so that a generic set with
  // many angles (kmax = 2s+2 large) stops at its first nonvanishing moment.
  int computed = 0;
  for (int k = 1; k <= kmax; ++k) {
    if (k > computed) {
      computed = std::min(kmax, std::max(8, 2 * computed));
      out.moments = moments(x, computed);
      out.exact = out.moments.exact.has_value();
    }
    const auto i = static_cast<std::size_t>(k);
    if (antipodal && k % 2 == 1) {
      out.strength = k;
      continue;
    }
    const bool vanishes = out.exact ? (*out.moments.exact)[i] == 0
                                    : out.moments.values[i] <= x.tolerance() * n2 * harm_dim(x.dim(), k).get_d();
    if (!vanishes) break;
    out.strength = k;
  }
  out.capped = out.strength == kmax;
  return out;
}

TightFrameResult tight_frame_check(const PointSet& x) {
  const Eigen::MatrixXd frame = x.points().transpose() * x.points();
  const double target = static_cast<double>(x.size()) / x.dim();
  TightFrameResult out;
  out.residual = (frame - target * Eigen::MatrixXd::Identity(x.dim(), x.dim())).cwiseAbs().maxCoeff();
  if (x.exact_gram()) {
    out.tight = (*moments(x, 2).exact)[2] == 0;
  } else {
    out.tight = out.residual <= x.tolerance() * std::max<double>(1.0, static_cast<double>(x.size()));
  }
  return out;
}

AnnihilatorChoice annihilator_of(const PointSet& x, AnnihilatorBasis basis) {
  const std::vector<AngleClass> angles = angle_set(x);
  const bool exact = std::all_of(angles.begin(), angles.end(), [](const AngleClass& a) { return a.exact.has_value(); });
  AnnihilatorChoice out;

  if (basis == AnnihilatorBasis::angle_set) {
    if (exact) {
      std::vector<Rational> vals;
      for (const AngleClass& a : angles) vals.push_back(*a.exact);
      out.exact = annihilator(vals);
    } else {
      std::vector<double> vals;
      for (const AngleClass& a : angles) vals.push_back(a.value);
      out.real = annihilator(vals);
      return out;
    }
  } else if (exact) {
    std::vector<Rational> mags;
    for (const AngleClass& a : angles) {
      const Rational m = abs(*a.exact);
      if (m == 1) throw std::domain_error("odd extension needs a set without antipodal pairs");
      if (m != 0 && std::find(mags.begin(), mags.end(), m) == mags.end()) mags.push_back(m);
    }
    std::vector<Rational> vals{Rational(0)};
    for (const Rational& m : mags) {
      vals.push_back(m);
      vals.push_back(Rational(-m));
    }
    out.exact = annihilator(vals);
  } else {
    std::vector<double> mags;
    for (const AngleClass& a : angles) {
      const double m = std::abs(a.value);
      if (m >= 1 - gap(x)) throw std::domain_error("odd extension needs a set without antipodal pairs");
      if (m > gap(x)) mags.push_back(m);
    }
    std::sort(mags.begin(), mags.end());
    std::vector<double> vals{0.0};
    for (std::size_t a = 0; a < mags.size();) {
      std::size_t b = a;
      double sum = mags[a];
      while (b + 1 < mags.size() && mags[b + 1] - mags[b] <= gap(x)) sum += mags[++b];
      const double m = sum / static_cast<double>(b - a + 1);
      vals.push_back(m);
      vals.push_back(-m);
      a = b + 1;
    }
    out.real = annihilator(vals);
    return out;
  }
  out.real = Polynomial<double>(real_coefficients(*out.exact));
  return out;
}

AnnihilatorIdentity verify_annihilator_identity(const PointSet& x, const Polynomial<Rational>& p) {
  const auto& g = x.exact_gram();
  if (!g) return verify_annihilator_identity(x, Polynomial<double>(real_coefficients(p)));

  const int d = x.dim();
  const GegenbauerExpansion<Rational> f = gegenbauer_expand(p, d);
  const int deg = static_cast<int>(f.coeffs.size()) - 1;
  std::map<Rational, Rational> memo;
  auto combined = [&](const Rational& v) -> const Rational& {
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    Rational sum = 0;
    if (deg >= 0) {
      const std::vector<Rational> vals = gegenbauer_values(d, deg, v);
      for (std::size_t k = 0; k < f.coeffs.size(); ++k) sum += f.coeffs[k] * vals[k];
    }
    return memo.emplace(v, sum).first->second;
  };

  RationalMatrix m(x.size(), x.size());
  for (Index i = 0; i < x.size(); ++i) {
    for (Index j = 0; j < x.size(); ++j) m(i, j) = combined((*g)(i, j));
  }
  AnnihilatorIdentity out;
  out.residual = max_abs_entry_minus_identity(m).get_d();
  for (const Rational& c : f.coeffs) out.coeffs.push_back(c.get_d());
  out.exact_coeffs = f.coeffs;
  return out;
}

AnnihilatorIdentity verify_annihilator_identity(const PointSet& x, const Polynomial<double>& p) {
  const int d = x.dim();
  const GegenbauerExpansion<double> f = gegenbauer_expand(p, d);
  const int deg = static_cast<int>(f.coeffs.size()) - 1;
  AnnihilatorIdentity out;
  out.coeffs = f.coeffs;
  if (deg < 0) {
    out.residual = 1;
    return out;
  }
  RealRecurrence rec(d, deg);
  double worst = 0;
  for (Index i = 0; i < x.size(); ++i) {
    for (Index j = 0; j < x.size(); ++j) {
      const auto& vals = rec(x.gram()(i, j));
      double sum = 0;
      for (std::size_t k = 0; k < f.coeffs.size(); ++k) sum += f.coeffs[k] * vals[k];
      worst = std::max(worst, std::abs(sum - (i == j ? 1.0 : 0.0)));
    }
  }
  out.residual = worst;
  return out;
}

AnnihilatorIdentity verify_annihilator_identity(const PointSet& x, AnnihilatorBasis basis) {
  const AnnihilatorChoice choice = annihilator_of(x, basis);
  if (choice.exact) return verify_annihilator_identity(x, *choice.exact);
  return verify_annihilator_identity(x, choice.real);
}

namespace {

Eigen::MatrixXd real_gegenbauer_matrix(const PointSet& x, int k) {
  RealRecurrence rec(x.dim(), k);
  Eigen::MatrixXd out(x.size(), x.size());
  for (Index i = 0; i < x.size(); ++i) {
    for (Index j = 0; j < x.size(); ++j) out(i, j) = rec(x.gram()(i, j))[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace

double verify_orthogonality(const PointSet& half_set, int k, int l, int strength) {
  if (k < 0 || l < 0) throw std::invalid_argument("verify_orthogonality: degrees must be >= 0");
  if (k + l > strength) throw std::invalid_argument("verify_orthogonality: requires k + l <= strength");
  if ((k - l) % 2 != 0) throw std::invalid_argument("verify_orthogonality: requires k = l (mod 2)");
  const Eigen::MatrixXd dk = real_gegenbauer_matrix(half_set, k);
  const Eigen::MatrixXd dl = l == k ? dk : real_gegenbauer_matrix(half_set, l);
  Eigen::MatrixXd r = dk * dl;
  if (k == l) r -= static_cast<double>(half_set.size()) * dk;
  return r.cwiseAbs().maxCoeff();
}

DimIdentity dim_identity(const PointSet& x, AnnihilatorBasis basis) {
  const AnnihilatorChoice choice = annihilator_of(x, basis);
  std::vector<bool> positive;
  if (choice.exact) {
    for (const Rational& c : gegenbauer_expand(*choice.exact, x.dim()).coeffs) positive.push_back(c > 0);
  } else {
    const std::vector<double> f = gegenbauer_expand(choice.real, x.dim()).coeffs;
    double scale = 0;
    for (double c : f) scale = std::max(scale, std::abs(c));
    for (double c : f) positive.push_back(c > 1e-12 * scale);
  }

  DimIdentity out;
  out.size = x.size();
  Eigen::MatrixXd basis_vectors(x.size(), 0);
  for (std::size_t k = 0; k < positive.size(); ++k) {
    if (!positive[k]) continue;
    out.positive_degrees.push_back(static_cast<int>(k));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(real_gegenbauer_matrix(x, static_cast<int>(k)));
    const double top = eig.eigenvalues().maxCoeff();
    if (!(top > 0)) continue;
    for (Index c = 0; c < eig.eigenvalues().size(); ++c) {
      if (eig.eigenvalues()(c) > 1e-8 * top) {
        basis_vectors.conservativeResize(Eigen::NoChange, basis_vectors.cols() + 1);
        basis_vectors.col(basis_vectors.cols() - 1) = eig.eigenvectors().col(c);
      }
    }
  }
  if (basis_vectors.cols() > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> span(basis_vectors * basis_vectors.transpose(),
                                                        Eigen::EigenvaluesOnly);
    const double top = span.eigenvalues().maxCoeff();
    out.dimension = (span.eigenvalues().array() > 1e-8 * top).count();
  }
  out.match = out.dimension == out.size;
  return out;
}

DesignProfile classify(const PointSet& x, int kmax) {
  DesignProfile p;
  const long d = x.dim();
  const long n = static_cast<long>(x.size());
  const double tol = gap(x);

  p.angles = angle_set(x);
  p.s = static_cast<int>(p.angles.size());
  p.coherence = coherence(x);
  p.coherence_sq = coherence_sq_exact(x);
  p.antipodal = is_antipodal(x);
  p.strength = design_strength(x, kmax > 0 ? kmax : 2 * p.s + 2);
  p.tight_frame = tight_frame_check(x).tight;

  const bool exact = p.coherence_sq.has_value();
  const double coh_sq = p.coherence * p.coherence;
  auto matches = [&](const Rational& target) {
    return exact ? *p.coherence_sq == target : std::abs(coh_sq - target.get_d()) <= tol;
  };

  if (n > d) {
    p.welch_sq = welch_sq(d, n);
    bool equiangular = true;
    for (const AngleClass& a : p.angles) {
      equiangular = equiangular && (exact ? (*a.exact) * (*a.exact) == *p.coherence_sq
                                          : std::abs(std::abs(a.value) - p.coherence) <= tol);
    }
    p.etf = equiangular && matches(*p.welch_sq);
  }

  if (3 * n > d * (d + 2) && n > d) {
    p.levenstein_sq = levenstein_sq(d, n);
    bool shape = p.s == 3;
    if (shape) {
      const AngleClass& lo = p.angles[0];
      const AngleClass& mid = p.angles[1];
      const AngleClass& hi = p.angles[2];
      shape = exact ? (*mid.exact == 0 && *lo.exact == -*hi.exact)
                    : (std::abs(mid.value) <= tol && std::abs(lo.value + hi.value) <= tol);
    }
    p.levenstein = shape && matches(*p.levenstein_sq);
  }

  p.verdict = p.etf ? PackingVerdict::etf : p.levenstein ? PackingVerdict::levenstein : PackingVerdict::none;

  if (p.antipodal && p.s >= 1) {
    const BoundReport dgs = dgs_antipodal(static_cast<int>(d), p.s);
    if (dgs.value && *dgs.value == n) {
      p.dgs_tight = true;
      p.notes.push_back("tight: |X| = " + std::to_string(n) + " equals the DGS bound for s = " + std::to_string(p.s));
    }
  }
  if (p.strength.capped) p.notes.push_back("strength capped at kmax = " + std::to_string(p.strength.strength));
  if (!p.strength.exact) p.notes.push_back("numerical certificate, not a proof");
  return p;
}

}  // namespace packcert
