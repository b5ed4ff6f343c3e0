#include "packcert/constructions.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace packcert {

using Eigen::Index;

namespace {

void require_dimension(int d, const char* what) {
  if (d < 2) throw std::invalid_argument(std::string(what) + ": dimension must be >= 2");
}

}  // namespace

PointSet simplex_etf(int d) {
  require_dimension(d, "simplex_etf");
  const Index n = d + 1;
  RationalMatrix g(n, n);
  Eigen::MatrixXd real(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      g(i, j) = i == j ? Rational(1) : Rational(-1, d);
      real(i, j) = g(i, j).get_d();
    }
  }
  // The Gram matrix has eigenvalue (d+1)/d on the sum-zero hyperplane and 0 on
  // the all-ones vector; the top d eigenpairs give coordinates.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(real);
  Eigen::MatrixXd rows(n, d);
  for (int c = 0; c < d; ++c) {
    const Index col = n - 1 - c;
    rows.col(c) = eig.eigenvectors().col(col) * std::sqrt(eig.eigenvalues()(col));
  }
  return PointSet::with_exact_gram(std::move(rows), std::move(g));
}

PointSet cross_polytope(int d) {
  require_dimension(d, "cross_polytope");
  RationalMatrix r = RationalMatrix::Constant(2 * d, d, Rational(0));
  for (int i = 0; i < d; ++i) {
    r(2 * i, i) = 1;
    r(2 * i + 1, i) = -1;
  }
  return PointSet::from_exact(r);
}

PointSet icosahedron() {
  const double phi = std::numbers::phi;
  const double scale = 1 / std::sqrt(1 + phi * phi);
  Eigen::MatrixXd rows(12, 3);
  Index row = 0;
  for (int shift = 0; shift < 3; ++shift) {
    for (double s1 : {1.0, -1.0}) {
      for (double s2 : {1.0, -1.0}) {
        const double v[3] = {0.0, s1, s2 * phi};
        for (int c = 0; c < 3; ++c) rows(row, (c + shift) % 3) = v[c] * scale;
        ++row;
      }
    }
  }
  return PointSet::from_rows(std::move(rows));
}

PointSet e8_roots() {
  std::vector<std::vector<Rational>> pts;
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          std::vector<Rational> p(8, Rational(0));
          p[static_cast<std::size_t>(i)] = si;
          p[static_cast<std::size_t>(j)] = sj;
          pts.push_back(std::move(p));
        }
      }
    }
  }
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    std::vector<Rational> p(8);
    for (unsigned c = 0; c < 8; ++c) p[c] = (mask >> c) & 1U ? Rational(-1, 2) : Rational(1, 2);
    pts.push_back(std::move(p));
  }
  return validate_exact(pts, Rational(1, 2));
}

PointSet derived_code(const PointSet& x, Index index) {
  if (index < 0 || index >= x.size()) throw std::out_of_range("derived_code: index out of range");
  if (!is_antipodal(x)) throw std::invalid_argument("derived_code: point set is not antipodal");
  const int d = x.dim();
  if (d < 3) throw std::invalid_argument("derived_code: dimension must be >= 3");

  std::vector<Index> keep;
  for (Index j = 0; j < x.size(); ++j) {
    const bool orthogonal = x.exact_gram() ? (*x.exact_gram())(index, j) == 0
                                           : std::abs(x.gram()(index, j)) <= 10 * x.tolerance();
    if (orthogonal) keep.push_back(j);
  }
  if (keep.empty()) throw std::invalid_argument("derived_code: no point is orthogonal to the chosen one");

  const Eigen::VectorXd p = x.points().row(index).transpose();
  Eigen::VectorXd v = p;
  v(0) -= 1;
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(d, d);
  if (v.norm() > 1e-12) h -= 2 * v * v.transpose() / v.squaredNorm();

  Eigen::MatrixXd rows(static_cast<Index>(keep.size()), d - 1);
  for (std::size_t a = 0; a < keep.size(); ++a) {
    const Eigen::VectorXd y = h * x.points().row(keep[a]).transpose();
    rows.row(static_cast<Index>(a)) = y.tail(d - 1).transpose();
  }

  if (!x.exact_gram()) return PointSet::from_rows(std::move(rows), x.tolerance());
  const PointSet sub = x.subset(keep);
  return PointSet::with_exact_gram(std::move(rows), *sub.exact_gram(), x.tolerance());
}

}  // namespace packcert
