#pragma once

#include <Eigen/Core>

#include "packcert/pointset.hpp"

namespace packcert {

/// d+1 unit vectors in R^d with pairwise inner product -1/d (Gram-exact).
PointSet simplex_etf(int d);

/// e_1, -e_1, e_2, -e_2, ... (exact).
PointSet cross_polytope(int d);

/// The 12 vertices: cyclic shifts of (0, +-1, +-phi) / sqrt(1 + phi^2).
PointSet icosahedron();

/// The 240 minimal vectors of E8 scaled to unit length. Coordinates are the
/// 112 vectors with two entries +-1 and the 128 vectors of +-1/2 entries with
/// an even number of minus signs, held exactly with Gram scale 1/2.
PointSet e8_roots();

/// Points of an antipodal x orthogonal to x[index], written in R^{d-1} through
/// the Householder reflection taking x[index] to e_1. Exact Gram data carries
/// over. Throws std::invalid_argument when no point is orthogonal.
PointSet derived_code(const PointSet& x, Eigen::Index index);

}  // namespace packcert
