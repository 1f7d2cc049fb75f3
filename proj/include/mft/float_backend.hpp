#pragma once

// binary64 mirror of the exact forest operations, for graphs too large for
// exact arithmetic. Never used for verification.

#include <span>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "mft/graph.hpp"

namespace mft::fp {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// lambda I + L as a sparse matrix; parallel instances are summed.
SparseMatrix sparse_forest_matrix(const AnyGraph& g, double lambda = 1.0);

/// Columns `columns` of W^-1, i.e. the solutions of W x = e_c, from one sparse
/// LU factorisation. Throws SingularMatrixError.
Eigen::MatrixXd solve_unit_columns(const SparseMatrix& w, std::span<const int> columns);

/// Dense (lambda I + L)^-1 via partial-pivoting LU. Throws SingularMatrixError.
Eigen::MatrixXd accessibility(const AnyGraph& g, double lambda = 1.0);

double forest_det(const AnyGraph& g, double lambda = 1.0);

}  // namespace mft::fp
