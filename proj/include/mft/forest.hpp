#pragma once

#include <vector>

#include "mft/graph.hpp"
#include "mft/matrix.hpp"
#include "mft/oracle.hpp"
#include "mft/rational.hpp"
#include "mft/vertex_set.hpp"

namespace mft {

/// lambda * I + L.
template <typename Scalar>
Matrix<Scalar> forest_matrix(const Matrix<Scalar>& laplacian, const Scalar& lambda = Scalar(1)) {
  Matrix<Scalar> w = laplacian;
  w.diagonal().array() += lambda;
  return w;
}

// Graph-level operations accept either kind. Undirected graphs are handled by
// their bidirected digraph, which has the same Kirchhoff matrix.

/// det(I + L): total weight of spanning diverging (resp. rooted) forests.
Rational forest_det(const AnyGraph& g);

/// Cofactor of entry (i, j) of I + L: weight of the forests in which j lies in
/// the tree diverging from (rooted at) i. Throws std::out_of_range.
Rational forest_cofactor(const AnyGraph& g, int i, int j);

/// All n^2 cofactors of I + L, entry (i, j) = cofactor of (i, j).
RationalMatrix forest_cofactors(const AnyGraph& g);

struct AccessibilityMatrix {
  RationalMatrix q;
};

/// Q = (I + L)^-1. Entry (i, j) is the relative forest accessibility of i
/// from j; rows sum to one. Throws SingularMatrixError when det(I + L) = 0.
AccessibilityMatrix accessibility(const AnyGraph& g);

/// Coefficients c_0..c_n of det(lambda I + L).
Polynomial<Rational> charpoly_forest_coeffs(const AnyGraph& g);

/// Coefficients b_0..b_{n-1} of the (i, j) cofactor of lambda I + m, summed
/// over principal submatrices: b_k is the sum, over k-subsets phi of the
/// vertices other than i and j, of the cofactor inside m_{-phi} of the entry
/// that was (i, j) in m.
Polynomial<Rational> cofactor_poly(const RationalMatrix& m, int i, int j);
Polynomial<Rational> cofactor_poly(const AnyGraph& g, int i, int j);

/// Cofactor (i, j) of lambda I - L, i.e. the adjugate of the characteristic
/// matrix of L. Every forest in the k-th coefficient has n - 1 - k arcs, so
/// the sign pattern is (-1)^(n-1-k).
Polynomial<Rational> signed_adjugate_coeffs(const AnyGraph& g, int i, int j);

/// Cofactor of entry (i, j) of m, i != j, by path expansion: sum over simple
/// paths i -> j in the digraph that has an arc c -> r of weight -m(r, c) for
/// every non-zero off-diagonal entry, of path weight times the determinant of
/// m without the path's vertices. Throws std::invalid_argument when i == j.
Rational maybee_cofactor(const RationalMatrix& m, int i, int j);

/// det of L with the rows and columns of phi removed: the weight of the
/// spanning forests whose root set is exactly phi (phi = all vertices gives 1).
Rational forest_minor(const AnyGraph& g, const VertexSet& phi);

struct MatrixTreeReport {
  bool directed = false;
  /// Undirected: one common value. Directed: the common value of each row.
  std::vector<Rational> cofactors;
  /// Spanning-tree weight (undirected) or tree weight diverging from each vertex.
  std::vector<Rational> tree_weights;
  bool rows_constant = false;
  bool matches_trees = false;

  bool passed() const { return rows_constant && matches_trees; }
};

/// Compares the cofactors of L against enumerated spanning trees.
/// Throws GuardExceeded.
MatrixTreeReport matrix_tree_check(const AnyGraph& g, oracle::EnumGuard guard = {});

}  // namespace mft
