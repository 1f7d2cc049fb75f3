#include "mft/float_backend.hpp"

#include <vector>

#include <Eigen/SparseLU>

#include "mft/errors.hpp"
#include "mft/matrix.hpp"

namespace mft::fp {

namespace {

using Triplet = Eigen::Triplet<double>;

void add_arc(std::vector<Triplet>& t, int tail, int head, double w) {
  t.emplace_back(head, tail, -w);
  t.emplace_back(head, head, w);
}

}  // namespace

SparseMatrix sparse_forest_matrix(const AnyGraph& g, double lambda) {
  const int n = order(g);
  std::vector<Triplet> triplets;
  for (int v = 0; v < n; ++v) triplets.emplace_back(v, v, lambda);
  if (const auto* u = std::get_if<Multigraph>(&g)) {
    for (const Edge& e : u->edges()) {
      add_arc(triplets, e.u, e.v, e.weight.to_double());
      add_arc(triplets, e.v, e.u, e.weight.to_double());
    }
  } else {
    for (const Arc& a : std::get<Multidigraph>(g).arcs()) add_arc(triplets, a.tail, a.head, a.weight.to_double());
  }
  SparseMatrix w(n, n);
  w.setFromTriplets(triplets.begin(), triplets.end());
  w.makeCompressed();
  return w;
}

Eigen::MatrixXd solve_unit_columns(const SparseMatrix& w, std::span<const int> columns) {
  Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
  lu.compute(w);
  if (lu.info() != Eigen::Success) throw SingularMatrixError("sparse LU failed: " + lu.lastErrorMessage());
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(w.rows(), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t k = 0; k < columns.size(); ++k) rhs(columns[k], static_cast<Eigen::Index>(k)) = 1.0;
  Eigen::MatrixXd x = lu.solve(rhs);
  if (lu.info() != Eigen::Success) throw SingularMatrixError("sparse solve failed");
  return x;
}

Eigen::MatrixXd accessibility(const AnyGraph& g, double lambda) {
  const Eigen::MatrixXd w = Eigen::MatrixXd(sparse_forest_matrix(g, lambda));
  return inverse(w);
}

double forest_det(const AnyGraph& g, double lambda) {
  return det(Eigen::MatrixXd(sparse_forest_matrix(g, lambda)));
}

}  // namespace mft::fp
