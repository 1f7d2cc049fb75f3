#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "mft/rational.hpp"
#include "mft/vertex_set.hpp"

namespace mft {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMatrix = Matrix<Rational>;

/// Dense polynomial, coeffs[k] is the coefficient of x^k. Trailing zeros up to
/// the declared degree are kept.
template <typename Scalar>
struct Polynomial {
  std::vector<Scalar> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Exact determinant by fraction-free elimination. The empty matrix has
/// determinant 1.
Rational det(const RationalMatrix& m);

/// Partial-pivoting LU determinant.
double det(const Eigen::MatrixXd& m);

/// Throws SingularMatrixError.
RationalMatrix inverse(const RationalMatrix& m);
Eigen::MatrixXd inverse(const Eigen::MatrixXd& m);

/// Copy of `m` without the rows and columns listed in `removed`; survivors
/// keep their relative order.
template <typename Derived>
Matrix<typename Derived::Scalar> delete_rows_cols(const Eigen::MatrixBase<Derived>& m,
                                                  const VertexSet& removed) {
  if (m.rows() != m.cols()) throw std::invalid_argument("delete_rows_cols: matrix not square");
  removed.check_within(static_cast<int>(m.rows()));
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < m.rows(); ++k) {
    if (!removed.contains(static_cast<int>(k))) keep.push_back(k);
  }
  const auto size = static_cast<Eigen::Index>(keep.size());
  Matrix<typename Derived::Scalar> out(size, size);
  for (Eigen::Index r = 0; r < size; ++r) {
    for (Eigen::Index c = 0; c < size; ++c) {
      out(r, c) = m(keep[static_cast<std::size_t>(r)], keep[static_cast<std::size_t>(c)]);
    }
  }
  return out;
}

/// Copy of `m` without row `row` and column `col`.
template <typename Scalar>
Matrix<Scalar> minor_matrix(const Matrix<Scalar>& m, int row, int col) {
  const Eigen::Index n = m.rows();
  Matrix<Scalar> out(n - 1, n - 1);
  for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
    if (r == row) continue;
    for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
      if (c == col) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

/// (-1)^(row+col) times the determinant of `m` with that row and column
/// removed. A 1x1 matrix has cofactor 1. Indices are 0-based.
template <typename Scalar>
Scalar cofactor(const Matrix<Scalar>& m, int row, int col) {
  const auto n = m.rows();
  if (n < 1 || m.cols() != n) throw std::invalid_argument("cofactor: need a non-empty square matrix");
  if (row < 0 || col < 0 || row >= n || col >= n) throw std::out_of_range("cofactor: index out of range");
  const Scalar minor = det(minor_matrix(m, row, col));
  return ((row + col) % 2 == 0) ? minor : Scalar(-minor);
}

/// Transposed cofactor matrix. Uses n^2 cofactors up to n = 12, and
/// det * inverse above that when the matrix is non-singular.
template <typename Scalar>
Matrix<Scalar> adjugate(const Matrix<Scalar>& m) {
  const auto n = m.rows();
  if (n < 1 || m.cols() != n) throw std::invalid_argument("adjugate: need a non-empty square matrix");
  constexpr Eigen::Index kCofactorLimit = 12;
  if (n > kCofactorLimit) {
    const Scalar d = det(m);
    if (d != Scalar(0)) return Matrix<Scalar>(inverse(m) * d);
  }
  Matrix<Scalar> adj(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      adj(j, i) = cofactor(m, static_cast<int>(i), static_cast<int>(j));
    }
  }
  return adj;
}

/// Coefficients of det(x I + m), i.e. the characteristic polynomial of -m,
/// computed with the Faddeev-LeVerrier recurrence. The leading coefficient is 1.
template <typename Scalar>
Polynomial<Scalar> char_poly(const Matrix<Scalar>& m) {
  const auto n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("char_poly: matrix not square");
  const Matrix<Scalar> a = -m;
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar(0));
  c[static_cast<std::size_t>(n)] = Scalar(1);
  Matrix<Scalar> acc = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    acc = a * acc;
    acc.diagonal().array() += c[static_cast<std::size_t>(n - k + 1)];
    const Matrix<Scalar> prod = a * acc;
    c[static_cast<std::size_t>(n - k)] = -prod.trace() / Scalar(static_cast<int>(k));
  }
  return Polynomial<Scalar>{std::move(c)};
}

/// Sum of det(m with rows/cols phi deleted) over all k-subsets phi.
template <typename Scalar>
Scalar principal_minor_sum(const Matrix<Scalar>& m, int k) {
  const int n = static_cast<int>(m.rows());
  if (k < 0 || k > n) throw std::out_of_range("principal_minor_sum: k out of range");
  const VertexSet all = VertexSet::all(n);
  Scalar total(0);
  for_each_combination(all.members(), k,
                       [&](const VertexSet& phi) { total += det(delete_rows_cols(m, phi)); });
  return total;
}

/// Exact conversion to binary64.
Eigen::MatrixXd to_double(const RationalMatrix& m);

}  // namespace mft
