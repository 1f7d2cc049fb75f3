#include "mft/matrix.hpp"

#include <utility>

#include <Eigen/LU>

#include "mft/errors.hpp"

namespace mft {

Rational det(const RationalMatrix& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("det: matrix not square");
  if (n == 0) return Rational(1);

  // Scale each row by the lcm of its denominators; the integer matrix has
  // determinant det(m) * prod(scale).
  std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(n));
  mpz_class scale = 1;
  for (Eigen::Index r = 0; r < n; ++r) {
    mpz_class row_lcm = 1;
    for (Eigen::Index c = 0; c < n; ++c) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).gmp().get_den_mpz_t());
    }
    scale *= row_lcm;
    auto& row = a[static_cast<std::size_t>(r)];
    row.resize(static_cast<std::size_t>(n));
    for (Eigen::Index c = 0; c < n; ++c) {
      const mpq_class& q = m(r, c).gmp();
      row[static_cast<std::size_t>(c)] = q.get_num() * (row_lcm / q.get_den());
    }
  }

  // Bareiss: after step k every entry below is an exact (k+1)-minor, so the
  // division by the previous pivot never leaves the integers.
  const auto size = static_cast<std::size_t>(n);
  bool negate = false;
  mpz_class prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == size) return Rational(0);
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        mpz_class v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev_pivot = a[k][k];
  }
  mpz_class d = a[size - 1][size - 1];
  if (negate) d = -d;
  return Rational(d, scale);
}

double det(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  if (m.rows() == 0) return 1.0;
  return Eigen::PartialPivLU<Eigen::MatrixXd>(m).determinant();
}

RationalMatrix inverse(const RationalMatrix& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse: matrix not square");
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && a(pivot, k).is_zero()) ++pivot;
    if (pivot == n) throw SingularMatrixError("matrix is singular");
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      inv.row(k).swap(inv.row(pivot));
    }
    const Rational p = a(k, k);
    for (Eigen::Index c = 0; c < n; ++c) {
      a(k, c) /= p;
      inv(k, c) /= p;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == k || a(r, k).is_zero()) continue;
      const Rational f = a(r, k);
      for (Eigen::Index c = 0; c < n; ++c) {
        a(r, c) -= f * a(k, c);
        inv(r, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

Eigen::MatrixXd inverse(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  if (m.rows() > 0 && lu.determinant() == 0.0) throw SingularMatrixError("matrix is singular");
  return lu.inverse();
}

Eigen::MatrixXd to_double(const RationalMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_double();
  }
  return out;
}

}  // namespace mft
