#include "mft/forest.hpp"

#include <stdexcept>
#include <utility>

#include "mft/errors.hpp"

namespace mft {

namespace {

Multidigraph as_digraph(const AnyGraph& g) {
  if (const auto* u = std::get_if<Multigraph>(&g)) return to_bidirected(*u);
  return std::get<Multidigraph>(g);
}

RationalMatrix forest_matrix_of(const AnyGraph& g) {
  return forest_matrix(kirchhoff(as_digraph(g)), Rational(1));
}

void check_pair(const AnyGraph& g, int i, int j) {
  const int n = order(g);
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("vertex out of range");
}

// Cofactor of the entry that was (i, j) in m once `removed` (which holds
// neither i nor j) is deleted.
Rational cofactor_after_removal(const RationalMatrix& m, int i, int j, const VertexSet& removed) {
  if (i == j) return det(delete_rows_cols(m, removed.with(i)));
  return cofactor(delete_rows_cols(m, removed), remapped_index(i, removed),
                  remapped_index(j, removed));
}

}  // namespace

Rational forest_det(const AnyGraph& g) { return det(forest_matrix_of(g)); }

Rational forest_cofactor(const AnyGraph& g, int i, int j) {
  check_pair(g, i, j);
  return cofactor(forest_matrix_of(g), i, j);
}

RationalMatrix forest_cofactors(const AnyGraph& g) {
  const RationalMatrix w = forest_matrix_of(g);
  const auto n = w.rows();
  RationalMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = cofactor(w, static_cast<int>(i), static_cast<int>(j));
  }
  return out;
}

AccessibilityMatrix accessibility(const AnyGraph& g) {
  try {
    return AccessibilityMatrix{inverse(forest_matrix_of(g))};
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("forest matrix is singular: total forest weight is zero");
  }
}

Polynomial<Rational> charpoly_forest_coeffs(const AnyGraph& g) {
  return char_poly(kirchhoff(as_digraph(g)));
}

Polynomial<Rational> cofactor_poly(const RationalMatrix& m, int i, int j) {
  const int n = static_cast<int>(m.rows());
  if (n < 1 || m.cols() != n) throw std::invalid_argument("cofactor_poly: need a non-empty square matrix");
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("cofactor_poly: index out of range");

  std::vector<int> pool;
  for (int v = 0; v < n; ++v) {
    if (v != i && v != j) pool.push_back(v);
  }
  Polynomial<Rational> p{std::vector<Rational>(static_cast<std::size_t>(n))};
  for (int k = 0; k <= static_cast<int>(pool.size()); ++k) {
    Rational& b = p.coeffs[static_cast<std::size_t>(k)];
    for_each_combination(pool, k, [&](const VertexSet& phi) { b += cofactor_after_removal(m, i, j, phi); });
  }
  return p;
}

Polynomial<Rational> cofactor_poly(const AnyGraph& g, int i, int j) {
  check_pair(g, i, j);
  return cofactor_poly(kirchhoff(as_digraph(g)), i, j);
}

Polynomial<Rational> signed_adjugate_coeffs(const AnyGraph& g, int i, int j) {
  Polynomial<Rational> p = cofactor_poly(g, i, j);
  const int n = order(g);
  for (int k = 0; k < n; ++k) {
    if ((n - 1 - k) % 2 != 0) p.coeffs[static_cast<std::size_t>(k)] = -p.coeffs[static_cast<std::size_t>(k)];
  }
  return p;
}

Rational maybee_cofactor(const RationalMatrix& m, int i, int j) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw std::invalid_argument("maybee_cofactor: matrix not square");
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("maybee_cofactor: index out of range");
  if (i == j) throw std::invalid_argument("maybee_cofactor: path expansion needs i != j");

  // successors[v]: (w, weight of arc v -> w) for every non-zero m(w, v).
  std::vector<std::vector<std::pair<int, Rational>>> successors(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      if (w != v && !m(w, v).is_zero()) successors[static_cast<std::size_t>(v)].emplace_back(w, -m(w, v));
    }
  }

  Rational total;
  std::vector<int> on_path{i};
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  visited[static_cast<std::size_t>(i)] = true;
  auto walk = [&](auto&& self, int v, const Rational& weight) -> void {
    if (v == j) {
      total += weight * det(delete_rows_cols(m, VertexSet(on_path)));
      return;
    }
    for (const auto& [w, arc_weight] : successors[static_cast<std::size_t>(v)]) {
      if (visited[static_cast<std::size_t>(w)]) continue;
      visited[static_cast<std::size_t>(w)] = true;
      on_path.push_back(w);
      self(self, w, weight * arc_weight);
      on_path.pop_back();
      visited[static_cast<std::size_t>(w)] = false;
    }
  };
  walk(walk, i, Rational(1));
  return total;
}

Rational forest_minor(const AnyGraph& g, const VertexSet& phi) {
  return det(delete_rows_cols(laplacian_of(g), phi));
}

MatrixTreeReport matrix_tree_check(const AnyGraph& g, oracle::EnumGuard guard) {
  const RationalMatrix l = laplacian_of(g);
  const int n = static_cast<int>(l.rows());
  MatrixTreeReport report;
  report.directed = std::holds_alternative<Multidigraph>(g);
  report.rows_constant = true;
  report.matches_trees = true;
  if (n == 0) return report;

  if (!report.directed) {
    const Rational common = cofactor(l, 0, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) report.rows_constant = report.rows_constant && cofactor(l, i, j) == common;
    }
    report.cofactors.push_back(common);
    report.tree_weights.push_back(oracle::weight(oracle::enum_spanning_trees(std::get<Multigraph>(g), guard)));
    report.matches_trees = common == report.tree_weights.front();
    return report;
  }

  const auto& digraph = std::get<Multidigraph>(g);
  const oracle::DivergingFamily forests = oracle::enum_diverging_forests(digraph, guard);
  for (int i = 0; i < n; ++i) {
    const Rational row_value = cofactor(l, i, 0);
    for (int j = 1; j < n; ++j) report.rows_constant = report.rows_constant && cofactor(l, i, j) == row_value;
    const Rational trees = oracle::weight(oracle::filter_roots(forests, VertexSet{i}));
    report.cofactors.push_back(row_value);
    report.tree_weights.push_back(trees);
    report.matches_trees = report.matches_trees && row_value == trees;
  }
  return report;
}

}  // namespace mft
