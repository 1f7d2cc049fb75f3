#include "mft/verify.hpp"

#include <algorithm>
#include <optional>
#include <type_traits>

#include "mft/errors.hpp"
#include "mft/forest.hpp"

namespace mft {

namespace {

using oracle::DivergingFamily;
using oracle::RootedFamily;

const Rational kEvaluationPoints[] = {Rational(0), Rational(1), Rational(2), Rational(-1)};

RootedFamily all_forests(const Multigraph& g, oracle::EnumGuard guard) {
  return oracle::enum_rooted_forests(g, guard);
}
DivergingFamily all_forests(const Multidigraph& g, oracle::EnumGuard guard) {
  return oracle::enum_diverging_forests(g, guard);
}

RootedFamily pair_filter(const RootedFamily& f, int i, int j) { return oracle::filter_rooted(f, i, j); }
DivergingFamily pair_filter(const DivergingFamily& f, int i, int j) {
  return oracle::filter_diverging(f, i, j);
}

std::vector<VertexSet> all_subsets(std::span<const int> pool) {
  std::vector<VertexSet> out;
  for (int k = 0; k <= static_cast<int>(pool.size()); ++k) {
    for_each_combination(pool, k, [&](const VertexSet& s) { out.push_back(s); });
  }
  return out;
}

std::string label(const VertexSet& s) {
  std::string out = "{";
  for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v + 1);
  return out + "}";
}

// Collects the first mismatch of a check; a check passes when none is recorded.
class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}

  bool ok() const { return failure_.empty(); }

  void expect(bool condition, const std::string& what) {
    if (!condition && failure_.empty()) failure_ = what;
  }
  void expect_equal(const Rational& got, const Rational& want, const std::string& what) {
    if (got != want && failure_.empty()) failure_ = what + ": " + got.str() + " != " + want.str();
  }

  CheckResult finish(const std::string& pass_detail) const {
    return CheckResult{name_, ok() ? CheckStatus::kPass : CheckStatus::kFail, ok() ? pass_detail : failure_};
  }

 private:
  std::string name_;
  std::string failure_;
};

std::string pos(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

template <typename Graph, typename Family>
class Verifier {
 public:
  Verifier(const Graph& g, oracle::EnumGuard guard)
      : g_(g), any_(g), guard_(guard), n_(g.order()), l_(laplacian_of(any_)), forests_(all_forests(g, guard)) {
    pair_families_.reserve(static_cast<std::size_t>(n_ * n_));
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) pair_families_.push_back(pair_filter(forests_, i, j));
    }
  }

  std::vector<CheckResult> run() {
    std::vector<CheckResult> out;
    out.push_back(matrix_tree());
    out.push_back(forest_determinant());
    out.push_back(forest_cofactors_check());
    out.push_back(accessibility_check());
    out.push_back(partition());
    out.push_back(merge_invariance());
    out.push_back(contraction_minor());
    out.push_back(root_set_minor());
    out.push_back(charpoly());
    out.push_back(cofactor_polynomial());
    out.push_back(path_expansion());
    out.push_back(signed_adjugate());
    out.push_back(converging_duality());
    out.push_back(path_decomposition());
    return out;
  }

 private:
  static constexpr bool kDirected = std::is_same_v<Graph, Multidigraph>;

  const Family& pair(int i, int j) const {
    return pair_families_[static_cast<std::size_t>(i * n_ + j)];
  }

  CheckResult matrix_tree() {
    Check c("matrix-tree");
    const MatrixTreeReport r = matrix_tree_check(any_, guard_);
    c.expect(r.rows_constant, kDirected ? "cofactors of L differ within a row" : "cofactors of L differ");
    for (std::size_t k = 0; k < r.cofactors.size(); ++k) {
      c.expect_equal(r.cofactors[k], r.tree_weights[k], "tree weight for row " + std::to_string(k + 1));
    }
    return c.finish(kDirected ? "row cofactors of L equal diverging-tree weights"
                              : "all cofactors of L equal " + (r.cofactors.empty() ? std::string("-") : r.cofactors.front().str()));
  }

  CheckResult forest_determinant() {
    Check c("forest-determinant");
    const Rational d = forest_det(any_);
    c.expect_equal(d, oracle::weight(forests_), "det(I+L) vs forest weight");
    return c.finish("det(I+L) = " + d.str() + " over " + std::to_string(forests_.size()) + " forests");
  }

  CheckResult forest_cofactors_check() {
    Check c("forest-cofactors");
    const RationalMatrix cof = forest_cofactors(any_);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        c.expect_equal(cof(i, j), oracle::weight(pair(i, j)), "cofactor " + pos(i, j));
        if constexpr (!kDirected) c.expect(cof(i, j) == cof(j, i), "cofactor not symmetric at " + pos(i, j));
      }
    }
    return c.finish("all " + std::to_string(n_ * n_) + " cofactors of I+L match forest weights");
  }

  CheckResult accessibility_check() {
    const Rational total = oracle::weight(forests_);
    if (total.is_zero()) return CheckResult{"accessibility", CheckStatus::kSkipped, "forest matrix is singular"};
    Check c("accessibility");
    const RationalMatrix q = accessibility(any_).q;
    const RationalMatrix w = forest_matrix(l_, Rational(1));
    c.expect(RationalMatrix(q * w) == RationalMatrix::Identity(n_, n_), "Q W != I");
    for (int i = 0; i < n_; ++i) {
      c.expect_equal(q.row(i).sum(), Rational(1), "row sum " + std::to_string(i + 1));
      for (int j = 0; j < n_; ++j) {
        c.expect_equal(q(i, j) * total, oracle::weight(pair(j, i)), "q" + pos(i, j) + " * weight");
        if constexpr (!kDirected) c.expect(q(i, j) == q(j, i), "Q not symmetric at " + pos(i, j));
      }
    }
    return c.finish("Q W = I, rows sum to 1, entries match forest ratios");
  }

  CheckResult partition() {
    Check c("partition");
    const Rational d = forest_det(any_);
    const RationalMatrix cof = forest_cofactors(any_);
    for (int i = 0; i < n_; ++i) {
      Rational column;
      std::size_t members = 0;
      for (int j = 0; j < n_; ++j) {
        column += cof(j, i);
        members += pair(j, i).size();
      }
      c.expect_equal(column, d, "column " + std::to_string(i + 1) + " cofactor sum");
      c.expect(members == forests_.size(), "forest families for vertex " + std::to_string(i + 1) +
                                               " do not partition the forests");
    }
    return c.finish("cofactor columns sum to det(I+L); forest families partition");
  }

  CheckResult merge_invariance() {
    Check c("parallel-merge-invariance");
    const Graph merged = merge_parallel(g_);
    const RationalMatrix w = forest_matrix(l_, Rational(1));
    const AnyGraph merged_any(merged);
    c.expect(forest_matrix(laplacian_of(merged_any), Rational(1)) == w, "W changed by merging");
    c.expect_equal(forest_det(merged_any), forest_det(any_), "det W after merging");
    c.expect(forest_cofactors(merged_any) == forest_cofactors(any_), "cofactors changed by merging");
    const Family merged_forests = all_forests(merged, guard_);
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        c.expect_equal(oracle::weight(pair_filter(merged_forests, a, b)), oracle::weight(pair(a, b)),
                       "forest weight " + pos(a, b) + " after merging");
      }
    }
    if (g_.size() > 0) {
      const Rational part = ([&] {
        if constexpr (kDirected) return g_.arcs()[0].weight / Rational(3);
        else return g_.edges()[0].weight / Rational(3);
      })();
      const AnyGraph split(split_instance(g_, 0, part));
      c.expect(forest_matrix(laplacian_of(split), Rational(1)) == w, "W changed by splitting");
      c.expect_equal(forest_det(split), forest_det(any_), "det W after splitting");
      c.expect(forest_cofactors(split) == forest_cofactors(any_), "cofactors changed by splitting");
    }
    return c.finish("W, det W, cofactors and forest weights unchanged by merging/splitting");
  }

  CheckResult contraction_minor() {
    Check c("contraction-minor");
    int checked = 0;
    for (const VertexSet& phi : all_subsets(VertexSet::all(n_).members())) {
      if (phi.empty()) continue;
      const Rational minor = det(delete_rows_cols(l_, phi));
      const auto contracted = contract(g_, phi);
      const AnyGraph contracted_any(contracted.graph);
      const Rational contracted_minor =
          det(delete_rows_cols(laplacian_of(contracted_any), VertexSet{contracted.merged}));
      Rational trees;
      if constexpr (kDirected) {
        trees = oracle::weight(oracle::enum_diverging_trees(contracted.graph, contracted.merged, guard_));
      } else {
        trees = oracle::weight(oracle::enum_spanning_trees(contracted.graph, guard_));
      }
      c.expect_equal(contracted_minor, minor, "contracted minor for " + label(phi));
      c.expect_equal(trees, minor, "trees from merged vertex for " + label(phi));
      ++checked;
    }
    return c.finish(std::to_string(checked) + " vertex sets: det L_-phi = contracted minor = tree weight");
  }

  CheckResult root_set_minor() {
    Check c("root-set-minor");
    for (const VertexSet& phi : all_subsets(VertexSet::all(n_).members())) {
      if (phi.empty() && n_ == 0) continue;
      c.expect_equal(forest_minor(any_, phi), oracle::weight(oracle::filter_roots(forests_, phi)),
                     "det L_-phi for " + label(phi));
    }
    return c.finish("det L_-phi equals weight of forests rooted exactly at phi");
  }

  CheckResult charpoly() {
    Check c("charpoly-coefficients");
    const Polynomial<Rational> p = charpoly_forest_coeffs(any_);
    c.expect(p.degree() == n_, "wrong degree");
    for (int k = 0; k <= n_ && p.degree() == n_; ++k) {
      const Rational& ck = p.coeffs[static_cast<std::size_t>(k)];
      c.expect_equal(ck, principal_minor_sum(l_, k), "c_" + std::to_string(k) + " vs principal minors");
      Rational rooted;
      for_each_combination(VertexSet::all(n_).members(), k, [&](const VertexSet& phi) {
        rooted += oracle::weight(oracle::filter_roots(forests_, phi));
      });
      c.expect_equal(ck, rooted, "c_" + std::to_string(k) + " vs forests with " + std::to_string(k) + " roots");
    }
    c.expect_equal(p(Rational(1)), forest_det(any_), "p(1) vs det W");
    return c.finish("c_k match principal minor sums and k-root forest weights; p(1) = det W");
  }

  // Sum over phi of the weight of forests in pair(i,j) rooted exactly at phi + {i}.
  std::vector<Rational> cofactor_oracle(int i, int j, bool signed_variant) const {
    std::vector<Rational> b(static_cast<std::size_t>(n_));
    std::vector<int> pool;
    for (int v = 0; v < n_; ++v) {
      if (v != i && v != j) pool.push_back(v);
    }
    for (int k = 0; k <= static_cast<int>(pool.size()); ++k) {
      for_each_combination(pool, k, [&](const VertexSet& phi) {
        const Family f = oracle::filter_roots(pair(i, j), phi.with(i));
        b[static_cast<std::size_t>(k)] += signed_variant ? oracle::signed_weight(f) : oracle::weight(f);
      });
    }
    return b;
  }

  CheckResult cofactor_polynomial() {
    Check c("cofactor-polynomial");
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        const Polynomial<Rational> b = cofactor_poly(any_, i, j);
        c.expect(b.coeffs == cofactor_oracle(i, j, false), "coefficients at " + pos(i, j));
        for (const Rational& x : kEvaluationPoints) {
          c.expect_equal(b(x), cofactor(forest_matrix(l_, x), i, j),
                         "value at lambda=" + x.str() + " for " + pos(i, j));
        }
      }
    }
    return c.finish("b_k match forest sums; values at lambda in {0,1,2,-1} match direct cofactors");
  }

  CheckResult path_expansion() {
    Check c("path-expansion");
    int checked = 0;
    for (const VertexSet& phi : all_subsets(VertexSet::all(n_).members())) {
      const RationalMatrix sub = delete_rows_cols(l_, phi);
      const int m = static_cast<int>(sub.rows());
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          if (i == j) continue;
          c.expect_equal(maybee_cofactor(sub, i, j), cofactor(sub, i, j),
                         "path expansion of " + pos(i, j) + " in L_-" + label(phi));
          ++checked;
        }
      }
    }
    return c.finish(std::to_string(checked) + " off-diagonal cofactors of L and its principal submatrices");
  }

  CheckResult signed_adjugate() {
    Check c("signed-adjugate");
    const RationalMatrix negated = -l_;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        const Polynomial<Rational> s = signed_adjugate_coeffs(any_, i, j);
        c.expect(s == cofactor_poly(negated, i, j), "coefficients vs cofactor of lambda I - L at " + pos(i, j));
        c.expect(s.coeffs == cofactor_oracle(i, j, true), "coefficients vs signed forest sums at " + pos(i, j));
        for (const Rational& x : kEvaluationPoints) {
          c.expect_equal(s(x), cofactor(forest_matrix(negated, x), i, j),
                         "value at lambda=" + x.str() + " for " + pos(i, j));
        }
      }
    }
    return c.finish("signed coefficients match lambda I - L cofactors and signed forest sums");
  }

  // Directed-only checks run on the bidirected graph for undirected inputs
  // when it fits under the guard.
  std::optional<Multidigraph> directed_view() const {
    if constexpr (kDirected) {
      return g_;
    } else {
      if (static_cast<int>(2 * g_.size()) > guard_.max_instances) return std::nullopt;
      return to_bidirected(g_);
    }
  }

  CheckResult converging_duality() {
    const auto d = directed_view();
    if (!d) return CheckResult{"converging-duality", CheckStatus::kSkipped, "bidirected graph above guard"};
    Check c("converging-duality");
    const AnyGraph reversed(reverse(*d));
    const auto converging = oracle::enum_converging_forests(*d, guard_);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        c.expect_equal(forest_cofactor(reversed, i, j),
                       oracle::weight(oracle::filter_converging(converging, i, j)),
                       "reversed cofactor " + pos(i, j));
      }
    }
    return c.finish("cofactors of the reversed graph match converging-forest weights");
  }

  CheckResult path_decomposition() {
    const auto d = directed_view();
    if (!d) return CheckResult{"path-decomposition", CheckStatus::kSkipped, "bidirected graph above guard"};
    Check c("path-decomposition");
    const DivergingFamily forests = oracle::enum_diverging_forests(*d, guard_);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (i == j) continue;
        const auto paths = oracle::enum_paths(*d, i, j, guard_);
        const DivergingFamily target = oracle::filter_diverging(forests, i, j);
        std::vector<int> pool;
        for (int v = 0; v < n_; ++v) {
          if (v != i && v != j) pool.push_back(v);
        }
        for (const VertexSet& phi : all_subsets(pool)) {
          Rational via_paths;
          for (const auto& p : paths) {
            // Paths live in the subgraph induced on the vertices outside phi.
            if (std::any_of(p.vertices.begin(), p.vertices.end(), [&](int v) { return phi.contains(v); })) continue;
            via_paths += oracle::weight_of(p, *d) *
                         oracle::weight(oracle::filter_roots(forests, phi.united(p.vertex_set())));
          }
          c.expect_equal(via_paths, oracle::weight(oracle::filter_roots(target, phi.with(i))),
                         "path decomposition " + pos(i, j) + " phi=" + label(phi));
        }
      }
    }
    return c.finish("path weight x complementary forests = forests with j under i");
  }

  const Graph& g_;
  AnyGraph any_;
  oracle::EnumGuard guard_;
  int n_;
  RationalMatrix l_;
  Family forests_;
  std::vector<Family> pair_families_;
};

void check_guard(const AnyGraph& g, const oracle::EnumGuard& guard) {
  const auto instances = std::visit([](const auto& h) { return h.size(); }, g);
  if (order(g) > guard.max_vertices || static_cast<int>(instances) > guard.max_instances) {
    throw GuardExceeded("graph is above the enumeration guard (" + std::to_string(guard.max_vertices) +
                        " vertices, " + std::to_string(guard.max_instances) + " instances)");
  }
}

}  // namespace

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "unknown";
}

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::kFail; });
}

VerifyReport verify(const AnyGraph& g, oracle::EnumGuard guard) {
  check_guard(g, guard);
  if (const auto* u = std::get_if<Multigraph>(&g)) {
    return VerifyReport{Verifier<Multigraph, RootedFamily>(*u, guard).run()};
  }
  return VerifyReport{Verifier<Multidigraph, DivergingFamily>(std::get<Multidigraph>(g), guard).run()};
}

}  // namespace mft
