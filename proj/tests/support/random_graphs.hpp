#pragma once

#include <random>
#include <vector>

#include "mft/graph.hpp"
#include "mft/matrix.hpp"
#include "mft/rational.hpp"

namespace mft::testing {

/// {+-1, +-2, +-1/2, +-3/2, +-1/3}
inline std::vector<Rational> signed_weight_pool() {
  std::vector<Rational> pool;
  for (const char* w : {"1", "2", "1/2", "3/2", "1/3"}) {
    pool.push_back(Rational::parse(w));
    pool.push_back(-Rational::parse(w));
  }
  return pool;
}

inline std::vector<Rational> positive_weight_pool() {
  std::vector<Rational> pool;
  for (const char* w : {"1", "2", "1/2", "3/2", "1/3"}) pool.push_back(Rational::parse(w));
  return pool;
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items) {
  return items[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(items.size()) - 1))];
}

inline std::pair<int, int> distinct_pair(std::mt19937_64& rng, int n) {
  const int a = uniform_int(rng, 0, n - 1);
  int b = uniform_int(rng, 0, n - 2);
  if (b >= a) ++b;
  return {a, b};
}

inline Multigraph random_multigraph(std::mt19937_64& rng, int n_min, int n_max, int max_instances,
                                    const std::vector<Rational>& pool) {
  const int n = uniform_int(rng, n_min, n_max);
  const int m = n < 2 ? 0 : uniform_int(rng, 0, max_instances);
  std::vector<Edge> edges;
  for (int k = 0; k < m; ++k) {
    const auto [u, v] = distinct_pair(rng, n);
    edges.push_back(Edge{u, v, pick(rng, pool)});
  }
  return Multigraph(n, std::move(edges));
}

inline Multidigraph random_multidigraph(std::mt19937_64& rng, int n_min, int n_max, int max_instances,
                                        const std::vector<Rational>& pool) {
  const int n = uniform_int(rng, n_min, n_max);
  const int m = n < 2 ? 0 : uniform_int(rng, 0, max_instances);
  std::vector<Arc> arcs;
  for (int k = 0; k < m; ++k) {
    const auto [t, h] = distinct_pair(rng, n);
    arcs.push_back(Arc{t, h, pick(rng, pool)});
  }
  return Multidigraph(n, std::move(arcs));
}

/// Same-weight copy of `g` with every weight replaced by 1.
template <typename Graph>
Graph unit_weights(const Graph& g) {
  if constexpr (std::is_same_v<Graph, Multigraph>) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (auto& e : edges) e.weight = 1;
    return Multigraph(g.order(), std::move(edges));
  } else {
    std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
    for (auto& a : arcs) a.weight = 1;
    return Multidigraph(g.order(), std::move(arcs));
  }
}

/// Dense matrix with entries drawn from `pool` plus zeros.
inline RationalMatrix random_matrix(std::mt19937_64& rng, int n, const std::vector<Rational>& pool) {
  RationalMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = uniform_int(rng, 0, 3) == 0 ? Rational(0) : pick(rng, pool);
  }
  return m;
}

inline Multigraph unit_k3() {
  return Multigraph(3, {Edge{0, 1, 1}, Edge{1, 2, 1}, Edge{0, 2, 1}});
}

inline Multigraph single_edge() { return Multigraph(2, {Edge{0, 1, 1}}); }

inline Multidigraph single_arc() { return Multidigraph(2, {Arc{0, 1, 1}}); }

inline Multidigraph directed_3_cycle() {
  return Multidigraph(3, {Arc{0, 1, 1}, Arc{1, 2, 1}, Arc{2, 0, 1}});
}

}  // namespace mft::testing
