#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "mft/matrix.hpp"
#include "mft/rational.hpp"
#include "mft/vertex_set.hpp"

namespace mft {

// Vertices are 0-based throughout the library; 1-based labels only exist in
// the file format and CLI.

struct Edge {
  int u = 0;
  int v = 0;
  Rational weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  int tail = 0;
  int head = 0;
  Rational weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Weighted undirected multigraph. Parallel edges are distinct instances;
/// weights may be zero or negative. Self-loops are rejected.
class Multigraph {
 public:
  /// Throws ValidationError on a self-loop or an out-of-range endpoint.
  explicit Multigraph(int n, std::vector<Edge> edges = {});

  int order() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
};

/// Weighted multidigraph; same conventions as Multigraph.
class Multidigraph {
 public:
  explicit Multidigraph(int n, std::vector<Arc> arcs = {});

  int order() const { return n_; }
  std::span<const Arc> arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }

  friend bool operator==(const Multidigraph&, const Multidigraph&) = default;

 private:
  int n_;
  std::vector<Arc> arcs_;
};

using AnyGraph = std::variant<Multigraph, Multidigraph>;

int order(const AnyGraph& g);

/// Symmetric Laplacian: off-diagonal (i,j) is minus the total weight between
/// i and j, rows sum to zero.
RationalMatrix laplacian(const Multigraph& g);

/// Kirchhoff matrix: off-diagonal (i,j) is minus the total weight of arcs
/// j -> i; the diagonal is the weight converging to i. Rows sum to zero.
RationalMatrix kirchhoff(const Multidigraph& g);

/// laplacian() or kirchhoff() depending on the alternative held.
RationalMatrix laplacian_of(const AnyGraph& g);

/// One instance per vertex pair (ordered for arcs), weights summed, in
/// order of first occurrence. Zero sums are kept.
Multigraph merge_parallel(const Multigraph& g);
Multidigraph merge_parallel(const Multidigraph& g);

/// Replaces instance `index` by two parallel instances weighted `part` and
/// `weight - part`. The new instance is appended.
Multigraph split_instance(const Multigraph& g, std::size_t index, const Rational& part);
Multidigraph split_instance(const Multidigraph& g, std::size_t index, const Rational& part);

template <typename Graph>
struct BasicContraction {
  Graph graph;
  int merged = 0;               // label of the identified vertex
  std::vector<int> relabel;     // original vertex -> contracted label
};

using Contraction = BasicContraction<Multidigraph>;
using UndirectedContraction = BasicContraction<Multigraph>;

/// Identifies all vertices of `phi` into one vertex. Instances inside `phi`
/// are dropped, parallel instances produced by the identification are kept.
/// The merged vertex takes the position of min(phi); everything else keeps
/// its relative order. Throws std::invalid_argument for an empty `phi`.
Contraction contract(const Multidigraph& g, const VertexSet& phi);
UndirectedContraction contract(const Multigraph& g, const VertexSet& phi);

Multidigraph reverse(const Multidigraph& g);

/// Each edge {u,v} becomes the arcs u->v and v->u with the same weight.
Multidigraph to_bidirected(const Multigraph& g);

}  // namespace mft
