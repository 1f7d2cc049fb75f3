#pragma once

// Brute-force ground truth: every spanning structure is found by testing all
// subsets of edge/arc instances. Slow on purpose, small graphs only.

#include <cstddef>
#include <span>
#include <vector>

#include "mft/graph.hpp"
#include "mft/rational.hpp"
#include "mft/vertex_set.hpp"

namespace mft::oracle {

/// Enumeration refuses inputs above either limit with GuardExceeded.
struct EnumGuard {
  int max_vertices = 8;
  int max_instances = 16;
};

/// Spanning acyclic edge subset with one root chosen per component.
/// root_of[v] is the root of v's component.
struct RootedForest {
  std::vector<std::size_t> instances;
  std::vector<int> root_of;

  VertexSet roots() const;
  int edge_count() const { return static_cast<int>(instances.size()); }

  friend auto operator<=>(const RootedForest&, const RootedForest&) = default;
};

/// Spanning arc subset with in-degree <= 1 and no cycle. Roots are the
/// in-degree-0 vertices and are derived from the host on demand.
struct DivergingForest {
  std::vector<std::size_t> instances;

  int arc_count() const { return static_cast<int>(instances.size()); }

  friend auto operator<=>(const DivergingForest&, const DivergingForest&) = default;
};

/// Dual of DivergingForest: out-degree <= 1, sinks are the out-degree-0 vertices.
struct ConvergingForest {
  std::vector<std::size_t> instances;

  int arc_count() const { return static_cast<int>(instances.size()); }

  friend auto operator<=>(const ConvergingForest&, const ConvergingForest&) = default;
};

struct SpanningTree {
  std::vector<std::size_t> instances;

  friend auto operator<=>(const SpanningTree&, const SpanningTree&) = default;
};

struct Path {
  std::vector<int> vertices;
  std::vector<std::size_t> arcs;

  VertexSet vertex_set() const { return VertexSet(vertices); }
};

/// A set of subgraphs together with the graph their instance indices refer to.
template <typename Host, typename Member>
struct Family {
  Host host;
  std::vector<Member> members;

  std::size_t size() const { return members.size(); }
};

using RootedFamily = Family<Multigraph, RootedForest>;
using DivergingFamily = Family<Multidigraph, DivergingForest>;
using ConvergingFamily = Family<Multidigraph, ConvergingForest>;
using TreeFamily = Family<Multigraph, SpanningTree>;

/// Product of the instance weights; the empty subset weighs 1.
/// Throws std::out_of_range for an invalid index.
Rational weight_of(std::span<const std::size_t> instances, const Multigraph& host);
Rational weight_of(std::span<const std::size_t> instances, const Multidigraph& host);
Rational weight_of(const Path& path, const Multidigraph& host);

/// Sum of member weights; the empty family weighs 0.
template <typename Host, typename Member>
Rational weight(const Family<Host, Member>& family) {
  Rational total;
  for (const Member& m : family.members) total += weight_of(m.instances, family.host);
  return total;
}

/// Sum of (-1)^(number of instances) times member weight.
template <typename Host, typename Member>
Rational signed_weight(const Family<Host, Member>& family) {
  Rational total;
  for (const Member& m : family.members) {
    const Rational w = weight_of(m.instances, family.host);
    if (m.instances.size() % 2 == 0) {
      total += w;
    } else {
      total -= w;
    }
  }
  return total;
}

RootedFamily enum_rooted_forests(const Multigraph& g, EnumGuard guard = {});
DivergingFamily enum_diverging_forests(const Multidigraph& g, EnumGuard guard = {});
ConvergingFamily enum_converging_forests(const Multidigraph& g, EnumGuard guard = {});
TreeFamily enum_spanning_trees(const Multigraph& g, EnumGuard guard = {});
/// Spanning trees diverging from `root`.
DivergingFamily enum_diverging_trees(const Multidigraph& g, int root, EnumGuard guard = {});

/// Per-vertex root (the in-degree-0 ancestor) of a diverging forest.
std::vector<int> diverging_root_of(const DivergingForest& f, const Multidigraph& host);
/// Per-vertex sink (the out-degree-0 descendant) of a converging forest.
std::vector<int> converging_sink_of(const ConvergingForest& f, const Multidigraph& host);
VertexSet roots(const DivergingForest& f, const Multidigraph& host);

/// Members in which j lies in the tree rooted at / diverging from / converging to i.
/// With i == j this selects the members where i is a root.
RootedFamily filter_rooted(const RootedFamily& family, int i, int j);
DivergingFamily filter_diverging(const DivergingFamily& family, int i, int j);
ConvergingFamily filter_converging(const ConvergingFamily& family, int i, int j);

/// Members whose root set is exactly `phi`. An empty `phi` gives the empty family.
RootedFamily filter_roots(const RootedFamily& family, const VertexSet& phi);
DivergingFamily filter_roots(const DivergingFamily& family, const VertexSet& phi);

/// All simple directed paths from i to j over arc instances. For i == j the
/// single zero-length path is returned.
std::vector<Path> enum_paths(const Multidigraph& g, int i, int j, EnumGuard guard = {});

/// Independent structural checks used to validate the enumerators.
bool is_rooted_forest(const RootedForest& f, const Multigraph& host);
bool is_diverging_forest(const DivergingForest& f, const Multidigraph& host);

}  // namespace mft::oracle
