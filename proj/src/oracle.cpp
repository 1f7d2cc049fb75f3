#include "mft/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mft/errors.hpp"

namespace mft::oracle {

namespace {

constexpr int kHardInstanceLimit = 40;

void check_guard(int n, std::size_t instances, const EnumGuard& guard) {
  const int limit = std::min(guard.max_instances, kHardInstanceLimit);
  if (n > guard.max_vertices || static_cast<int>(instances) > limit) {
    throw GuardExceeded("enumeration guard exceeded: " + std::to_string(n) + " vertices, " +
                        std::to_string(instances) + " instances (limits " +
                        std::to_string(guard.max_vertices) + " / " + std::to_string(limit) + ")");
  }
}

std::vector<std::size_t> mask_to_instances(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; mask != 0; ++k, mask >>= 1) {
    if (mask & 1U) out.push_back(k);
  }
  return out;
}

void check_vertex(int v, int n) {
  if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");
}

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      auto& p = parent[static_cast<std::size_t>(v)];
      p = parent[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
  std::vector<int> parent;
};

// Parent pointer per vertex for an arc subset, or nothing if some vertex has
// two incoming arcs or the parent pointers loop. `forward` selects whether the
// parent of a vertex is its in-neighbour (diverging) or out-neighbour (converging).
bool parent_pointers(const Multidigraph& g, std::span<const std::size_t> instances, bool forward,
                     std::vector<int>& parent) {
  const auto n = static_cast<std::size_t>(g.order());
  parent.assign(n, -1);
  for (std::size_t k : instances) {
    const Arc& a = g.arcs()[k];
    const int child = forward ? a.head : a.tail;
    const int up = forward ? a.tail : a.head;
    if (parent[static_cast<std::size_t>(child)] != -1) return false;
    parent[static_cast<std::size_t>(child)] = up;
  }
  // A cycle is a walk of length n along parent pointers that never stops.
  for (std::size_t v = 0; v < n; ++v) {
    int cur = static_cast<int>(v);
    for (std::size_t step = 0; step <= n && cur != -1; ++step) {
      cur = parent[static_cast<std::size_t>(cur)];
    }
    if (cur != -1) return false;
  }
  return true;
}

std::vector<int> top_of(const std::vector<int>& parent) {
  std::vector<int> top(parent.size());
  for (std::size_t v = 0; v < parent.size(); ++v) {
    int cur = static_cast<int>(v);
    while (parent[static_cast<std::size_t>(cur)] != -1) cur = parent[static_cast<std::size_t>(cur)];
    top[v] = cur;
  }
  return top;
}

template <typename Member>
void sort_members(std::vector<Member>& members) {
  std::sort(members.begin(), members.end());
}

}  // namespace

VertexSet RootedForest::roots() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < root_of.size(); ++v) {
    if (root_of[v] == static_cast<int>(v)) out.push_back(static_cast<int>(v));
  }
  return VertexSet(std::move(out));
}

Rational weight_of(std::span<const std::size_t> instances, const Multigraph& host) {
  Rational w = 1;
  for (std::size_t k : instances) {
    if (k >= host.size()) throw std::out_of_range("edge instance index out of range");
    w *= host.edges()[k].weight;
  }
  return w;
}

Rational weight_of(std::span<const std::size_t> instances, const Multidigraph& host) {
  Rational w = 1;
  for (std::size_t k : instances) {
    if (k >= host.size()) throw std::out_of_range("arc instance index out of range");
    w *= host.arcs()[k].weight;
  }
  return w;
}

Rational weight_of(const Path& path, const Multidigraph& host) { return weight_of(path.arcs, host); }

RootedFamily enum_rooted_forests(const Multigraph& g, EnumGuard guard) {
  check_guard(g.order(), g.size(), guard);
  const int n = g.order();
  RootedFamily family{g, {}};
  const std::uint64_t subsets = std::uint64_t{1} << g.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    UnionFind uf(n);
    bool acyclic = true;
    const auto instances = mask_to_instances(mask);
    for (std::size_t k : instances) {
      if (!uf.unite(g.edges()[k].u, g.edges()[k].v)) {
        acyclic = false;
        break;
      }
    }
    if (!acyclic) continue;

    // Components in order of their smallest vertex.
    std::vector<std::vector<int>> components;
    std::vector<int> index_of(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
      const int rep = uf.find(v);
      if (index_of[static_cast<std::size_t>(rep)] == -1) {
        index_of[static_cast<std::size_t>(rep)] = static_cast<int>(components.size());
        components.emplace_back();
      }
      components[static_cast<std::size_t>(index_of[static_cast<std::size_t>(rep)])].push_back(v);
    }

    // Mixed-radix counter over one root choice per component.
    std::vector<std::size_t> choice(components.size(), 0);
    while (true) {
      RootedForest f{instances, std::vector<int>(static_cast<std::size_t>(n))};
      for (std::size_t c = 0; c < components.size(); ++c) {
        const int root = components[c][choice[c]];
        for (int v : components[c]) f.root_of[static_cast<std::size_t>(v)] = root;
      }
      family.members.push_back(std::move(f));

      std::size_t c = 0;
      while (c < components.size() && ++choice[c] == components[c].size()) choice[c++] = 0;
      if (c == components.size()) break;
    }
  }
  sort_members(family.members);
  return family;
}

DivergingFamily enum_diverging_forests(const Multidigraph& g, EnumGuard guard) {
  check_guard(g.order(), g.size(), guard);
  DivergingFamily family{g, {}};
  std::vector<int> parent;
  const std::uint64_t subsets = std::uint64_t{1} << g.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    auto instances = mask_to_instances(mask);
    if (parent_pointers(g, instances, true, parent)) {
      family.members.push_back(DivergingForest{std::move(instances)});
    }
  }
  sort_members(family.members);
  return family;
}

ConvergingFamily enum_converging_forests(const Multidigraph& g, EnumGuard guard) {
  check_guard(g.order(), g.size(), guard);
  ConvergingFamily family{g, {}};
  std::vector<int> parent;
  const std::uint64_t subsets = std::uint64_t{1} << g.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    auto instances = mask_to_instances(mask);
    if (parent_pointers(g, instances, false, parent)) {
      family.members.push_back(ConvergingForest{std::move(instances)});
    }
  }
  sort_members(family.members);
  return family;
}

TreeFamily enum_spanning_trees(const Multigraph& g, EnumGuard guard) {
  check_guard(g.order(), g.size(), guard);
  TreeFamily family{g, {}};
  const int n = g.order();
  const std::uint64_t subsets = std::uint64_t{1} << g.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    auto instances = mask_to_instances(mask);
    if (static_cast<int>(instances.size()) != n - 1) continue;
    UnionFind uf(n);
    bool acyclic = true;
    for (std::size_t k : instances) acyclic = acyclic && uf.unite(g.edges()[k].u, g.edges()[k].v);
    if (acyclic) family.members.push_back(SpanningTree{std::move(instances)});
  }
  sort_members(family.members);
  return family;
}

DivergingFamily enum_diverging_trees(const Multidigraph& g, int root, EnumGuard guard) {
  check_vertex(root, g.order());
  return filter_roots(enum_diverging_forests(g, guard), VertexSet{root});
}

std::vector<int> diverging_root_of(const DivergingForest& f, const Multidigraph& host) {
  std::vector<int> parent;
  if (!parent_pointers(host, f.instances, true, parent)) {
    throw std::invalid_argument("not a diverging forest");
  }
  return top_of(parent);
}

std::vector<int> converging_sink_of(const ConvergingForest& f, const Multidigraph& host) {
  std::vector<int> parent;
  if (!parent_pointers(host, f.instances, false, parent)) {
    throw std::invalid_argument("not a converging forest");
  }
  return top_of(parent);
}

VertexSet roots(const DivergingForest& f, const Multidigraph& host) {
  std::vector<bool> has_parent(static_cast<std::size_t>(host.order()), false);
  for (std::size_t k : f.instances) has_parent[static_cast<std::size_t>(host.arcs()[k].head)] = true;
  std::vector<int> out;
  for (int v = 0; v < host.order(); ++v) {
    if (!has_parent[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

RootedFamily filter_rooted(const RootedFamily& family, int i, int j) {
  check_vertex(i, family.host.order());
  check_vertex(j, family.host.order());
  RootedFamily out{family.host, {}};
  for (const auto& f : family.members) {
    if (f.root_of[static_cast<std::size_t>(j)] == i) out.members.push_back(f);
  }
  return out;
}

DivergingFamily filter_diverging(const DivergingFamily& family, int i, int j) {
  check_vertex(i, family.host.order());
  check_vertex(j, family.host.order());
  DivergingFamily out{family.host, {}};
  for (const auto& f : family.members) {
    if (diverging_root_of(f, family.host)[static_cast<std::size_t>(j)] == i) out.members.push_back(f);
  }
  return out;
}

ConvergingFamily filter_converging(const ConvergingFamily& family, int i, int j) {
  check_vertex(i, family.host.order());
  check_vertex(j, family.host.order());
  ConvergingFamily out{family.host, {}};
  for (const auto& f : family.members) {
    if (converging_sink_of(f, family.host)[static_cast<std::size_t>(j)] == i) out.members.push_back(f);
  }
  return out;
}

RootedFamily filter_roots(const RootedFamily& family, const VertexSet& phi) {
  phi.check_within(family.host.order());
  RootedFamily out{family.host, {}};
  if (phi.empty()) return out;
  for (const auto& f : family.members) {
    if (f.roots() == phi) out.members.push_back(f);
  }
  return out;
}

DivergingFamily filter_roots(const DivergingFamily& family, const VertexSet& phi) {
  phi.check_within(family.host.order());
  DivergingFamily out{family.host, {}};
  if (phi.empty()) return out;
  for (const auto& f : family.members) {
    if (roots(f, family.host) == phi) out.members.push_back(f);
  }
  return out;
}

std::vector<Path> enum_paths(const Multidigraph& g, int i, int j, EnumGuard guard) {
  check_guard(g.order(), g.size(), guard);
  check_vertex(i, g.order());
  check_vertex(j, g.order());
  std::vector<Path> out;
  Path current{{i}, {}};
  std::vector<bool> visited(static_cast<std::size_t>(g.order()), false);
  visited[static_cast<std::size_t>(i)] = true;

  auto extend = [&](auto&& self, int v) -> void {
    if (v == j) {
      out.push_back(current);
      return;
    }
    for (std::size_t k = 0; k < g.size(); ++k) {
      const Arc& a = g.arcs()[k];
      if (a.tail != v || visited[static_cast<std::size_t>(a.head)]) continue;
      visited[static_cast<std::size_t>(a.head)] = true;
      current.vertices.push_back(a.head);
      current.arcs.push_back(k);
      self(self, a.head);
      current.arcs.pop_back();
      current.vertices.pop_back();
      visited[static_cast<std::size_t>(a.head)] = false;
    }
  };
  extend(extend, i);
  return out;
}

bool is_rooted_forest(const RootedForest& f, const Multigraph& host) {
  const int n = host.order();
  if (static_cast<int>(f.root_of.size()) != n) return false;
  UnionFind uf(n);
  for (std::size_t k : f.instances) {
    if (k >= host.size() || !uf.unite(host.edges()[k].u, host.edges()[k].v)) return false;
  }
  // Each component has exactly one root and every vertex points at its own
  // component's root.
  std::vector<int> root_of_component(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const int r = f.root_of[static_cast<std::size_t>(v)];
    if (r < 0 || r >= n || uf.find(r) != uf.find(v)) return false;
    auto& slot = root_of_component[static_cast<std::size_t>(uf.find(v))];
    if (slot != -1 && slot != r) return false;
    slot = r;
  }
  return true;
}

bool is_diverging_forest(const DivergingForest& f, const Multidigraph& host) {
  const int n = host.order();
  std::vector<int> in_degree(static_cast<std::size_t>(n), 0);
  UnionFind uf(n);
  for (std::size_t k : f.instances) {
    if (k >= host.size()) return false;
    const Arc& a = host.arcs()[k];
    if (++in_degree[static_cast<std::size_t>(a.head)] > 1) return false;
    // Underlying undirected graph must be acyclic.
    if (!uf.unite(a.tail, a.head)) return false;
  }
  return true;
}

}  // namespace mft::oracle
