#include "mft/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "mft/errors.hpp"

namespace mft {

namespace {

void check_endpoints(int n, int a, int b, std::size_t index) {
  if (a < 0 || b < 0 || a >= n || b >= n) {
    throw ValidationError("instance " + std::to_string(index + 1) + ": vertex out of range");
  }
  if (a == b) {
    throw ValidationError("instance " + std::to_string(index + 1) + ": self-loop at vertex " +
                          std::to_string(a + 1));
  }
}

}  // namespace

Multigraph::Multigraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw ValidationError("negative vertex count");
  for (std::size_t k = 0; k < edges_.size(); ++k) check_endpoints(n_, edges_[k].u, edges_[k].v, k);
}

Multidigraph::Multidigraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw ValidationError("negative vertex count");
  for (std::size_t k = 0; k < arcs_.size(); ++k) check_endpoints(n_, arcs_[k].tail, arcs_[k].head, k);
}

int order(const AnyGraph& g) {
  return std::visit([](const auto& h) { return h.order(); }, g);
}

RationalMatrix laplacian(const Multigraph& g) {
  const int n = g.order();
  RationalMatrix l = RationalMatrix::Zero(n, n);
  for (const Edge& e : g.edges()) {
    l(e.u, e.v) -= e.weight;
    l(e.v, e.u) -= e.weight;
    l(e.u, e.u) += e.weight;
    l(e.v, e.v) += e.weight;
  }
  return l;
}

RationalMatrix kirchhoff(const Multidigraph& g) {
  const int n = g.order();
  RationalMatrix l = RationalMatrix::Zero(n, n);
  for (const Arc& a : g.arcs()) {
    l(a.head, a.tail) -= a.weight;
    l(a.head, a.head) += a.weight;
  }
  return l;
}

RationalMatrix laplacian_of(const AnyGraph& g) {
  if (const auto* u = std::get_if<Multigraph>(&g)) return laplacian(*u);
  return kirchhoff(std::get<Multidigraph>(g));
}

Multigraph merge_parallel(const Multigraph& g) {
  std::map<std::pair<int, int>, std::size_t> slot;
  std::vector<Edge> merged;
  for (const Edge& e : g.edges()) {
    const std::pair key{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (auto it = slot.find(key); it != slot.end()) {
      merged[it->second].weight += e.weight;
    } else {
      slot.emplace(key, merged.size());
      merged.push_back(e);
    }
  }
  return Multigraph(g.order(), std::move(merged));
}

Multidigraph merge_parallel(const Multidigraph& g) {
  std::map<std::pair<int, int>, std::size_t> slot;
  std::vector<Arc> merged;
  for (const Arc& a : g.arcs()) {
    const std::pair key{a.tail, a.head};
    if (auto it = slot.find(key); it != slot.end()) {
      merged[it->second].weight += a.weight;
    } else {
      slot.emplace(key, merged.size());
      merged.push_back(a);
    }
  }
  return Multidigraph(g.order(), std::move(merged));
}

Multigraph split_instance(const Multigraph& g, std::size_t index, const Rational& part) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  Edge extra = edges.at(index);
  extra.weight -= part;
  edges[index].weight = part;
  edges.push_back(std::move(extra));
  return Multigraph(g.order(), std::move(edges));
}

Multidigraph split_instance(const Multidigraph& g, std::size_t index, const Rational& part) {
  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
  Arc extra = arcs.at(index);
  extra.weight -= part;
  arcs[index].weight = part;
  arcs.push_back(std::move(extra));
  return Multidigraph(g.order(), std::move(arcs));
}

namespace {

// Relabeling shared by both contraction flavours. Returns the new order.
int contraction_labels(int n, const VertexSet& phi, std::vector<int>& relabel, int& merged) {
  if (phi.empty()) throw std::invalid_argument("contract: empty vertex set");
  phi.check_within(n);
  relabel.assign(static_cast<std::size_t>(n), 0);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (!phi.contains(v)) {
      relabel[static_cast<std::size_t>(v)] = next++;
    } else if (v == phi.front()) {
      merged = next++;
    }
  }
  for (int v : phi) relabel[static_cast<std::size_t>(v)] = merged;
  return next;
}

}  // namespace

Contraction contract(const Multidigraph& g, const VertexSet& phi) {
  std::vector<int> relabel;
  int merged = 0;
  const int n = contraction_labels(g.order(), phi, relabel, merged);
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) {
    if (phi.contains(a.tail) && phi.contains(a.head)) continue;
    arcs.push_back(Arc{relabel[static_cast<std::size_t>(a.tail)], relabel[static_cast<std::size_t>(a.head)], a.weight});
  }
  return Contraction{Multidigraph(n, std::move(arcs)), merged, std::move(relabel)};
}

UndirectedContraction contract(const Multigraph& g, const VertexSet& phi) {
  std::vector<int> relabel;
  int merged = 0;
  const int n = contraction_labels(g.order(), phi, relabel, merged);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (phi.contains(e.u) && phi.contains(e.v)) continue;
    edges.push_back(Edge{relabel[static_cast<std::size_t>(e.u)], relabel[static_cast<std::size_t>(e.v)], e.weight});
  }
  return UndirectedContraction{Multigraph(n, std::move(edges)), merged, std::move(relabel)};
}

Multidigraph reverse(const Multidigraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.size());
  for (const Arc& a : g.arcs()) arcs.push_back(Arc{a.head, a.tail, a.weight});
  return Multidigraph(g.order(), std::move(arcs));
}

Multidigraph to_bidirected(const Multigraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.size());
  for (const Edge& e : g.edges()) {
    arcs.push_back(Arc{e.u, e.v, e.weight});
    arcs.push_back(Arc{e.v, e.u, e.weight});
  }
  return Multidigraph(g.order(), std::move(arcs));
}

}  // namespace mft
