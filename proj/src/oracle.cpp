#include "cobweb/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cobweb::oracle {

bool path_exists_naive(const Digraph& g, int from, int to) {
  std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> stack;
  for (const Arc& a : g.arcs())
    if (a.from == from && !visited[a.to]) {
      visited[a.to] = 1;
      stack.push_back(a.to);
    }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (const Arc& a : g.arcs())
      if (a.from == v && !visited[a.to]) {
        visited[a.to] = 1;
        stack.push_back(a.to);
      }
  }
  return false;
}

bool is_dag_naive(const Digraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (path_exists_naive(g, v, v)) return false;
  return true;
}

Relation brute_force_order(const Digraph& g) {
  if (!is_dag_naive(g))
    throw Error(Errc::NotAcyclic, "order closure requires an acyclic digraph");
  const int n = g.vertex_count();
  BitMatrix leq(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u == v || path_exists_naive(g, u, v)) leq.set(u, v);
  return Relation(std::move(leq));
}

namespace {

bool extends(const Relation& order, const Chain& chain) {
  const int n = order.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (order.leq(u, v) && chain.position_of(u) > chain.position_of(v)) return false;
  return true;
}

}  // namespace

bool brute_force_dim2(const Digraph& g) {
  if (g.vertex_count() > kMaxBruteForceVertices)
    throw Error(Errc::SearchBoundExceeded,
                "brute-force dim-2 search supports at most " +
                    std::to_string(kMaxBruteForceVertices) + " vertices");
  const Relation order = brute_force_order(g);
  // g must literally be the covering digraph of its own order closure;
  // no extension pair can realize it otherwise.
  if (hasse_from_relation(order) != g) return false;

  const int n = g.vertex_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Chain> extensions;
  do {
    Chain chain(perm);
    if (extends(order, chain)) extensions.push_back(std::move(chain));
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (const Chain& first : extensions)
    for (const Chain& second : extensions)
      if (chain_intersection(first, second) == order) return true;
  return false;
}

DagCatalog::DagCatalog(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0)
    throw Error(Errc::InvalidVertex, "vertex count must be non-negative");
  if (vertex_count > kMaxBruteForceVertices)
    throw Error(Errc::SearchBoundExceeded,
                "catalog enumeration supports at most " +
                    std::to_string(kMaxBruteForceVertices) + " vertices");
  for (int u = 0; u < vertex_count; ++u)
    for (int v = 0; v < vertex_count; ++v)
      if (u != v) pairs_.push_back({u, v});
}

bool DagCatalog::next(Digraph& out) {
  const std::uint64_t limit = std::uint64_t{1} << pairs_.size();
  while (mask_ < limit) {
    const std::uint64_t m = mask_++;
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      if ((m >> i) & 1) arcs.push_back(pairs_[i]);
    Digraph g(vertex_count_, std::move(arcs));
    if (is_dag_naive(g)) {
      out = std::move(g);
      return true;
    }
  }
  return false;
}

Theorem1Report verify_theorem1(int n) {
  if (n < 0 || n > kMaxEquivalenceVertices)
    throw Error(Errc::SearchBoundExceeded,
                "exhaustive equivalence check supports 0 <= n <= " +
                    std::to_string(kMaxEquivalenceVertices));
  Theorem1Report report;
  report.vertex_count = n;
  DagCatalog catalog(n);
  Digraph g;
  while (catalog.next(g)) {
    ++report.dags_checked;
    const bool by_search = brute_force_dim2(g);
    const bool by_characterization = is_odag(g).representable;
    if (by_search != by_characterization)
      report.counterexamples.push_back({g, by_search, by_characterization});
  }
  return report;
}

}  // namespace cobweb::oracle
