#include "cobweb/digraph.hpp"

#include <algorithm>
#include <string>

namespace cobweb {

namespace {

std::string arc_label(int from, int to) {
  return "(" + std::to_string(from) + ", " + std::to_string(to) + ")";
}

// Kahn's algorithm; returns false (and a partial order vector) on a cycle.
bool topological_order(const Digraph& g, std::vector<int>& order) {
  const int n = g.vertex_count();
  std::vector<int> indegree(n, 0);
  for (const Arc& a : g.arcs()) ++indegree[a.to];
  const auto adj = g.out_neighbors();

  order.clear();
  order.reserve(n);
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) order.push_back(v);
  for (std::size_t head = 0; head < order.size(); ++head)
    for (int w : adj[order[head]])
      if (--indegree[w] == 0) order.push_back(w);
  return static_cast<int>(order.size()) == n;
}

bool admissible_under(const Chain& chain, const ReachMatrix& reach) {
  const int n = chain.size();
  for (int i1 = 0; i1 < n; ++i1)
    for (int i3 = i1 + 2; i3 < n; ++i3) {
      const int a = chain.vertex_at(i1);
      const int c = chain.vertex_at(i3);
      if (!reach.reaches(a, c)) continue;
      for (int i2 = i1 + 1; i2 < i3; ++i2) {
        const int b = chain.vertex_at(i2);
        if (!reach.reaches(a, b) && !reach.reaches(b, c)) return false;
      }
    }
  return true;
}

// Lexicographic backtracking over vertices whose predecessors are all placed.
// The visitor gets each complete extension and returns false to stop.
template <typename Visitor>
void for_each_extension(const Digraph& g, Visitor&& visit) {
  const int n = g.vertex_count();
  std::vector<int> indegree(n, 0);
  for (const Arc& a : g.arcs()) ++indegree[a.to];
  const auto adj = g.out_neighbors();

  std::vector<int> prefix;
  prefix.reserve(n);
  std::vector<char> placed(n, 0);

  auto rec = [&](auto&& self) -> bool {
    if (static_cast<int>(prefix.size()) == n) return visit(prefix);
    for (int v = 0; v < n; ++v) {
      if (placed[v] || indegree[v] != 0) continue;
      placed[v] = 1;
      for (int w : adj[v]) --indegree[w];
      prefix.push_back(v);
      const bool keep_going = self(self);
      prefix.pop_back();
      for (int w : adj[v]) ++indegree[w];
      placed[v] = 0;
      if (!keep_going) return false;
    }
    return true;
  };
  rec(rec);
}

void check_search_bound(const Digraph& g, int search_bound) {
  if (g.vertex_count() > search_bound)
    throw Error(Errc::SearchBoundExceeded,
                std::to_string(g.vertex_count()) + " vertices exceed the search bound of " +
                    std::to_string(search_bound));
}

}  // namespace

Digraph::Digraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw Error(Errc::InvalidVertex, "vertex count must be non-negative");
}

Digraph::Digraph(int vertex_count, std::vector<Arc> arcs) : Digraph(vertex_count) {
  for (const Arc& a : arcs) check_arc(a.from, a.to);
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  arcs_ = std::move(arcs);
}

void Digraph::check_arc(int from, int to) const {
  if (from < 0 || from >= vertex_count_ || to < 0 || to >= vertex_count_)
    throw Error(Errc::InvalidArc, "arc endpoint out of range: " + arc_label(from, to));
  if (from == to) throw Error(Errc::InvalidArc, "loop arc not allowed: " + arc_label(from, to));
}

void Digraph::add_arc(int from, int to) {
  check_arc(from, to);
  const Arc a{from, to};
  const auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
  if (it == arcs_.end() || *it != a) arcs_.insert(it, a);
}

bool Digraph::has_arc(int from, int to) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{from, to});
}

std::vector<std::vector<int>> Digraph::out_neighbors() const {
  std::vector<std::vector<int>> adj(vertex_count_);
  for (const Arc& a : arcs_) adj[a.from].push_back(a.to);
  return adj;
}

Chain::Chain(std::vector<int> order) : order_(std::move(order)) {
  const int n = size();
  position_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const int v = order_[i];
    if (v < 0 || v >= n || position_[v] != -1)
      throw Error(Errc::LengthMismatch,
                  "chain is not a permutation of 0.." + std::to_string(n - 1));
    position_[v] = i;
  }
}

Relation Relation::identity(int n) {
  BitMatrix m(n);
  for (int v = 0; v < n; ++v) m.set(v, v);
  return Relation(std::move(m));
}

bool Relation::is_reflexive() const {
  for (int v = 0; v < vertex_count(); ++v)
    if (!leq_.get(v, v)) return false;
  return true;
}

bool Relation::is_antisymmetric() const {
  const int n = vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (leq_.get(u, v) && leq_.get(v, u)) return false;
  return true;
}

bool Relation::is_transitive() const {
  const int n = vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && leq_.get(u, v) && !BitMatrix::row_subset(leq_, v, leq_, u)) return false;
  return true;
}

bool is_dag(const Digraph& g) {
  std::vector<int> order;
  return topological_order(g, order);
}

ReachMatrix reachability(const Digraph& g) {
  const int n = g.vertex_count();
  BitMatrix m(n);
  std::vector<int> topo;
  if (topological_order(g, topo)) {
    // reverse-topological accumulation: row(u) = union of {v} + row(v) over arcs (u, v)
    const auto adj = g.out_neighbors();
    for (int i = n - 1; i >= 0; --i) {
      const int u = topo[i];
      for (int v : adj[u]) {
        m.set(u, v);
        m.or_row_into(v, u);
      }
    }
  } else {
    // cyclic input: bitset Warshall
    for (const Arc& a : g.arcs()) m.set(a.from, a.to);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (m.get(i, k)) m.or_row_into(k, i);
  }
  return ReachMatrix(std::move(m));
}

Relation reflexive_closure(const ReachMatrix& reach) {
  BitMatrix m = reach.matrix();
  for (int v = 0; v < m.size(); ++v) m.set(v, v);
  return Relation(std::move(m));
}

bool is_regular(const Digraph& g) {
  if (!is_dag(g))
    throw Error(Errc::NotAcyclic, "regularity is defined for acyclic digraphs only");
  const ReachMatrix reach = reachability(g);
  const int n = g.vertex_count();
  BitMatrix reached_from(n);  // transpose: row v holds every u with a path u -> v
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (reach.reaches(u, v)) reached_from.set(v, u);
  for (const Arc& a : g.arcs())
    if (BitMatrix::rows_intersect(reach.matrix(), a.from, reached_from, a.to))
      return false;  // some w sits on a longer from -> w -> .. -> to route
  return true;
}

bool is_linear_extension(const Chain& chain, const Digraph& g) {
  if (chain.size() != g.vertex_count())
    throw Error(Errc::LengthMismatch, "chain covers " + std::to_string(chain.size()) +
                                          " vertices, digraph has " +
                                          std::to_string(g.vertex_count()));
  for (const Arc& a : g.arcs())
    if (chain.position_of(a.from) >= chain.position_of(a.to)) return false;
  return true;
}

bool is_admissible(const Chain& chain, const Digraph& g) {
  if (!is_linear_extension(chain, g))
    throw Error(Errc::NotLinearExtension,
                "admissible form is defined for linear extensions of the digraph");
  return admissible_under(chain, reachability(g));
}

Chain conjugate_chain(const Chain& x, const Digraph& g) {
  if (!is_dag(g)) throw Error(Errc::NotAcyclic, "conjugate chain requires an acyclic digraph");
  if (!is_linear_extension(x, g))
    throw Error(Errc::NotLinearExtension, "conjugate chain requires a linear extension");
  const ReachMatrix reach = reachability(g);
  const int n = x.size();

  // Tournament: u precedes v when a path u -> v exists, otherwise the pair is
  // incomparable and its x-order is inverted. The tournament is a total order
  // exactly when predecessor counts are pairwise distinct.
  std::vector<int> predecessors(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int later;
      if (reach.reaches(u, v)) later = v;
      else if (reach.reaches(v, u)) later = u;
      else if (x.position_of(u) < x.position_of(v)) later = u;
      else later = v;
      ++predecessors[later];
    }

  std::vector<int> order(n, -1);
  for (int v = 0; v < n; ++v) {
    const int rank = predecessors[v];
    if (order[rank] != -1)
      throw Error(Errc::NotTotalOrder,
                  "inversion relation is cyclic; the source chain is not admissible");
    order[rank] = v;
  }
  return Chain(std::move(order));
}

Relation chain_intersection(const Chain& x, const Chain& y) {
  if (x.size() != y.size())
    throw Error(Errc::LengthMismatch, "chains cover different vertex counts");
  const int n = x.size();
  BitMatrix leq(n);
  for (int i = 0; i < n; ++i) {
    const int u = x.vertex_at(i);
    for (int j = i; j < n; ++j) {
      const int v = x.vertex_at(j);
      if (y.position_of(u) <= y.position_of(v)) leq.set(u, v);
    }
  }
  return Relation(std::move(leq));
}

Digraph hasse_from_relation(const Relation& r) {
  if (!r.is_partial_order())
    throw Error(Errc::NotPartialOrder, "relation violates the partial-order axioms");
  const int n = r.vertex_count();
  BitMatrix below(n);  // strict part
  BitMatrix above(n);  // its transpose
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && r.leq(u, v)) {
        below.set(u, v);
        above.set(v, u);
      }
  Digraph hasse(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && r.leq(u, v) && !BitMatrix::rows_intersect(below, u, above, v))
        hasse.add_arc(u, v);
  return hasse;
}

std::vector<Chain> enumerate_linear_extensions(const Digraph& g, std::size_t cap,
                                               int search_bound) {
  check_search_bound(g, search_bound);
  if (!is_dag(g))
    throw Error(Errc::NotAcyclic, "linear extensions exist only for acyclic digraphs");
  std::vector<Chain> result;
  if (cap == 0) return result;
  for_each_extension(g, [&](const std::vector<int>& order) {
    result.emplace_back(order);
    return result.size() < cap;
  });
  return result;
}

OdagResult is_odag(const Digraph& g, int search_bound) {
  check_search_bound(g, search_bound);
  OdagResult result;
  if (!is_dag(g)) {
    result.failure_reason = OdagFailure::NotAcyclic;
    return result;
  }
  if (!is_regular(g)) {
    result.failure_reason = OdagFailure::NotRegular;
    return result;
  }
  const ReachMatrix reach = reachability(g);
  std::optional<Chain> admissible;
  for_each_extension(g, [&](const std::vector<int>& order) {
    Chain candidate(order);
    if (!admissible_under(candidate, reach)) return true;
    admissible = std::move(candidate);
    return false;
  });
  if (!admissible) {
    result.failure_reason = OdagFailure::NoAdmissibleChain;
    return result;
  }

  Chain y = conjugate_chain(*admissible, g);
  const Relation order = chain_intersection(*admissible, y);
  if (hasse_from_relation(order) != g)
    throw Error(Errc::ConsistencyFailure,
                "admissible chain and its conjugate do not reproduce the digraph");
  result.representable = true;
  result.witness_x = std::move(*admissible);
  result.witness_y = std::move(y);
  return result;
}

}  // namespace cobweb
