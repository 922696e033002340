#pragma once

#include <cstdint>
#include <vector>

#include "cobweb/digraph.hpp"

namespace cobweb::oracle {

// Brute-force reference implementations for desk-scale cross-checks. These
// deliberately use naive algorithms (arc-list DFS, full permutation scans)
// and share nothing with the optimized paths except the definitional helpers
// chain_intersection and hasse_from_relation.

inline constexpr int kMaxBruteForceVertices = 5;
inline constexpr int kMaxEquivalenceVertices = 4;

// Plain DFS over the arc list; true iff a path of length >= 1 leads from
// `from` to `to`.
bool path_exists_naive(const Digraph& g, int from, int to);

bool is_dag_naive(const Digraph& g);

// Reflexive closure of naive reachability.
Relation brute_force_order(const Digraph& g);

// true iff g is the Hasse diagram of a poset realized by two of its linear
// extensions, decided by scanning every extension pair.
bool brute_force_dim2(const Digraph& g);

// Enumerates every labeled DAG on a fixed vertex count, one arc subset at a
// time, in increasing arc-set-mask order.
class DagCatalog {
 public:
  explicit DagCatalog(int vertex_count);

  bool next(Digraph& out);
  void reset() { mask_ = 0; }

 private:
  int vertex_count_;
  std::vector<Arc> pairs_;  // lexicographic numbering of ordered pairs
  std::uint64_t mask_ = 0;
};

struct EquivalenceCounterexample {
  Digraph digraph;
  bool by_search;             // brute_force_dim2 verdict
  bool by_characterization;   // regular + admissible-chain verdict
};

struct Theorem1Report {
  int vertex_count = 0;
  std::uint64_t dags_checked = 0;
  std::vector<EquivalenceCounterexample> counterexamples;
};

// Checks, for every labeled DAG on n vertices, that the brute-force dim-2
// decision agrees with the regular-plus-admissible-chain characterization.
Theorem1Report verify_theorem1(int n);

}  // namespace cobweb::oracle
