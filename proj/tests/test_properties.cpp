#include <doctest.h>

#include <numeric>
#include <random>

#include "cobweb/digraph.hpp"
#include "cobweb/oracle.hpp"

using namespace cobweb;

namespace {

std::mt19937 rng(0x5eed5u);

Chain random_chain(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return Chain(std::move(order));
}

Digraph random_dag(int max_n) {
  std::uniform_int_distribution<int> size_dist(0, max_n);
  const int n = size_dist(rng);
  std::vector<int> topo(static_cast<std::size_t>(n));
  std::iota(topo.begin(), topo.end(), 0);
  std::shuffle(topo.begin(), topo.end(), rng);
  std::bernoulli_distribution arc_dist(0.4);
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (arc_dist(rng)) g.add_arc(topo[i], topo[j]);
  return g;
}

Digraph relabel(const Digraph& g, const Chain& perm) {
  Digraph out(g.vertex_count());
  for (const Arc& a : g.arcs()) out.add_arc(perm.position_of(a.from), perm.position_of(a.to));
  return out;
}

// Independent reduction: drop every arc duplicated by a two-step route.
Digraph transitive_reduction_by_paths(const Digraph& g) {
  Digraph out(g.vertex_count());
  for (const Arc& a : g.arcs()) {
    bool redundant = false;
    for (int w = 0; w < g.vertex_count() && !redundant; ++w)
      if (w != a.from && w != a.to && oracle::path_exists_naive(g, a.from, w) &&
          oracle::path_exists_naive(g, w, a.to))
        redundant = true;
    if (!redundant) out.add_arc(a.from, a.to);
  }
  return out;
}

}  // namespace

TEST_CASE("hasse of the order closure is the transitive reduction") {
  for (int trial = 0; trial < 100; ++trial) {
    const Digraph g = random_dag(8);
    const Digraph reduced = hasse_from_relation(reflexive_closure(reachability(g)));
    CHECK(reduced == transitive_reduction_by_paths(g));
    if (is_regular(g)) CHECK(reduced == g);
    CHECK(is_regular(reduced));  // a covering digraph carries no shortcuts
  }
}

TEST_CASE("chain intersections are partial orders") {
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> size_dist(0, 9);
    const int n = size_dist(rng);
    const Chain x = random_chain(n);
    const Chain y = random_chain(n);
    const Relation r = chain_intersection(x, y);
    CHECK(r.is_reflexive());
    CHECK(r.is_antisymmetric());
    CHECK(r.is_transitive());
    CHECK(r == chain_intersection(y, x));
  }
}

TEST_CASE("a chain intersected with itself gives back its total order") {
  for (int n : {0, 1, 5, 9}) {
    const Chain x = random_chain(n);
    const Relation r = chain_intersection(x, x);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        CHECK(r.leq(u, v) == (x.position_of(u) <= x.position_of(v)));
  }
}

TEST_CASE("regularity is invariant under vertex relabeling") {
  for (int trial = 0; trial < 100; ++trial) {
    const Digraph g = random_dag(8);
    const Chain perm = random_chain(g.vertex_count());
    CHECK(is_regular(g) == is_regular(relabel(g, perm)));
  }
}

TEST_CASE("every admissible extension reconstructs the transitive reduction") {
  // On every labeled DAG up to five vertices: the conjugate of an admissible
  // extension is a linear extension, and the intersection's Hasse diagram is
  // the transitive reduction, hence the digraph itself whenever it is regular.
  // Irregular digraphs can still carry admissible chains (the shortcut
  // triangle does), so reconstruction of g itself needs regularity.
  for (int n = 0; n <= 5; ++n) {
    oracle::DagCatalog catalog(n);
    Digraph g;
    while (catalog.next(g)) {
      CHECK(oracle::brute_force_order(g) == reflexive_closure(reachability(g)));
      const bool regular = is_regular(g);
      const Digraph reduced = hasse_from_relation(reflexive_closure(reachability(g)));
      for (const Chain& x : enumerate_linear_extensions(g, 1u << 20)) {
        if (!is_admissible(x, g)) continue;
        const Chain y = conjugate_chain(x, g);
        CHECK(is_linear_extension(y, g));
        const Digraph rebuilt = hasse_from_relation(chain_intersection(x, y));
        CHECK(rebuilt == reduced);
        if (regular) CHECK(rebuilt == g);
      }
    }
  }
}

TEST_CASE("shortcut triangle keeps an admissible chain yet is not an oDAG") {
  const Digraph g(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(is_admissible(Chain({0, 1, 2}), g));
  CHECK_FALSE(is_regular(g));
  CHECK_FALSE(is_odag(g).representable);
}

TEST_CASE("dim-2 search verdict matches the brute-force oracle") {
  for (int n = 0; n <= 4; ++n) {
    oracle::DagCatalog catalog(n);
    Digraph g;
    while (catalog.next(g))
      CHECK(is_odag(g).representable == oracle::brute_force_dim2(g));
  }
}
