#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "cobweb/bit_matrix.hpp"
#include "cobweb/error.hpp"

namespace cobweb {

// Exhaustive searches over linear extensions refuse beyond this many vertices
// unless the caller raises the bound explicitly.
inline constexpr int kDefaultSearchBound = 12;

struct Arc {
  int from = 0;
  int to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Finite digraph on vertices 0..n-1. No loops, no multi-arcs; the arc list is
// kept sorted so equal graphs compare equal.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int vertex_count);
  Digraph(int vertex_count, std::vector<Arc> arcs);

  void add_arc(int from, int to);

  int vertex_count() const noexcept { return vertex_count_; }
  int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  bool has_arc(int from, int to) const;

  std::vector<std::vector<int>> out_neighbors() const;

  bool operator==(const Digraph&) const = default;

 private:
  void check_arc(int from, int to) const;

  int vertex_count_ = 0;
  std::vector<Arc> arcs_;
};

// Cached transitive reachability: reaches(u, v) iff a directed path of length
// >= 1 leads from u to v. The diagonal is all-false exactly when the source
// digraph is acyclic.
class ReachMatrix {
 public:
  ReachMatrix() = default;
  explicit ReachMatrix(BitMatrix m) : m_(std::move(m)) {}

  int vertex_count() const noexcept { return m_.size(); }
  bool reaches(int u, int v) const { return m_.get(u, v); }
  const BitMatrix& matrix() const noexcept { return m_; }

 private:
  BitMatrix m_;
};

// Total order on 0..n-1 stored by rank: order()[i] is the vertex at position i.
class Chain {
 public:
  Chain() = default;
  explicit Chain(std::vector<int> order);

  int size() const noexcept { return static_cast<int>(order_.size()); }
  int vertex_at(int position) const { return order_[position]; }
  int position_of(int vertex) const { return position_[vertex]; }
  const std::vector<int>& order() const noexcept { return order_; }

  bool operator==(const Chain&) const = default;

 private:
  std::vector<int> order_;
  std::vector<int> position_;
};

// Reflexive boolean pair matrix; partial-order axioms checkable on demand.
class Relation {
 public:
  Relation() = default;
  explicit Relation(BitMatrix leq) : leq_(std::move(leq)) {}
  static Relation identity(int n);

  int vertex_count() const noexcept { return leq_.size(); }
  bool leq(int u, int v) const { return leq_.get(u, v); }
  const BitMatrix& matrix() const noexcept { return leq_; }

  bool is_reflexive() const;
  bool is_antisymmetric() const;
  bool is_transitive() const;
  bool is_partial_order() const {
    return is_reflexive() && is_antisymmetric() && is_transitive();
  }

  bool operator==(const Relation&) const = default;

 private:
  BitMatrix leq_;
};

enum class OdagFailure { NotAcyclic, NotRegular, NoAdmissibleChain };

inline const char* to_string(OdagFailure reason) noexcept {
  switch (reason) {
    case OdagFailure::NotAcyclic: return "NotAcyclic";
    case OdagFailure::NotRegular: return "NotRegular";
    case OdagFailure::NoAdmissibleChain: return "NoAdmissibleChain";
  }
  return "UnknownFailure";
}

// Verdict of the bounded dim-2 representability search, with witnesses when
// representable: hasse(intersection(witness_x, witness_y)) equals the input.
struct OdagResult {
  bool representable = false;
  std::optional<Chain> witness_x;
  std::optional<Chain> witness_y;
  std::optional<OdagFailure> failure_reason;
};

bool is_dag(const Digraph& g);

ReachMatrix reachability(const Digraph& g);

// reach plus the diagonal; a partial order whenever the digraph is acyclic
Relation reflexive_closure(const ReachMatrix& reach);

// true iff no arc is duplicated by a longer directed path, i.e. the digraph
// equals its own transitive reduction
bool is_regular(const Digraph& g);

bool is_linear_extension(const Chain& chain, const Digraph& g);

// true iff no ranks i1 < i2 < i3 have both gaps unreachable while the outer
// pair is reachable
bool is_admissible(const Chain& chain, const Digraph& g);

// the chain that keeps every reachable pair of x and inverts every
// incomparable one
Chain conjugate_chain(const Chain& x, const Digraph& g);

Relation chain_intersection(const Chain& x, const Chain& y);

// covering-relation digraph of a partial order; always regular
Digraph hasse_from_relation(const Relation& r);

std::vector<Chain> enumerate_linear_extensions(const Digraph& g, std::size_t cap,
                                               int search_bound = kDefaultSearchBound);

OdagResult is_odag(const Digraph& g, int search_bound = kDefaultSearchBound);

}  // namespace cobweb
