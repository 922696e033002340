#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cobweb/digraph.hpp"
#include "cobweb/error.hpp"

namespace cobweb {

inline constexpr std::uint64_t kDefaultVertexBudget = 100'000;
inline constexpr std::uint64_t kArcBudget = 20'000'000;

// Rule assigning a positive vertex count F_s to every level s. Evaluation is
// pure: the same level always yields the same size.
class LevelSequence {
 public:
  enum class Kind { Fibonacci, Constant, Natural, Custom };

  static LevelSequence fibonacci();
  static LevelSequence constant(std::uint64_t k);
  static LevelSequence natural();
  static LevelSequence custom(std::vector<std::uint64_t> sizes);

  Kind kind() const noexcept { return kind_; }
  std::uint64_t level_size(int level) const;
  const std::string& spec() const noexcept { return spec_; }

 private:
  LevelSequence(Kind kind, std::string spec, std::uint64_t constant,
                std::vector<std::uint64_t> sizes)
      : kind_(kind), spec_(std::move(spec)), constant_(constant), sizes_(std::move(sizes)) {}

  Kind kind_;
  std::string spec_;
  std::uint64_t constant_ = 0;
  std::vector<std::uint64_t> sizes_;
};

// `fib | const:<k> | nat | file:<path>`; file contents are whitespace-separated
// positive integers, the first being the size of level 0.
LevelSequence sequence_parse(std::string_view spec);

// One element of a level: 1-based column within a 0-based level.
struct CobwebVertex {
  int column = 1;
  int level = 0;

  friend auto operator<=>(const CobwebVertex&, const CobwebVertex&) = default;
  friend bool operator==(const CobwebVertex&, const CobwebVertex&) = default;
};

// Finite prefix of a cobweb poset: levels 0..max_level, level s holding F_s
// vertices. Indexing is level-major and column-ascending, which makes the
// chain X the identity permutation on indices.
class CobwebTruncation {
 public:
  CobwebTruncation(LevelSequence sequence, int max_level,
                   std::uint64_t vertex_budget = kDefaultVertexBudget);

  const LevelSequence& sequence() const noexcept { return sequence_; }
  int max_level() const noexcept { return max_level_; }
  int vertex_count() const noexcept { return offsets_.back(); }
  int level_count() const noexcept { return max_level_ + 1; }

  int level_size(int level) const;
  int level_offset(int level) const;
  int index_of(CobwebVertex v) const;
  CobwebVertex vertex_at(int index) const;

 private:
  LevelSequence sequence_;
  int max_level_;
  std::vector<int> offsets_;  // offsets_[s] = index of <1, s>; last entry = total
};

CobwebTruncation build_truncation(const LevelSequence& sequence, int max_level,
                                  std::uint64_t vertex_budget = kDefaultVertexBudget);

// Complete bipartite arcs between each pair of consecutive levels.
Digraph cobweb_edges(const CobwebTruncation& t);

// x below y iff x sits at a strictly lower level, or x equals y.
bool poset_leq(const CobwebTruncation& t, CobwebVertex x, CobwebVertex y);

// The full order matrix of poset_leq over the truncation's indices.
Relation poset_relation(const CobwebTruncation& t);

// Level-ascending, column-ascending total order.
Chain chain_x(const CobwebTruncation& t);

// Level-ascending, column-descending total order.
Chain chain_y(const CobwebTruncation& t);

struct Realizer {
  Chain x;
  Chain y;
  Relation order;  // chain_intersection(x, y), verified against poset_leq
};

// Computes (X, Y, X intersect Y) and verifies the intersection matches
// poset_leq pointwise and its Hasse diagram matches cobweb_edges.
Realizer realizer(const CobwebTruncation& t);

// The single layer of arcs from level p to level p+1, on the full vertex set.
Digraph di_biclique(const CobwebTruncation& t, int level);

// cobweb_edges minus the given arcs; every arc to remove must be a cobweb arc.
Digraph delete_arcs(const CobwebTruncation& t, const std::vector<Arc>& removed);

}  // namespace cobweb
