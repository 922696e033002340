#include "cobweb/poset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>

namespace cobweb {

namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  if (text.empty()) throw Error(Errc::ParseError, std::string(what) + " is empty");
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(Errc::ParseError, std::string(what) + " is not a decimal integer: '" +
                                      std::string(text) + "'");
  return value;
}

std::string vertex_label(CobwebVertex v) {
  return "(" + std::to_string(v.column) + ", " + std::to_string(v.level) + ")";
}

}  // namespace

LevelSequence LevelSequence::fibonacci() {
  return LevelSequence(Kind::Fibonacci, "fib", 0, {});
}

LevelSequence LevelSequence::constant(std::uint64_t k) {
  if (k < 1) throw Error(Errc::InvalidSequence, "constant level size must be at least 1");
  return LevelSequence(Kind::Constant, "const:" + std::to_string(k), k, {});
}

LevelSequence LevelSequence::natural() {
  return LevelSequence(Kind::Natural, "nat", 0, {});
}

LevelSequence LevelSequence::custom(std::vector<std::uint64_t> sizes) {
  if (sizes.empty()) throw Error(Errc::InvalidSequence, "custom sequence has no values");
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] < 1)
      throw Error(Errc::InvalidSequence,
                  "custom sequence value for level " + std::to_string(i) + " must be at least 1");
  return LevelSequence(Kind::Custom, "custom", 0, std::move(sizes));
}

std::uint64_t LevelSequence::level_size(int level) const {
  if (level < 0) throw Error(Errc::LevelOutOfRange, "levels are numbered from 0");
  switch (kind_) {
    case Kind::Constant:
      return constant_;
    case Kind::Natural:
      return static_cast<std::uint64_t>(level) + 1;
    case Kind::Custom:
      if (static_cast<std::size_t>(level) >= sizes_.size())
        throw Error(Errc::InvalidSequence,
                    "custom sequence defines levels 0.." + std::to_string(sizes_.size() - 1) +
                        ", level " + std::to_string(level) + " requested");
      return sizes_[static_cast<std::size_t>(level)];
    case Kind::Fibonacci: {
      // 1, 1, 1, 2, 3, 5, ...: the exceptional zeroth value is 1
      if (level == 0) return 1;
      std::uint64_t a = 1, b = 1;  // sizes of levels 1 and 2
      for (int s = 1; s < level; ++s) {
        const std::uint64_t next = a + b;
        if (next < a) throw Error(Errc::BudgetExceeded, "level size overflows 64 bits");
        a = b;
        b = next;
      }
      return a;
    }
  }
  throw Error(Errc::InvalidSequence, "unknown sequence kind");
}

LevelSequence sequence_parse(std::string_view spec) {
  if (spec == "fib") return LevelSequence::fibonacci();
  if (spec == "nat") return LevelSequence::natural();
  if (spec.starts_with("const:"))
    return LevelSequence::constant(parse_u64(spec.substr(6), "constant level size"));
  if (spec.starts_with("file:")) {
    const std::string path(spec.substr(5));
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open sequence file '" + path + "'");
    std::vector<std::uint64_t> sizes;
    std::string token;
    while (in >> token) sizes.push_back(parse_u64(token, "sequence file value"));
    if (sizes.empty()) throw Error(Errc::ParseError, "sequence file '" + path + "' is empty");
    return LevelSequence::custom(std::move(sizes));
  }
  throw Error(Errc::ParseError, "unrecognized sequence spec '" + std::string(spec) +
                                    "' (expected fib | const:<k> | nat | file:<path>)");
}

CobwebTruncation::CobwebTruncation(LevelSequence sequence, int max_level,
                                   std::uint64_t vertex_budget)
    : sequence_(std::move(sequence)), max_level_(max_level) {
  if (max_level < 0) throw Error(Errc::LevelOutOfRange, "max level must be non-negative");
  const std::uint64_t cap =
      std::min<std::uint64_t>(vertex_budget, std::numeric_limits<int>::max());
  offsets_.reserve(static_cast<std::size_t>(max_level) + 2);
  offsets_.push_back(0);
  std::uint64_t total = 0;
  for (int s = 0; s <= max_level; ++s) {
    const std::uint64_t size = sequence_.level_size(s);
    if (size > cap - total)
      throw Error(Errc::BudgetExceeded,
                  "truncation to level " + std::to_string(max_level) + " exceeds the budget of " +
                      std::to_string(vertex_budget) + " vertices");
    total += size;
    offsets_.push_back(static_cast<int>(total));
  }
}

int CobwebTruncation::level_size(int level) const {
  if (level < 0 || level > max_level_)
    throw Error(Errc::LevelOutOfRange,
                "level " + std::to_string(level) + " outside 0.." + std::to_string(max_level_));
  return offsets_[level + 1] - offsets_[level];
}

int CobwebTruncation::level_offset(int level) const {
  if (level < 0 || level > max_level_)
    throw Error(Errc::LevelOutOfRange,
                "level " + std::to_string(level) + " outside 0.." + std::to_string(max_level_));
  return offsets_[level];
}

int CobwebTruncation::index_of(CobwebVertex v) const {
  if (v.level < 0 || v.level > max_level_ || v.column < 1 || v.column > level_size(v.level))
    throw Error(Errc::InvalidVertex, vertex_label(v) + " is outside the truncation");
  return offsets_[v.level] + (v.column - 1);
}

CobwebVertex CobwebTruncation::vertex_at(int index) const {
  if (index < 0 || index >= vertex_count())
    throw Error(Errc::InvalidVertex, "index " + std::to_string(index) + " outside 0.." +
                                         std::to_string(vertex_count() - 1));
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  const int level = static_cast<int>(it - offsets_.begin()) - 1;
  return {index - offsets_[level] + 1, level};
}

CobwebTruncation build_truncation(const LevelSequence& sequence, int max_level,
                                  std::uint64_t vertex_budget) {
  return CobwebTruncation(sequence, max_level, vertex_budget);
}

Digraph cobweb_edges(const CobwebTruncation& t) {
  std::uint64_t arc_total = 0;
  for (int p = 0; p < t.max_level(); ++p)
    arc_total += static_cast<std::uint64_t>(t.level_size(p)) * t.level_size(p + 1);
  if (arc_total > kArcBudget)
    throw Error(Errc::BudgetExceeded, "edge set needs " + std::to_string(arc_total) +
                                          " arcs; limit is " + std::to_string(kArcBudget));

  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(arc_total));
  for (int p = 0; p < t.max_level(); ++p) {
    const int src_begin = t.level_offset(p);
    const int src_end = src_begin + t.level_size(p);
    const int dst_begin = t.level_offset(p + 1);
    const int dst_end = dst_begin + t.level_size(p + 1);
    for (int u = src_begin; u < src_end; ++u)
      for (int v = dst_begin; v < dst_end; ++v) arcs.push_back({u, v});
  }
  return Digraph(t.vertex_count(), std::move(arcs));
}

bool poset_leq(const CobwebTruncation& t, CobwebVertex x, CobwebVertex y) {
  t.index_of(x);
  t.index_of(y);
  return x.level < y.level || (x.level == y.level && x.column == y.column);
}

Relation poset_relation(const CobwebTruncation& t) {
  const int n = t.vertex_count();
  BitMatrix leq(n);
  for (int i = 0; i < n; ++i) leq.set(i, i);
  for (int s = 0; s < t.max_level(); ++s) {
    const int begin = t.level_offset(s);
    const int end = begin + t.level_size(s);
    const int above = t.level_offset(s + 1);
    for (int i = begin; i < end; ++i)
      for (int j = above; j < n; ++j) leq.set(i, j);
  }
  return Relation(std::move(leq));
}

Chain chain_x(const CobwebTruncation& t) {
  std::vector<int> order(static_cast<std::size_t>(t.vertex_count()));
  for (int i = 0; i < t.vertex_count(); ++i) order[i] = i;
  return Chain(std::move(order));
}

Chain chain_y(const CobwebTruncation& t) {
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(t.vertex_count()));
  for (int s = 0; s <= t.max_level(); ++s) {
    const int begin = t.level_offset(s);
    for (int c = t.level_size(s); c >= 1; --c) order.push_back(begin + c - 1);
  }
  return Chain(std::move(order));
}

Realizer realizer(const CobwebTruncation& t) {
  Realizer r{chain_x(t), chain_y(t), {}};
  r.order = chain_intersection(r.x, r.y);
  if (r.order != poset_relation(t))
    throw Error(Errc::ConsistencyFailure,
                "chain intersection disagrees with the level order");
  if (hasse_from_relation(r.order) != cobweb_edges(t))
    throw Error(Errc::ConsistencyFailure,
                "covering relation of the intersection disagrees with the layer arcs");
  return r;
}

Digraph di_biclique(const CobwebTruncation& t, int level) {
  if (level < 0 || level >= t.max_level())
    throw Error(Errc::LevelOutOfRange,
                "di-biclique level must satisfy 0 <= p < " + std::to_string(t.max_level()));
  std::vector<Arc> arcs;
  const int src_begin = t.level_offset(level);
  const int src_end = src_begin + t.level_size(level);
  const int dst_begin = t.level_offset(level + 1);
  const int dst_end = dst_begin + t.level_size(level + 1);
  arcs.reserve(static_cast<std::size_t>(src_end - src_begin) * (dst_end - dst_begin));
  for (int u = src_begin; u < src_end; ++u)
    for (int v = dst_begin; v < dst_end; ++v) arcs.push_back({u, v});
  return Digraph(t.vertex_count(), std::move(arcs));
}

Digraph delete_arcs(const CobwebTruncation& t, const std::vector<Arc>& removed) {
  const Digraph full = cobweb_edges(t);
  for (const Arc& a : removed)
    if (!full.has_arc(a.from, a.to))
      throw Error(Errc::ForeignArc, "arc (" + std::to_string(a.from) + ", " +
                                        std::to_string(a.to) + ") is not a cobweb arc");
  std::vector<Arc> sorted_removed = removed;
  std::sort(sorted_removed.begin(), sorted_removed.end());
  sorted_removed.erase(std::unique(sorted_removed.begin(), sorted_removed.end()),
                       sorted_removed.end());
  std::vector<Arc> kept;
  kept.reserve(full.arcs().size() - sorted_removed.size());
  std::set_difference(full.arcs().begin(), full.arcs().end(), sorted_removed.begin(),
                      sorted_removed.end(), std::back_inserter(kept));
  return Digraph(t.vertex_count(), std::move(kept));
}

}  // namespace cobweb
