#include "cobweb/text_io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace cobweb {

Digraph read_digraph_text(std::istream& in) {
  std::int64_t n = 0;
  std::int64_t m = 0;
  if (!(in >> n >> m)) throw Error(Errc::ParseError, "expected header 'n m'");
  if (n < 0 || m < 0) throw Error(Errc::ParseError, "vertex and arc counts must be non-negative");
  if (n > std::numeric_limits<int>::max())
    throw Error(Errc::ParseError, "vertex count does not fit in an int");

  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    int u = 0;
    int v = 0;
    if (!(in >> u >> v))
      throw Error(Errc::ParseError, "expected arc line " + std::to_string(i + 1) + " of " +
                                        std::to_string(m));
    arcs.push_back({u, v});
  }
  std::string trailing;
  if (in >> trailing)
    throw Error(Errc::ParseError, "trailing data after " + std::to_string(m) + " arcs");
  return Digraph(static_cast<int>(n), std::move(arcs));
}

Digraph read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open digraph file '" + path + "'");
  return read_digraph_text(in);
}

void write_digraph_text(std::ostream& out, const Digraph& g) {
  out << g.vertex_count() << ' ' << g.arc_count() << '\n';
  for (const Arc& a : g.arcs()) out << a.from << ' ' << a.to << '\n';
}

std::string chain_to_text(const Chain& chain) {
  std::string line;
  for (int i = 0; i < chain.size(); ++i) {
    if (i > 0) line += ' ';
    line += std::to_string(chain.vertex_at(i));
  }
  return line;
}

std::string relation_to_text(const Relation& r) {
  std::string text;
  const int n = r.vertex_count();
  text.reserve(static_cast<std::size_t>(n) * (n + 1));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) text += r.leq(u, v) ? '1' : '0';
    text += '\n';
  }
  return text;
}

void write_dot(std::ostream& out, const CobwebTruncation& t) {
  out << "digraph cobweb {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (int i = 0; i < t.vertex_count(); ++i) {
    const CobwebVertex v = t.vertex_at(i);
    out << "  v" << i << " [label=\"" << v.column << ',' << v.level << "\"];\n";
  }
  for (int s = 0; s <= t.max_level(); ++s) {
    out << "  { rank=same;";
    const int begin = t.level_offset(s);
    for (int i = begin; i < begin + t.level_size(s); ++i) out << " v" << i << ';';
    out << " }\n";
  }
  const Digraph edges = cobweb_edges(t);
  for (const Arc& a : edges.arcs()) out << "  v" << a.from << " -> v" << a.to << ";\n";
  out << "}\n";
}

}  // namespace cobweb
