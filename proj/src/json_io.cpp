#include "cobweb/json_io.hpp"

namespace cobweb {

using nlohmann::json;

namespace {

json vertex_pair(CobwebVertex v) { return json::array({v.column, v.level}); }

}  // namespace

json chain_pairs_json(const Chain& chain, const CobwebTruncation& t) {
  json pairs = json::array();
  for (int i = 0; i < chain.size(); ++i) pairs.push_back(vertex_pair(t.vertex_at(chain.vertex_at(i))));
  return pairs;
}

json chain_indices_json(const Chain& chain) {
  json indices = json::array();
  for (int i = 0; i < chain.size(); ++i) indices.push_back(chain.vertex_at(i));
  return indices;
}

json vertex_table_json(const CobwebTruncation& t) {
  json table = json::array();
  for (int i = 0; i < t.vertex_count(); ++i) table.push_back(vertex_pair(t.vertex_at(i)));
  return table;
}

json odag_result_json(const OdagResult& result) {
  json out;
  out["representable"] = result.representable;
  if (result.representable) {
    out["witness_x"] = chain_indices_json(*result.witness_x);
    out["witness_y"] = chain_indices_json(*result.witness_y);
  } else {
    out["failure_reason"] = to_string(*result.failure_reason);
  }
  return out;
}

json realizer_json(const Realizer& r, const CobwebTruncation& t) {
  json out;
  out["x"] = chain_pairs_json(r.x, t);
  out["y"] = chain_pairs_json(r.y, t);
  out["verified"] = true;  // realizer() throws instead of returning unverified chains
  return out;
}

json theorem1_report_json(const oracle::Theorem1Report& report) {
  json out;
  out["n"] = report.vertex_count;
  out["dags_checked"] = report.dags_checked;
  json cases = json::array();
  for (const auto& cex : report.counterexamples) {
    json arcs = json::array();
    for (const Arc& a : cex.digraph.arcs()) arcs.push_back(json::array({a.from, a.to}));
    cases.push_back({{"vertices", cex.digraph.vertex_count()},
                     {"arcs", arcs},
                     {"dim2_by_search", cex.by_search},
                     {"regular_and_admissible", cex.by_characterization}});
  }
  out["counterexamples"] = cases;
  return out;
}

}  // namespace cobweb
