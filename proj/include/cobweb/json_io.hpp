#pragma once

#include <json.hpp>

#include "cobweb/digraph.hpp"
#include "cobweb/oracle.hpp"
#include "cobweb/poset.hpp"

namespace cobweb {

// Chain rendered as [[j, s], ...] pairs in chain order.
nlohmann::json chain_pairs_json(const Chain& chain, const CobwebTruncation& t);

// Chain rendered as a plain array of vertex indices.
nlohmann::json chain_indices_json(const Chain& chain);

// Index-ordered array of [j, s] pairs, one per vertex of the truncation.
nlohmann::json vertex_table_json(const CobwebTruncation& t);

nlohmann::json odag_result_json(const OdagResult& result);

nlohmann::json realizer_json(const Realizer& r, const CobwebTruncation& t);

nlohmann::json theorem1_report_json(const oracle::Theorem1Report& report);

}  // namespace cobweb
