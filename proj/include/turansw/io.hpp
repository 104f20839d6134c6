#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "turansw/admissible.hpp"
#include "turansw/hypergraph.hpp"
#include "turansw/three_tournament.hpp"
#include "turansw/tournament.hpp"
#include "turansw/two_graph.hpp"

namespace turansw {

// Line formats, one object per line:
//   T <n>:<hex>   tournament pair bits      (i<j lex, 1 = i->j)
//   G <n>:<hex>   oriented two-graph signs  (lex triples, 1 = +1)
//   D <n>:<hex>   3-tournament signs        (lex triples, 1 = +1)
//   X <n>:<hex>   two-graph membership bits (lex triples, 1 = member)
//   F <p>:<bits>  admissible function, '1'/'0' signs on 1..(p-1)/2
// Hex is lowercase, MSB-first, zero-padded to whole bytes.

std::string to_line(const Tournament& t);
std::string to_line(const OrientedTwoGraph& g);
std::string to_line(const ThreeTournament& g);
std::string to_line(const TwoGraph& x);
std::string to_line(const AdmissibleFunction& f);

Tournament parse_tournament_line(const std::string& line);
OrientedTwoGraph parse_two_graph_line(const std::string& line);
ThreeTournament parse_three_tournament_line(const std::string& line);
TwoGraph parse_switching_set_line(const std::string& line);
AdmissibleFunction parse_admissible_line(const std::string& line);

nlohmann::json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

}  // namespace turansw
