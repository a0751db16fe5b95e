#pragma once

#include <string>

#include "json.hpp"

#include "braid_words.hpp"
#include "cluster_twist.hpp"
#include "flag_moduli.hpp"
#include "le_diagram.hpp"
#include "plabic_graph.hpp"
#include "positroid_core.hpp"
#include "tshift_weave.hpp"

namespace pw {

using json = nlohmann::json;

// Schemas are documented in docs/schemas.md. Rationals are strings "p/q" (or "p");
// matrices are arrays of rows. Every *_from_json accepts what the matching to_json writes
// and throws parse_error on anything else.

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const Bap& f);
Bap bap_from_json(const json& j);  // also a bare window array

json to_json(const Necklace& nk);
Necklace necklace_from_json(const json& j);

json to_json(const Toggle& t);
Toggle toggle_from_json(const json& j);

json to_json(const LeDiagram& d);
LeDiagram le_from_json(const json& j);  // also {"text": "..."} in the text format

json to_json(const PlabicGraph& g);
PlabicGraph plabic_from_json(const json& j);
bool same_graph(const PlabicGraph& a, const PlabicGraph& b);

json to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

json to_json(const PerfectOrientation& o);
PerfectOrientation orientation_from_json(const json& j);

json to_json(const BraidWord& w);
BraidWord braid_from_json(const json& j);

json to_json(const W0Normal& w);
W0Normal w0normal_from_json(const json& j);

json to_json(const Weave& w);
Weave weave_from_json(const json& j);
bool same_weave(const Weave& a, const Weave& b);

json to_json(const Flag& f);  // adapted basis
Flag flag_from_json(const json& j);

json to_json(const FlagChain& c);
FlagChain flag_chain_from_json(const json& j);

json to_json(const DecoratedChain& c);
DecoratedChain decorated_chain_from_json(const json& j);
bool same_chain(const DecoratedChain& a, const DecoratedChain& b);

json to_json(const Seed& s);
Seed seed_from_json(const json& j);

json to_json(const DtSequence& d);
DtSequence dt_sequence_from_json(const json& j);

json to_json(const QuasiClusterData& d);
QuasiClusterData quasi_data_from_json(const json& j);

json to_json(const Monomial& m);
Monomial monomial_from_json(const json& j);

json to_json(const TwistReport& r);
TwistReport twist_report_from_json(const json& j);

json to_json(const QuasiReport& r);
QuasiReport quasi_report_from_json(const json& j);

// {"error": kind, "message": ...}
json error_json(const std::string& kind, const std::string& message);

// default search depth: PW_SEARCH_DEPTH when set to a positive integer, else 12
int default_search_depth();

}  // namespace pw
