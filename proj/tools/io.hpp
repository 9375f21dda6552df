#pragma once

// JSON and DOT conversions for the command-line tools. All indices that
// appear in emitted JSON and DOT are 1-based; the library itself is 0-based.

#include <string>

#include "json.hpp"

#include "clusterweave/braid.hpp"
#include "clusterweave/exchange_graph.hpp"
#include "clusterweave/ngraph.hpp"
#include "clusterweave/seed.hpp"

namespace cw::io {

using nlohmann::json;

// Matrices: {"rows": m, "cols": n, "entries": [[...]]}. Parsing also accepts
// a bare row list such as [[0,1],[-3,0]].
json to_json(const ExchangeMatrix& b);
ExchangeMatrix matrix_from_json(const json& j);

// Laurent polynomials: {"nvars": m, "terms": [{"exp": [...], "coef": c}], "str": "..."}.
// "str" is informational and ignored when parsing; a missing "nvars" falls
// back to `default_nvars`.
json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j, int default_nvars = 0);

// Seeds: {"n": n, "m": m, "matrix": matrix, "variables": [poly, ...]}. A seed
// given without variables is the initial seed of its matrix.
json to_json(const Seed& s);
Seed seed_from_json(const json& j);

// Braid words: {"strands": N, "letters": [...], "str": "s1 s2^3"}.
json to_json(const BraidWord& w);
BraidWord braid_from_json(const json& j);

// N-graphs: vertices and edges carry 1-based ids; a rotation entry +e is the
// end of edge e listed first in "ends" and -e its other end.
json to_json(const NGraph& g);
NGraph ngraph_from_json(const json& j);
json to_json(const NGraph& g, const CycleSet& cycles);
CycleSet cycles_from_json(const json& j);

// Exchange graph slices: nodes in discovery order with their canonical seeds.
json to_json(const ExchangeGraphSlice& s);
ExchangeGraphSlice slice_from_json(const json& j);

// DOT exports. Quiver arcs carry a multiplicity label when |b_ij| > 1 and
// rows beyond the mutable part are drawn as boxes.
std::string quiver_dot(const ExchangeMatrix& b);
std::string slice_dot(const ExchangeGraphSlice& s);
std::string ngraph_dot(const NGraph& g);

}  // namespace cw::io
