#pragma once

#include <json.hpp>

#include "qhs/family.hpp"
#include "qhs/fourform.hpp"
#include "qhs/goursat.hpp"
#include "qhs/rep.hpp"

namespace qhs {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Vec& v);
Json to_json(const Matrix& m);        // dense: array of rows of "p/q" strings
Json sparse_to_json(const Matrix& m); // {rows, cols, entries: [[i,j,"c"]..]}
Json to_json(const Subspace& s);
Json to_json(const LieAlgebra& l);    // sparse triples [i,j,k,"c"], i<j
Json to_json(const Representation& r);
Json to_json(const MultiPoly& p);     // {variables, terms: {"e1,e2,..": "c"}}
Json to_json(const FourForm& f);      // {"[a,b,c,d]": "c"}
Json to_json(const GoursatQuintuple& q);

Rational rational_from_json(const Json& j);

/// Parses {"a1": "...", "a2": "...", "a3": "..."} or a full seven-entry
/// object {"a": ..., ..., "a3": ...}; completes triples through the
/// constraint parametrization.
std::array<Rational, 7> params_from_json(const Json& j, bool* was_full_seven = nullptr);

}  // namespace qhs
