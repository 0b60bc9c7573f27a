#pragma once

// JSON serialization for every externally visible type.  All emitters use
// nlohmann::ordered_json with fixed key order and sorted term order, so a
// given value always serializes to the same bytes.  Rational values are
// strings ("num/den", "/den" omitted for integers).

#include "tautchi/inclexcl.hpp"
#include "tautchi/qseries.hpp"
#include "tautchi/rational.hpp"
#include "tautchi/toric.hpp"
#include "tautchi/uvpoly.hpp"
#include "tautchi/verify.hpp"

#include "json.hpp"

#include <string>

namespace tautchi::io {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Rational& r); // string
Rational rational_from_json(const ordered_json& j);

ordered_json to_json(const UVPoly& p); // [{"u":i,"v":j,"value":"c"}, ...] sorted by (u,v)
UVPoly uvpoly_from_json(const ordered_json& j);

ordered_json to_json(const QSeries& s); // {"order":N,"coefficients":[[n,[...]],...]} for all n
QSeries qseries_from_json(const ordered_json& j);

ordered_json coeffseq_to_json(const CoeffSeq& c); // [uvpoly, ...] for c_1..c_N
CoeffSeq coeffseq_from_json(const ordered_json& j);

ordered_json to_json(const toric::ToricSurface& S);
toric::ToricSurface surface_from_json(const ordered_json& j);

ordered_json to_json(const toric::ToricLineBundle& b); // {"ray_coeffs":[...]}
toric::ToricLineBundle bundle_from_json(const ordered_json& j);

ordered_json to_json(const toric::ProjProduct& X);  // {"type":"proj_product","lambda":[...]}
ordered_json to_json(const toric::ProjBundle& b);   // {"m":[...]}

ordered_json to_json(const toric::MarkedSurface& m); // {"space":...,"K":...,"L":...}
ordered_json to_json(const toric::DegenerationScenario& s);

ordered_json to_json(const toric::GeneratorTriple& t);

// timing_ms is emitted only on request so that default output stays
// byte-stable across runs.
ordered_json to_json(const verify::VerdictReport& r, bool include_timing = false);

} // namespace tautchi::io
