#pragma once

#include <nlohmann/json.hpp>

#include "morsenov/argmap.hpp"
#include "morsenov/braid.hpp"
#include "morsenov/laurent.hpp"
#include "morsenov/murasugi.hpp"
#include "morsenov/surface.hpp"

// JSON wire formats. Every parser throws Error(kInvalidInput) on a shape or
// type mismatch instead of leaking nlohmann exceptions.
namespace morsenov::io {

using nlohmann::json;

/// {"strands": 3, "word": [1, -2, 1, -2]}
json braidword_to_json(const Braidword& word);
Braidword braidword_from_json(const json& j);

/// {"poly": {"-1": 1, "0": -3, "2": 2}}
json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json seifert_to_json(const SeifertMatrix& m);

/// {"plumb": {...}}, {"twist": {...}}, {"annulus": {"n": 0}}, {"braid": {...}}, {"disk": {}}
SurfaceExpr surface_expr_from_json(const json& j);
json surface_expr_to_json(const SurfaceExpr& e);

json bundle_to_json(const SeifertMatrixBundle& b);

json deplumb_to_json(const DeplumbResult& d);

/// {"P": [{"zexp": 2, "wexp": 0, "re": 2.0, "im": 0.0}, ...], "Q": [...]}
argmap::BivariateMero bivariate_from_json(const json& j);
json bivariate_to_json(const argmap::BivariateMero& f);

/// {"num": [1, 0, 0, 1], "den": [1, 0, 0, -1]}, ascending; entries may be
/// real numbers or [re, im] pairs.
argmap::RationalMap rational_from_json(const json& j);
argmap::Poly poly_from_json(const json& j);

json crit_point_to_json(const argmap::CritPoint& p);
json milnor_result_to_json(const argmap::MilnorResult& r);
json link_radius_to_json(const argmap::LinkRadiusResult& r);

}  // namespace morsenov::io
