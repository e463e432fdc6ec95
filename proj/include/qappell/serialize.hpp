#pragma once

#include "qappell/family.hpp"
#include "qappell/qpoly.hpp"
#include "qappell/quasi.hpp"

#include <json.hpp>

#include <string>

namespace qappell {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Latex };

Format format_from_string(const std::string& name);

/// ["c0", "c1", ...], lowest degree first; the zero polynomial is [].
Json poly_to_json(const QPoly& f);
QPoly poly_from_json(const Json& j);

/// {"family": ..., "a"|"alpha"|"beta"|"lambda"|"q": "p/q", ...}; absent fields omitted.
Json provenance_to_json(const Provenance& provenance);
Provenance provenance_from_json(const Json& j);

/// {"params": {..., "max_degree": N}, "members": [[...], ...]}
Json family_to_json(const PolyFamily& family);
PolyFamily family_from_json(const Json& j);
PolyFamily family_from_json_text(const std::string& text);

/// Header "n,terms" then one row per member: "n,x^k: c_k, ..., 1: c_0".
std::string family_to_csv(const PolyFamily& family);
/// Display-only tabular; not meant to be read back.
std::string family_to_latex(const PolyFamily& family);
std::string render_family(const PolyFamily& family, Format format);

std::string render_moments(const MomentFunctional& functional, const Provenance& provenance,
                           Format format);

}  // namespace qappell
