#pragma once

// JSON encodings of the data model. Readers validate shape and label syntax
// and throw ValidationError with a location path; writers emit canonical
// (sorted, deterministic) documents.

#include <string>
#include <utility>

#include <json.hpp>

#include "polycat/bilimits.hpp"
#include "polycat/comonad.hpp"
#include "polycat/finset.hpp"
#include "polycat/poly.hpp"

namespace polycat::json_io {

using Json = nlohmann::ordered_json;

/// Throws ValidationError("malformed_json").
Json parse(const std::string& text, const std::string& source = {});

FinSet read_finset(const Json& j, const std::string& at = {});
Json write(const FinSet& s);

/// {"src":[…], "dst":[…], "map":{label:label}}
SetMap read_setmap(const Json& j, const std::string& at = {});
Json write(const SetMap& f);

/// {"positions":[…], "directions":{position:[…]}}
Polynomial read_poly(const Json& j, const std::string& at = {});
Json write(const Polynomial& p);

/// {"phi1":{position:position}, "sharp":{position:{direction:direction}}}.
/// "src" and "dst" polynomials, when present, must agree with the given ones.
PolyMap read_polymap(const Json& j, const Polynomial& src, const Polynomial& dst, const std::string& at = {});
/// A map carrying its own "src" and "dst".
PolyMap read_polymap(const Json& j, const std::string& at = {});
Json write(const PolyMap& f, bool with_ends = true);

/// {"objects":[…], "arrows":[{name,src,tgt}], "compose":{"g∘f":h}}
Shape read_shape(const Json& j, const std::string& at = {});
Json write(const Shape& s);

/// A shape plus "sets":{object:[…]} and "maps":{arrow:{label:label}}.
FinDiagram read_set_diagram(const Json& j);
/// A shape plus "polys":{object:poly} and "maps":{arrow:{phi1,sharp}}.
PolyDiagram read_poly_diagram(const Json& j);

/// {"carrier":poly, "counit":{phi1,sharp}, "comultiplication":{phi1,sharp}}
Comonoid read_comonoid(const Json& j, const Budget& budget = {}, const std::string& at = {});
Json write(const Comonoid& c);

/// {"objects":[…], "morphisms":[{name,src,tgt}], "identities":{object:name},
///  "compose":{"g∘f":h}}; identity composites may be omitted.
Category read_category(const Json& j, const std::string& at = {});
Json write(const Category& c);

Json write(const Cone& c);
Json write(const PolyCone& c);

}  // namespace polycat::json_io
