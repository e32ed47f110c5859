#pragma once

// JSON forms of the library's values. Rationals are strings "p/q" (integers
// may also be given as JSON numbers on input); object keys come out sorted.
//
//   poset    {"kind": "rn"|"cone"|"orthant"|"finite"|"product", "dim": n,
//             "facets": [[..]], "hasse": [[i, j], ..], "factors": [..]}
//   region   {"kind": "up"|"down", "flavor": "closed"|"open", "gens": [[..]],
//             "poset": .. (default rn of the generators' dimension), "dim": n}
//   convex   {"outer": region, "inner": region}
//   module   {"dim": n, "breakpoints": [[..]], "cells": [{"index": [..], "space": d}],
//             "steps": [{"cell": [..], "axis": i, "matrix": [[..]]}]}
//            or {"dim": n, "constant_regions": [region or convex, ..]} for a
//            sum of indicators. Missing cells and steps are 0.
//   family   {"v": [..]}

#include "scottpersist/cellmod.hpp"
#include "scottpersist/metrics.hpp"
#include "scottpersist/region.hpp"

#include "json.hpp"

#include <string>

namespace scottpersist {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const Point& p);
Json to_json(const Matrix& m);
Json to_json(const Poset& p);
Json to_json(const StaircaseRegion& r);
Json to_json(const ConvexRegion& r);
Json to_json(const CellModule& m);
Json to_json(const CellMorphism& f);
Json to_json(const SuperlinearFamily& f);
Json to_json(const Distance& d);
Json to_json(const InterleavingCertificate& c);
Json to_json(const MeagerVerdict& v);

// Readers throw ParseError on malformed input and DomainError when the
// value is well formed but violates an invariant.
Rational rational_from_json(const Json& j);
Point point_from_json(const Json& j);
/// Shape given because empty matrices carry none.
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);
Poset poset_from_json(const Json& j);
StaircaseRegion region_from_json(const Json& j);
ConvexRegion convex_from_json(const Json& j);
bool is_convex_json(const Json& j);
CellModule module_from_json(const Json& j);
/// A module document, or a region / convex region read as its indicator.
CellModule module_or_indicator_from_json(const Json& j);
CellMorphism morphism_from_json(const Json& j);
SuperlinearFamily family_from_json(const Json& j);
InterleavingCertificate certificate_from_json(const Json& j);

/// Parses text, turning JSON syntax errors into ParseError.
Json parse_json(const std::string& text);
/// Two-space indented, trailing newline.
std::string dump(const Json& j);

} // namespace scottpersist
