#pragma once

// Serialized forms. All numeric values are exact: big integers are decimal
// strings, rationals are "p/q", colors are 1-based.

#include <dpcolor/chromcount.hpp>
#include <dpcolor/cover.hpp>
#include <dpcolor/dpfunc.hpp>
#include <dpcolor/genlib.hpp>
#include <dpcolor/hypergraph.hpp>

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace dpcolor::io {

using Json = nlohmann::json;

/// Accepts either {"n": 6, "edges": [[0,1,2], ...]} or the terse text form
///     n=6
///     e=0 1 2
///     e=2 3 4
/// detected by the first non-blank character. Blank lines and lines starting
/// with '#' are ignored in the text form. Throws ParseError or any
/// Hypergraph::validate error.
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph read_hypergraph(const std::filesystem::path& path);

Json to_json(const Hypergraph& h);
std::string to_terse(const Hypergraph& h);

/// Ascending-degree coefficient array. Coefficients that do not fit in a
/// signed 64-bit integer are written as decimal strings.
Json to_json(const Polynomial& p);

/// {"edge": j, "k": k, "order": [...], "counts": {"1,2,1": "5", ...}}
Json to_json(const BoundaryProfile& p);

/// {"k":2, "edges":[{"edge":2, "anchor":4, "mu":{"5":[1,2],"0":[2,1]}}, ...]}.
/// Every edge is written; only non-identity permutations appear under "mu".
Json to_json(const TwistCover& c);
/// Omitted edges take the natural cover's layout (anchor = lowest vertex);
/// omitted vertices carry the identity. Throws ParseError / InvalidCover.
TwistCover twist_from_json(const Hypergraph& h, const Json& j);

/// {"k":2, "maps":[{"domain":[0,1,2], "colors":[1,1,1]}, ...]}
Json to_json(const Hypergraph& h, const GeneralCover& f);
GeneralCover general_from_json(const Hypergraph& h, const Json& j);

/// {"value":"80","witness":{...},"covers_examined":2,"free_slots":1}
Json to_json(const DpResult& r);

Json to_json(const StructureReport& r);
Json to_json(const GenSpec& s);
/// {"family":"loose_cycle","r":3,"p":4,...}; missing fields take defaults.
GenSpec genspec_from_json(const Json& j);

/// Header "k,P,P_DP,gap,normalized_gap", one row per entry.
std::string gap_csv(const std::vector<GapRow>& rows);
Json to_json(const std::vector<GapRow>& rows);

} // namespace dpcolor::io
