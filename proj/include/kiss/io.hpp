#pragma once

#include <string>

#include "json.hpp"

#include "kiss/arrangement.hpp"
#include "kiss/cloud.hpp"
#include "kiss/solver.hpp"
#include "kiss/surd.hpp"
#include "kiss/vectors.hpp"

namespace kiss {

/// All files use insertion-ordered JSON with every scalar exact: integers
/// for z and N, "p/q" strings for rationals, {"a","b","s"} objects for
/// surds. Decimal floats appear only in annotation fields whose names end
/// in "_approx" and are never read back.
using Json = nlohmann::ordered_json;

Json vector_to_json(const ExplicitVector& v);
ExplicitVector vector_from_json(const Json& j);

/// {"dim": d, "vectors": [{"z": [...], "N": n}, ...]}. The reader also
/// accepts the compact layout {"dim": d, "N": n, "vectors": [[...], ...]}
/// with one norm-square shared by every row.
Json arrangement_to_json(const Arrangement& arr);
Arrangement arrangement_from_json(const Json& j);

/// {"dim": d, "vectors": [...], "perp": {...}} with "perp" optional; "dim"
/// is the span dimension and must equal the number of rows.
Json basis_to_json(const Basis& basis);
Basis basis_from_json(const Json& j);

/// {"method": 1|2, "basis": {...}, "members": [{"t": ["p/q",...],
/// "r": "p/q", "s": -1|0|1}, ...]}. The reader recomputes each member's
/// quadratic form from its tuple and rejects files whose residuals lie.
struct LoadedCloud {
    Cloud cloud;
    int method;
};
Json cloud_to_json(const Cloud& cloud, int method);
LoadedCloud cloud_from_json(const Json& j);

Json surd_to_json(const Surd& s);
Surd surd_from_json(const Json& j);

/// Ascending [{"value": {...}, "count": n}, ...].
Json profile_to_json(const Profile& p);

Json report_to_json(const CliqueReport& rep);

/// Reads and parses, mapping every failure (missing file, bad syntax) to
/// ParseError.
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// The one serialization used everywhere: 2-space indent plus trailing
/// newline, so byte-for-byte output comparisons are meaningful.
std::string dump_json(const Json& j);

} // namespace kiss
