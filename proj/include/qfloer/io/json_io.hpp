#pragma once

#include "qfloer/chain/chain_model.hpp"
#include "qfloer/chain/report.hpp"
#include "qfloer/equivariant_table.hpp"
#include "qfloer/lattice.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace qfloer::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Every reader throws SchemaError on malformed input, including JSON syntax
// errors and a missing or unknown "schema" field.

// Rationals are written as "num/den" strings. Readers also accept integers
// and [num, den] pairs.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// List of [coefficient, exponent] pairs in ascending exponent.
Json to_json(const QLaurent& p);
QLaurent qlaurent_from_json(const Json& j);

// {"schema": 1, "n": n, "labels": [...], "spheres": [...], "pairing": [[...]]}
// or {"schema": 1, "builder": {"kind": "Am", "m": m, "n": n}} and
// {"schema": 1, "builder": {"kind": "affine_A1", "n": 3}}.
Json to_json(const QLattice& lat);
QLattice lattice_from_json(const Json& j);

// {"schema": 1, "word": [[sphere, exponent], ...]}; letters may also be
// {"sphere": i, "exponent": e}.
Json to_json(const TwistWord& w);
TwistWord word_from_json(const Json& j);

// {"schema": 1, "n": n, "entries": [{"degree", "weight", "dim"}, ...],
//  "q_intersection": [...]}
Json to_json(const EquivariantTable& t);
EquivariantTable table_from_json(const Json& j);

// Graded spaces are {"deg": dim} maps or explicit lists of
// {"label", "degree"}. Tensor inputs and output ids are basis positions or
// labels; output entries are [id, num, den] or [id, "num/den"].
Json to_json(const ChainModel& m);
ChainModel model_from_json(const Json& j);

Json to_json(const Report& r);
Json reports_to_json(const std::vector<Report>& reports);

Json parse(const std::string& text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);
std::string dump(const Json& j);

}  // namespace qfloer::io
