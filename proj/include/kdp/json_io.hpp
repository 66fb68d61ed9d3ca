#pragma once

#include <json.hpp>

#include "kdp/field_probe.hpp"
#include "kdp/free_monoid.hpp"
#include "kdp/kolchin.hpp"
#include "kdp/lattice.hpp"
#include "kdp/numpoly.hpp"
#include "kdp/ordinal.hpp"
#include "kdp/rank_engine.hpp"

namespace kdp {

using json = nlohmann::json;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings beyond that; both forms are accepted on input.
json json_of_integer(const Integer& n);
Integer integer_of_json(const json& j);

json to_json(const NumericalPolynomial& p);      // {"binomial_coeffs": [...]}
NumericalPolynomial polynomial_of_json(const json& j);

json to_json(const Ordinal& o);                  // {"cnf": [[e, c], ...], "pretty": "..."}
Ordinal ordinal_of_json(const json& j);          // also accepts "w^2*3 + 1" or a number

json to_json(const LeaderSet& ls);               // {"m": m, "coords": [...]}
LeaderSet leader_set_of_json(const json& j);

json to_json(const WordSet& s);                  // {"m": m, "words": ["2,1", ...]}
WordSet word_set_of_json(const json& j);

json to_json(const KolchinDecomposition& d);
json to_json(const BoundsReport& r);
json to_json(const DimensionPolynomial& dp);
json to_json(const ChainReport& r);
json to_json(const GrowthWitness& w);
json to_json(const InvQuad& q);

// Canonical single-line dump with trailing newline; pretty = 2-space indent.
std::string dump_report(const json& j, bool pretty);

}  // namespace kdp
