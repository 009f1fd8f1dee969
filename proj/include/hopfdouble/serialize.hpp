#pragma once

#include <string>

#include <json.hpp>

#include "hopfdouble/bicovariant.hpp"
#include "hopfdouble/finite_group.hpp"
#include "hopfdouble/hopf_algebra.hpp"

namespace hopfdouble {

using Json = nlohmann::ordered_json;

inline constexpr const char* kHopfFormat = "hopf-algebra/1";
inline constexpr const char* kTableFormat = "cayley-table/1";
inline constexpr const char* kRepFormat = "double-rep/1";

/// Exact scalars are written as "p" or "p/q" strings, never as floats.
Json to_json(const Scalar& s);
Json to_json(const Vec& v);
Json to_json(const Matrix& m);
Json to_json(const Report& r);

/// hopf-algebra/1: dim, labels, unit, counit, and sparse entry lists
/// mult/comult [A,B,C,"p/q"] and antipode [A,B,"p/q"].
Json hopf_to_json(const HopfData& h);
/// Throws ParseError naming the offending location. Does not verify axioms.
HopfData hopf_from_json(const Json& j);

/// cayley-table/1: table (0-based rows), optional labels.
FiniteGroup group_from_json(const Json& j, int max_order);
Json group_to_json(const FiniteGroup& g);

/// double-rep/1: the base algebra F (hopf-algebra/1), n, rhoF and rhoU as
/// lists of n x n matrices of "p/q" strings.
Json rep_to_json(const DoubleRepresentation& rho);
/// Parses the matrices of a representation of the double d.
DoubleRepresentation rep_from_json(const Json& j, const DoublePtr& d);

/// Reads and parses a JSON file; throws ParseError with the path.
Json read_json_file(const std::string& path);

}  // namespace hopfdouble
