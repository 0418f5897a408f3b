#ifndef NETKIT_SERIALIZE_HPP
#define NETKIT_SERIALIZE_HPP

#include "netkit/deformation.hpp"
#include "netkit/leibniz_lie.hpp"

#include <json.hpp>

#include <string>

namespace netkit {

/// Keys keep insertion order so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

/// Integers in int64 range become JSON numbers, everything else "p/q".
Json toJson(const Rational& r);
Json toJson(const Vector& v);
/// Array of rows.
Json toJson(const Matrix& m);
Json toJson(const StructureTable& t);
Json toJson(const AlgebraSC& a);
/// Source and target are written inline.
Json toJson(const ActionMap& a);
Json toJson(const TensorMap& t);
Json toJson(const LeibnizLie& l);
Json toJson(const MultiMap& f);
Json toJson(const Report& r);
Json toJson(const CohomologyReport& c);
Json toJson(const DeformationDirection& d);
Json toJson(const NijenhuisCandidate& c);

// Readers throw ParseError naming the JSON path of the offending value.
// Floats are rejected.
Rational rationalFromJson(const Json& j, const std::string& path = "$");
Vector vectorFromJson(const Json& j, std::size_t expected, const std::string& path = "$");
Matrix matrixFromJson(const Json& j, std::size_t rows, std::size_t cols, const std::string& path = "$");
/// sc[i][j]; missing rows, missing entries and nulls read as zero.
StructureTable tableFromJson(const Json& j, std::size_t dim, const std::string& path = "$");
/// The declared flavor is verified; FlavorViolation on failure.
AlgebraSC algebraFromJson(const Json& j, const std::string& fallbackName = "", const std::string& path = "$");
MultiMap multiMapFromJson(const Json& j, const std::string& path = "$");

/// "1, -2/3, 0" -> vector; ParseError on malformed entries.
Vector parseVectorList(const std::string& text);

/// Whole document as UTF-8 text, two-space indent, trailing newline.
std::string dump(const Json& j);

} // namespace netkit

#endif
