#ifndef BILAT_JSON_IO_HPP
#define BILAT_JSON_IO_HPP

#include "bilat/algebra.hpp"
#include "bilat/duality.hpp"

#include <string>

namespace bilat {

/// Algebra document: UTF-8 JSON with fields variety, universe, operations.
/// Operation tables are indexed by universe position, row-major nested
/// lists for arity 2, a flat list for arity 1, and an element name for
/// arity 0.  Unknown keys are rejected.
std::string serialize_algebra(const FinAlgebra& a);
FinAlgebra parse_algebra(const std::string& text);
FinAlgebra load_algebra_file(const std::string& path);

/// Content hash (hex) of the canonical serialization.
std::string fingerprint(const FinAlgebra& a);

/// Structured-space document for the `edual` command: fields variety,
/// sorts (point name lists), relations (pair lists parallel to the
/// standard alter ego's relations) and nullaries (point indices parallel
/// to the ego's nullaries).
std::string serialize_space(const StructuredSpace& x, Variety v);
std::pair<StructuredSpace, Variety> parse_space(const std::string& text);
std::pair<StructuredSpace, Variety> load_space_file(const std::string& path);
std::string fingerprint_space(const StructuredSpace& x, Variety v);

} // namespace bilat

#endif
