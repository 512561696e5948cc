#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "scheme_double.hpp"
#include "scheme_simple.hpp"

namespace histroute {

enum class SchemeKind { Simple, Double };

std::string_view to_string(SchemeKind kind);

/// Text dumps, one vertex per line after a `scheme <kind> n=<n>` header.
/// Simple: `id | label bits | table bit | neighbor ids`.
/// Double: `id | x y | lo hi | bdLo bdHi tdLo tdHi bd2x bd2y | bit | neighbor ids`.
/// Neighbor lists are closed (they include the vertex itself). Lines
/// starting with `#` are comments.
void write_scheme(std::ostream& os, const SimpleScheme& scheme);
void write_scheme(std::ostream& os, const DoubleScheme& scheme);

/// Kind named by the first non-comment line, or nullopt if the text does
/// not start like a scheme dump.
std::optional<SchemeKind> sniff_scheme(const std::string& text);

/// Parsers throw ParseError (see polygon.hpp) with the offending line.
SimpleScheme read_simple_scheme(std::istream& is);
DoubleScheme read_double_scheme(std::istream& is);

}  // namespace histroute
