#pragma once

#include <string>

#include <json.hpp>

#include "finite_ring.hpp"

namespace glr {

/// Ring spec DSL:
///
///   ring    := prod
///   prod    := post ( "x" post )*
///   post    := primary ( "/" "(" gens ")" )*        quotient binds tighter
///   primary := "Z" int
///            | "GF" "(" int ")" "[x]/(" poly ")"
///            | "M" int "(" ring ")"
///            | "(" ring ")"
///            | "@" path                              JSON spec document
///            | "@inline:" json                       same, without a file
///   poly    := mono ( "+" mono )*
///   mono    := int | int "x" | "x" | int "x^" int | "x^" int
///   gens    := int ( "," int )*
///
/// Throws ParseError with the byte offset of the failure.
RingSpec parse_spec(const std::string& text);

/// Pretty printer; parse_spec(render_spec(s)) reproduces s exactly.
std::string render_spec(const RingSpec& spec);

nlohmann::json spec_to_json(const RingSpec& spec);
RingSpec spec_from_json(const nlohmann::json& j);

} // namespace glr
