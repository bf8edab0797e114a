#ifndef PCURVE_PARSE_HPP
#define PCURVE_PARSE_HPP

#include <map>
#include <string>
#include <string_view>

#include "pcurve/poly.hpp"

namespace pcurve {

using ParameterBindings = std::map<std::string, FieldElement, std::less<>>;

// Grammar (whitespace insignificant):
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := power ('*' power)*
//   power   := primary ['^' INT]
//   primary := INT | IDENT | '(' expr ')'
// Identifiers are ring variables (x0..xN, plus x,y,z aliases for three
// variables) or parameters bound to field elements.
MultiPoly parse_poly(std::string_view text, const Ring& ring, const ParameterBindings& params = {},
                     bool require_homogeneous = false);

// "name=value" with the value in the field-element grammar.
std::pair<std::string, FieldElement> parse_binding(std::string_view text, const Field& field);

}  // namespace pcurve

#endif  // PCURVE_PARSE_HPP
