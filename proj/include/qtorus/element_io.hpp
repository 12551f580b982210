#pragma once

#include <string>

#include "qtorus/algebra.hpp"

namespace qtorus {

// Text grammar shared by the printer and the parser:
//   expr    := [+|-] term (('+'|'-') term)*
//   term    := power (('*'|'/')? power)*        juxtaposition multiplies
//   power   := primary ('^' [+|-] integer)?
//   primary := integer | name | '(' expr ')'
// Names: x1..xn, t (alias of xn), q (r = 1) or q1..qr, z (root mode).
// Division and negative powers are accepted only for units.

std::string format_scalar(const Scalar& s, const Field& field);
std::string format_element(const Element& e);

Element parse_element(const std::string& text, const AlgebraPtr& ctx);
/// Parses text that must denote a scalar (an element supported at 0).
Scalar parse_scalar(const std::string& text, const Field& field);

}  // namespace qtorus
