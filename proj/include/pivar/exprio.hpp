#pragma once

#include "pivar/graph.hpp"
#include "pivar/models.hpp"
#include "pivar/polynomial.hpp"
#include "pivar/tideal.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pivar {

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := [rational ['*']] factor (['*'] factor)*   |  '0'
//   factor := atom ('^' uint)*
//   atom   := var | '(' expr ')' | '[' expr (',' expr)+ ']'
//           | 'S' uint '(' expr {',' expr} ')' | 'h' uint '(' expr {',' expr} ')'
//           | 'd3' '(' expr ',' expr ',' expr ';' expr ',' expr ')'
//           | 'd3tail' '(' expr ',' expr ',' expr ';' expr ')'
//   var    := x | y | z | t | u | v | 'x' uint
// Throws SyntaxError, or ArityError for S, h, d3 and d3tail argument counts.
Polynomial parse(std::string_view src);

// One identity per non-blank line; '#' starts a comment. Error lines refer to
// the whole text.
std::vector<Polynomial> parse_ideal(std::string_view text);

// x, y, z, t, u, v for 1..6 and x7, x8, ... beyond.
std::string variable_name(int index);

// Canonical form in monomial order, e.g. "x*y - y*x", "2*x^2*y", "1/2*x", "0".
std::string print(const Polynomial& f);

// "x=a,y=2*b - a": values are rational combinations of basis labels.
Assignment parse_assignment(const Algebra& a, std::string_view spec);
std::string format_assignment(const Algebra& a, const Assignment& values);

std::string emit_dot(const ImplicationGraph& g);

std::string to_json(const SpanBasis& s);
std::string to_json(const CocharTable& t);

} // namespace pivar
