#pragma once

#include <string>
#include <string_view>

#include "uhg/field.hpp"
#include "uhg/projective.hpp"

namespace uhg {

// Exact textual literals. Points print as [x:y:z], lines as (l:m:n),
// 2-proportions as t:u. Scalars follow the field grammar: integers,
// fractions n/d, residues as bare integers, extension elements as
// a+b*sqrt(d). Parsing is whitespace-insensitive and exact; printed
// literals re-parse to equal values.

std::string scalar_literal(const Scalar& s);
std::string literal(const Point& a);
std::string literal(const Line& L);
std::string literal(const Proportion2& tu);

/// Parses a scalar expression: signed integers, fractions, products,
/// sums, parentheses and sqrt(...) evaluated in the given field
/// (sqrt of a non-square is a parse-time error).
Scalar parse_scalar(const FieldHandle& f, std::string_view text);
Point parse_point(const FieldHandle& f, std::string_view text);
Line parse_line(const FieldHandle& f, std::string_view text);
Proportion2 parse_param(const FieldHandle& f, std::string_view text);

}  // namespace uhg
