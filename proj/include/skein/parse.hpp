#pragma once

#include <string>
#include <string_view>

#include "skein/ncpoly.hpp"

namespace skein {

/// Parses an expression in the algebra `p` and returns its normal form.
///
///   expr    := sum ("ox" sum)*            operand k lives in tensor slot k unless an atom says @i
///   sum     := ["-"] term (("+" | "-") term)*
///   term    := power (("*" power) | ("/" integer))*
///   power   := primary ["^" ["-"] integer]   negative exponents only for unit constants
///   primary := integer | "w" | "q" | "A" | "h" | atom
///            | "T[" integer "](" expr ")" | "(" expr ")"
///   atom    := name ["[" state "," state "]"] ["@" integer]
///
/// q = w^-4, A = w^-2, h is the dual-number parameter. `x[..]` names the bigon arc when the
/// alphabet has no arc called x. Throws ParseError (with position) or AlphabetError.
NCPoly parse_expr(std::string_view text, const Presentation& p);

/// Scalar expression over `ring` (no generators), e.g. "2*w^3 - 1/2".
Scalar parse_scalar(std::string_view text, Ring ring);

/// Parses "a[+,-]", "x", "g[-,-]@1".
GeneratorId parse_generator(std::string_view text);

/// JSON presentation file: name, ring, at_one, max_lhs_length, weights, alphabet (generator names in
/// precedence order), rules (lhs word, rhs list of {coeff, word}).
std::string export_presentation(const Presentation& p);
/// Inverse of export_presentation; the result is validated and checked for confluence.
PresentationPtr import_presentation(std::string_view json_text);

}  // namespace skein
