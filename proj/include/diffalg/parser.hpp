#ifndef DIFFALG_PARSER_HPP
#define DIFFALG_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "diffalg/polynomial.hpp"

namespace diffalg {

/// Variable names used by the expression grammar for a given ambient:
/// "z" for one variable, "x","y" for two, "z1".."zn" otherwise.
std::vector<std::string> default_names(const Ambient& amb);

/// Parses the expression grammar
///
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := ['-'] factor ('*' factor)*
///   factor   := primary ('^' nat)*
///   primary  := rational | var | '(' expr ')'
///   rational := int ('/' posint)?
///   var      := name ('_(' nat (',' nat)* ')')?
///
/// A bare name denotes the zero derivation operator; a parenthesised
/// multi-index must have exactly m entries. Throws ParseError with a byte
/// position on rejection.
DiffPolynomial parse_expression(std::string_view text, const Ambient& amb);
DiffPolynomial parse_expression(std::string_view text, const Ambient& amb,
                                const std::vector<std::string>& names,
                                const Limits& lim = Limits{});

/// Canonical deterministic form: terms in descending monomial order,
/// coefficients in lowest terms, factors largest-first. Output re-parses to
/// the same polynomial.
std::string to_string(const DiffPolynomial& p);
std::string to_string(const DiffPolynomial& p, const std::vector<std::string>& names);
std::string to_string(const Monomial& mono, const std::vector<std::string>& names);

}  // namespace diffalg

#endif
