#pragma once

#include <string_view>

#include "binsum/ore.hpp"

namespace binsum {

/// Parses an element of K[x]<E> in the strict input grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := 'E' | 'n' | 'x' | rational | '(' expr ')' | '-' factor
/// Whitespace is insignificant; implicit multiplication and '/' (outside
/// rational literals like 1/2) are rejected, as are negative exponents.
/// The result is normalized to sum_j p_j(n) E^j purely by the commutation
/// rule E p(n) = p(n+1) E. Throws ParseError with the offending position.
OreOp parse_operator(std::string_view text);

/// Extended grammar for operators in Q(v)<E, E^-1> (reduction outputs, gcrd
/// inputs): additionally allows '/' by an E-free subexpression, 'k' as the
/// variable symbol, and parenthesized negative exponents on E ("E^(-1)").
/// The variable is autodetected ('k' vs 'n'/'x'; `fallback` when none occurs);
/// mixing both letters is an error.
OreOp parse_rational_operator(std::string_view text, Var fallback = Var::K);

}  // namespace binsum
