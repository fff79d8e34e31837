#pragma once

#include <string>

#include "binsum/ore.hpp"

namespace binsum {

enum class PrintStyle { Text, Json, Latexish };

/// Tight canonical rendering in descending powers, e.g. "2*k^2-k+1/3".
std::string poly_str(const Poly& p, char var);

/// Canonical coefficient rendering: polynomial coefficients use rational
/// literals; proper fractions render as "(num)/(den)" with an integer-
/// primitive denominator and any residual scalar factored out in front,
/// e.g. "(k+1)/(2*(2*k+1))".
std::string ratfun_str(const RatFun& f, char var);

/// Deterministic rendering in descending powers of E. The Text style
/// round-trips through the parsers (parse_operator for polynomial-coefficient
/// operators without negative exponents, parse_rational_operator otherwise).
std::string print_operator(const OreOp& op, PrintStyle style = PrintStyle::Text);

}  // namespace binsum
