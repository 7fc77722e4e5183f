#pragma once

#include <string>
#include <string_view>

#include "agroup/group.hpp"

namespace agroup::cli {

/// Grammar (whitespace ignored):
///
///   expr := cyclic(n)              C_n
///         | field(p, a)            additive group of F_{p^a}
///         | direct(expr, expr)     direct product
///         | scalar(p, a, m)        F_{p^a}^+ x| C_m, C_m acting by a unit of order m
///         | metacyclic(n, m, k)    C_n x| C_m, generator acting by x -> k x
///         | component(p, q, a)     F_{p^a}^+ x| C_q  (family factor H_1)
///         | pair(p, q, a, b)       H_1 x H_2 for the two-prime family component
///         | family(p, q, r, a, b)  the three-prime family group
///         | p,q,r,a,b              shorthand for family(p,q,r,a,b)
///
/// Throws Error(ParseError) on malformed input; construction errors propagate.
FiniteGroup parse_group(std::string_view text, const Limits& limits = {});

std::string grammar_help();

}  // namespace agroup::cli
