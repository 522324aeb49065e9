#pragma once

// Rule tables for user-defined multiplicative functions.
//
//   # sum of squares of divisors
//   name sigma2
//   *  = (p^(2*a + 2) - 1) / (p^2 - 1)
//   2  = 5^a                      # override for p = 2
//
// A `*` row is the default rule; a row keyed by a prime overrides it for that
// prime. Expressions use the variables p and a (the exponent), unsigned
// integer literals, + - * / ^ and parentheses. ^ binds tightest and is
// right-associative. Evaluation is exact: subtraction below zero, inexact
// division, overflow and a result of 0 all raise ArithmeticError.

#include <cstdint>
#include <string>
#include <string_view>

#include "coto/arith.hpp"

namespace coto {

/// Throws PreconditionError with a line number on malformed input.
MultiplicativeFunctionSpec parse_rule_table(std::string_view text);

MultiplicativeFunctionSpec load_rule_file(const std::string& path);

/// A built-in identifier (id, phi, sigma, tau) or "file:PATH".
MultiplicativeFunctionSpec resolve_function(const std::string& name_or_file);

}  // namespace coto
