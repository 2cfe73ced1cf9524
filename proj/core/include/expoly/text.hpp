#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "expoly/exppoly.hpp"
#include "expoly/gridlab.hpp"

namespace expoly {

/// Parses an exponential polynomial written with variables t1..td, e.g.
/// `(t1^2 - 1/2) * exp(2, -i) + 3*exp(1/2, 1)`.
///
/// Grammar: sums and products of numbers (`3`, `-1/2`, `2i`, `1/2i`, `i`),
/// variables `t<k>`, `exp(c_1, ..., c_d)` with constant arguments, parentheses,
/// non-negative integer powers `^k` and division by nonzero constants. The
/// dimension is the largest variable index or exp arity unless `dim` is given.
/// Throws ParseError, MalformedInput or DimensionMismatch.
ExpPoly parse_expr(std::string_view text, std::optional<std::size_t> dim = std::nullopt);

/// A constant expression such as `3`, `-1/2`, `2+3i` or `(1-3/4i)`.
Scalar parse_scalar(std::string_view text);

/// `lo..hi` or `lo..hi,lo..hi,...`; throws ParseError.
GridBox parse_box(std::string_view text);

}  // namespace expoly
