#pragma once

// Expression language for the `cardinal eval` command:
//   expr  := INT | fin(INT) | aleph(ORD) | pow(expr, expr) | cf(expr) | succ(expr)
//          | complements(shape)
//   shape := shape(key=value, ...)  keys: full=INT, kappa=expr, lambda=expr, trivial=0|1

#include <string_view>

#include "pilat/cardinal.hpp"

namespace pilat {

/// Throws ParseError on bad syntax; DomainError when an argument is undetermined by the model.
CardinalRange evaluate_expression(std::string_view text, const ContinuumModel& model);

/// Parses the shape(...) form on its own.
PartitionShape parse_shape(std::string_view text, const ContinuumModel& model);

}  // namespace pilat
