#pragma once

// Parser for the function-construction language:
//
//   expr  := table(pairs) | poly(INT) | free(INT; ints) | ci(INT; ints?)
//          | shift(expr, INT) | sum(expr, expr, ...) | scale(expr, INT)
//          | extend(expr)
//   pairs := INT:INT (, INT:INT)*      ints := INT (, INT)*
//
// Whitespace is ignored everywhere. `ci(n)` is accepted as a synonym of `ci(n;)`.

#include "hdepth/hilbert.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hdepth {

struct FunctionSpec {
  enum class Kind { Table, Poly, Free, CompleteIntersection, Shift, Sum, Scale, Extend };

  Kind kind = Kind::Table;
  std::size_t position = 0;              // offset of the constructor name in the source text
  std::vector<std::pair<long, Integer>> table;
  std::vector<long> ints;                // poly: {n}; free/ci: {n, args...}; shift/scale: {m} / {r}
  std::vector<FunctionSpec> children;
};

/// Throws ParseError (syntax) or Error(ElaborationError) for out-of-range arguments.
FunctionSpec parseSpec(std::string_view text);

/// Builds the Hilbert function; constructor failures surface as Error(ElaborationError).
HilbertFunction elaborate(const FunctionSpec& spec);

/// parseSpec followed by elaborate.
HilbertFunction parseFunction(std::string_view text);

/// Canonical source text; parseSpec(toString(s)) reproduces s up to positions.
std::string toString(const FunctionSpec& spec);

}  // namespace hdepth
