#pragma once

#include "lhc/lincomb.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lhc {

struct ExprError : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

// Polynomial expressions over named generators:
//   expr := term (('+'|'-') term)*,  term := factor ('*' factor)*,
//   factor := rational | name ['^' int] | '(' expr ')' ['^' int]
// Products are formed with `mul`, so noncommutative targets are supported.
struct ExprAlgebra {
	std::vector<std::string> names;
	std::function<LinComb<Mono>(const LinComb<Mono> &, const LinComb<Mono> &)> mul;
	std::function<bool(std::size_t)> invertible; // may be empty
};

LinComb<Mono> parse_expr(const ExprAlgebra &alg, const std::string &text);

} // namespace lhc
