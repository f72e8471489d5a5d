#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace lhc {

using Rational = mpq_class;

// Accepts "p", "p/q", "-p/q" with optional surrounding blanks; result is canonical.
Rational parse_rational(const std::string &text);
std::string to_string(const Rational &r);
std::size_t bit_size(const Rational &r);

inline bool is_zero(const Rational &r) { return sgn(r) == 0; }

} // namespace lhc
