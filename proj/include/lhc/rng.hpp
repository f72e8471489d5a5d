#pragma once

#include "lhc/rational.hpp"

#include <cstdint>
#include <random>

namespace lhc {

// Seeded generator with platform-independent bounded draws.
class Rng
{
public:
	explicit Rng(std::uint64_t seed) : engine_(seed) {}

	std::uint64_t next() { return engine_(); }
	std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
	int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1))); }
	bool coin() { return (engine_() & 1U) != 0; }

	// Nonzero rational with small numerator and denominator.
	Rational small_rational()
	{
		int num = range(1, 3) * (coin() ? 1 : -1);
		int den = range(1, 2);
		Rational r(num, den);
		r.canonicalize();
		return r;
	}

private:
	std::mt19937_64 engine_;
};

} // namespace lhc
