#pragma once

#include "lhc/hopf.hpp"
#include "lhc/matched.hpp"

#include <map>
#include <mutex>

namespace lhc {

// Base values of <gen, v> for v in U(g2).
struct PairingSpec {
	enum class Kind { MatrixCoefficient, Character, Primitive };
	Kind kind = Kind::MatrixCoefficient;
	std::size_t i = 0, j = 0;     // f_i^j for matrix coefficients
	std::vector<Rational> values; // per g2 basis element otherwise
};

// Hopf pairing F x U(g2) -> Q extended from generator data by
// <fg, v> = <f, v(1)><g, v(2)> and <g^-1, v> = <g, S(v)>.
class Pairing
{
public:
	Pairing(const HopfAlgebraF &F, const MatchedPairAlgebra &A, std::vector<PairingSpec> specs);

	const HopfAlgebraF &F() const { return F_; }
	const MatchedPairAlgebra &algebra() const { return A_; }
	const std::vector<PairingSpec> &specs() const { return specs_; }

	Rational eval(const Mono &f, const Mono &v) const;
	Rational eval(const FElem &f, const UElem &v) const;
	Rational eval_generator(std::size_t g, const Mono &v) const;

private:
	const HopfAlgebraF &F_;
	const MatchedPairAlgebra &A_;
	std::vector<PairingSpec> specs_;
	mutable std::mutex mu_;
	mutable std::map<Mono2, Rational> memo_;
};

} // namespace lhc
