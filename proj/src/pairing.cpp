#include "lhc/pairing.hpp"

#include <stdexcept>

namespace lhc {

Pairing::Pairing(const HopfAlgebraF &F, const MatchedPairAlgebra &A, std::vector<PairingSpec> specs)
    : F_(F), A_(A), specs_(std::move(specs))
{
	if (specs_.size() != F_.ngens())
		throw std::invalid_argument("pairing must give one entry per F generator");
	const std::size_t n1 = A_.U1().ngens(), n2 = A_.U2().ngens();
	for (const auto &s : specs_) {
		if (s.kind == PairingSpec::Kind::MatrixCoefficient && (s.i >= n1 || s.j >= n1))
			throw std::invalid_argument("matrix coefficient index out of range");
		if (s.kind != PairingSpec::Kind::MatrixCoefficient && s.values.size() != n2)
			throw std::invalid_argument("pairing values must cover the g2 basis");
	}
}

Rational Pairing::eval_generator(std::size_t g, const Mono &v) const
{
	const auto &s = specs_[g];
	switch (s.kind) {
	case PairingSpec::Kind::MatrixCoefficient:
		return A_.matrix_coefficient(s.i, s.j, v);
	case PairingSpec::Kind::Character: {
		Rational r = 1;
		for (std::size_t a = 0; a < v.size(); ++a)
			for (int k = 0; k < v[a]; ++k)
				r *= s.values[a];
		return r;
	}
	case PairingSpec::Kind::Primitive:
		if (degree(v) != 1)
			return 0;
		for (std::size_t a = 0; a < v.size(); ++a)
			if (v[a] == 1)
				return s.values[a];
	}
	return 0;
}

Rational Pairing::eval(const Mono &f, const Mono &v) const
{
	const auto &U2 = A_.U2();
	if (degree(f) == 0)
		return U2.counit(v);
	{
		std::lock_guard lk(mu_);
		auto it = memo_.find({f, v});
		if (it != memo_.end())
			return it->second;
	}
	std::size_t g = 0;
	while (f[g] == 0)
		++g;
	Mono rest = f;
	Rational r = 0;
	if (f[g] > 0) {
		--rest[g];
		for (const auto &[legs, c] : U2.coproduct(v)) {
			Rational a = eval_generator(g, legs.first);
			if (!is_zero(a))
				r += c * a * eval(rest, legs.second);
		}
	} else {
		++rest[g];
		for (const auto &[legs, c] : U2.coproduct(v)) {
			Rational a = 0;
			for (const auto &[m, d] : U2.antipode(legs.first))
				a += d * eval_generator(g, m);
			if (!is_zero(a))
				r += c * a * eval(rest, legs.second);
		}
	}
	std::lock_guard lk(mu_);
	memo_.emplace(Mono2{f, v}, r);
	return r;
}

Rational Pairing::eval(const FElem &f, const UElem &v) const
{
	Rational r = 0;
	for (const auto &[mf, cf] : f)
		for (const auto &[mv, cv] : v)
			r += cf * cv * eval(mf, mv);
	return r;
}

} // namespace lhc
