#pragma once

#include "lhc/liealg.hpp"
#include "lhc/lincomb.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace lhc {

using UElem = LinComb<Mono>;
using Mono2 = std::pair<Mono, Mono>;
using MonoN = std::vector<Mono>;

// U(g) in the PBW basis of the ordered generators X_0 < X_1 < ...
class Enveloping
{
public:
	Enveloping() = default;
	explicit Enveloping(LieAlgebra g);
	Enveloping(const Enveloping &o) : g_(o.g_) {}
	Enveloping &operator=(const Enveloping &o)
	{
		g_ = o.g_;
		std::lock_guard lk(mu_);
		memo_.clear();
		return *this;
	}

	const LieAlgebra &algebra() const { return g_; }
	std::size_t ngens() const { return g_.dim(); }

	Mono unit_mono() const { return Mono(ngens(), 0); }
	UElem one() const { return UElem(unit_mono()); }
	UElem gen(std::size_t i) const;
	UElem from_lie(const LieVec &v) const;

	UElem mul(const UElem &a, const UElem &b) const;
	UElem mul(const Mono &a, const Mono &b) const;
	UElem mul_gen(const Mono &m, int gen) const;

	LinComb<Mono2> coproduct(const Mono &m) const;
	LinComb<MonoN> coproduct_n(const Mono &m, std::size_t legs) const;
	Rational counit(const Mono &m) const;
	Rational counit(const UElem &u) const;
	UElem antipode(const Mono &m) const;
	UElem antipode(const UElem &u) const;

	std::vector<Mono> monomials_up_to(int degree) const;
	std::string format(const Mono &m) const;
	std::string format(const UElem &u) const;

private:
	LieAlgebra g_;
	mutable std::mutex mu_;
	mutable std::map<std::pair<Mono, int>, UElem> memo_;
};

int degree(const Mono &m);
std::vector<int> word_of(const Mono &m);
std::string format_mono(const Mono &m, const std::vector<std::string> &names);
// Splits every exponent into `legs` parts with multinomial weights.
LinComb<MonoN> split_legs(const Mono &m, std::size_t legs);

} // namespace lhc
