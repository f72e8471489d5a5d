#pragma once

#include "lhc/enveloping.hpp"
#include "lhc/liealg.hpp"
#include "lhc/report.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>

namespace lhc {

// zeta_a <| X_i = right[a][i] (over g2), zeta_a |> X_i = left[a][i] (over g1).
struct MatchedPair {
	LieAlgebra g1, g2;
	std::vector<std::vector<LieVec>> right;
	std::vector<std::vector<LieVec>> left;

	MatchedPair() = default;
	MatchedPair(LieAlgebra a, LieAlgebra b);

	LieVec act_right(const LieVec &zeta, const LieVec &x) const; // zeta <| X in g2
	LieVec act_left(const LieVec &zeta, const LieVec &x) const;  // zeta |> X in g1
};

Report check_matched_pair(const MatchedPair &mp);
// Basis: g1 generators first, then g2.
LieAlgebra double_crossed_sum(const MatchedPair &mp);
MatchedPair decompose(const LieAlgebra &a, const std::vector<int> &part1, const std::vector<int> &part2);

// Enveloping algebras of g1, g2 and a = g1 |x| g2 together with Psi.
class MatchedPairAlgebra
{
public:
	explicit MatchedPairAlgebra(MatchedPair mp);

	const MatchedPair &pair() const { return mp_; }
	const Enveloping &U1() const { return u1_; }
	const Enveloping &U2() const { return u2_; }
	const Enveloping &Ua() const { return ua_; }

	Mono embed1(const Mono &u) const;
	Mono embed2(const Mono &v) const;
	Mono2 split(const Mono &a) const;

	// Psi(v (x) u) in U(g1) (x) U(g2).
	LinComb<Mono2> psi(const Mono &v, const Mono &u) const;
	UElem left_act(const Mono &v, const Mono &u) const;  // v |> u in U(g1)
	UElem right_act(const Mono &v, const Mono &u) const; // v <| u in U(g2)
	UElem left_act(const UElem &v, const UElem &u) const;
	UElem right_act(const UElem &v, const UElem &u) const;
	Rational matrix_coefficient(std::size_t i, std::size_t j, const Mono &v) const;

private:
	MatchedPair mp_;
	Enveloping u1_, u2_, ua_;
	mutable std::mutex mu_;
	mutable std::map<Mono2, LinComb<Mono2>> memo_;
};

// mutual-1..3 and the matrix-coefficient coproduct law on sampled monomials.
Report check_mutual_pair(const MatchedPairAlgebra &A, int depth, int samples, std::uint64_t seed);

} // namespace lhc
