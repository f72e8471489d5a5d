#pragma once

#include "lhc/enveloping.hpp"
#include "lhc/liealg.hpp"
#include "lhc/report.hpp"
#include "lhc/rng.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace lhc {

// F-monomials are exponent vectors over the generators; negative entries
// are allowed only on invertible (group-like) generators.
using FElem = LinComb<Mono>;
using FTensor = LinComb<Mono2>;

struct HopfGenerator {
	std::string name;
	bool invertible = false;
	Rational epsilon;
	FTensor coproduct;
	FElem antipode;
};

class HopfAlgebraF
{
public:
	HopfAlgebraF() = default;
	explicit HopfAlgebraF(std::vector<HopfGenerator> gens);
	HopfAlgebraF(const HopfAlgebraF &o);
	HopfAlgebraF &operator=(const HopfAlgebraF &o);

	std::size_t ngens() const { return gens_.size(); }
	const std::vector<HopfGenerator> &generators() const { return gens_; }
	std::size_t index_of(const std::string &name) const;

	Mono unit_mono() const { return Mono(ngens(), 0); }
	FElem one() const { return FElem(unit_mono()); }
	FElem gen(std::size_t i, int e = 1) const;
	void validate(const Mono &m) const;

	FElem mul(const FElem &a, const FElem &b) const;
	FElem pow(const FElem &a, int e) const;
	FTensor coproduct(const Mono &m) const;
	FTensor coproduct(const FElem &f) const;
	// Iterated coproduct with the given number of legs (legs >= 1).
	LinComb<MonoN> coproduct_n(const FElem &f, std::size_t legs) const;
	Rational counit(const Mono &m) const;
	Rational counit(const FElem &f) const;
	FElem antipode(const Mono &m) const;
	FElem antipode(const FElem &f) const;

	// Total degree sum |e_i|, negatives only on invertible generators.
	std::vector<Mono> monomials_up_to(int degree) const;

	std::string format(const Mono &m) const;
	std::string format(const FElem &f) const;
	std::string format(const FTensor &t) const;

private:
	std::vector<HopfGenerator> gens_;
	mutable std::mutex mu_;
	mutable std::map<Mono, FTensor> delta_memo_;
};

FTensor mul_tensor(const HopfAlgebraF &F, const FTensor &a, const FTensor &b);

Report check_hopf_axioms_F(const HopfAlgebraF &F, int degree);

struct LieHopfDatum {
	LieAlgebra g1;
	HopfAlgebraF F;
	std::vector<std::vector<FElem>> action; // action[i][g] = X_i |> gen_g
	std::vector<std::vector<FElem>> coef;   // coef[i][j] = f_i^j, coaction X_i -> sum_j X_j (x) f_i^j
};

// H = F >< U(g1): (F-monomial, U-monomial).
using HMono = std::pair<Mono, Mono>;
using HElem = LinComb<HMono>;
using HTensor = LinComb<std::pair<HMono, HMono>>;
using UF = LinComb<Mono2>; // U(g1) (x) F: (U-monomial, F-monomial)

struct ModularPair {
	std::vector<Rational> delta; // character on the g1 basis
	FElem sigma;
};

class LieHopf
{
public:
	explicit LieHopf(LieHopfDatum d);

	const LieHopfDatum &datum() const { return d_; }
	const LieAlgebra &g() const { return d_.g1; }
	const HopfAlgebraF &F() const { return d_.F; }
	const Enveloping &U() const { return u_; }
	std::size_t dim() const { return d_.g1.dim(); }
	const FElem &coef(std::size_t i, std::size_t j) const { return d_.coef[i][j]; }

	// g1 and U(g1) acting on F by derivations; letters act right to left.
	FElem act(std::size_t i, const Mono &f) const;
	FElem act(std::size_t i, const FElem &f) const;
	FElem act(const Mono &u, const FElem &f) const;
	FElem act(const UElem &u, const FElem &f) const;

	// Right F-coaction on U(g1).
	UF coaction(const Mono &u) const;
	UF coaction(const UElem &u) const;
	// u<0> (x) u<1> (x) ... (x) u<k>: first entry of the key is the U leg.
	LinComb<std::pair<Mono, MonoN>> coaction_iter(const Mono &u, std::size_t k) const;

	// Bicrossed product Hopf algebra.
	HElem h_one() const { return HElem(HMono{d_.F.unit_mono(), u_.unit_mono()}); }
	HElem h_from_f(const FElem &f) const;
	HElem h_from_u(const UElem &u) const;
	HElem h_mul(const HMono &a, const HMono &b) const;
	HElem h_mul(const HElem &a, const HElem &b) const;
	HTensor h_coproduct(const HMono &h) const;
	HTensor h_coproduct(const HElem &h) const;
	LinComb<std::vector<HMono>> h_coproduct_n(const HElem &h, std::size_t legs) const;
	Rational h_counit(const HMono &h) const;
	Rational h_counit(const HElem &h) const;
	HElem h_antipode(const HMono &h) const;
	HElem h_antipode(const HElem &h) const;

	std::string format(const HMono &h) const;
	std::string format(const HElem &h) const;
	std::string format_uf(const UF &x) const;

private:
	LieHopfDatum d_;
	Enveloping u_;
	mutable std::mutex mu_;
	mutable std::map<std::pair<std::size_t, Mono>, FElem> act_memo_;
	mutable std::map<Mono, UF> coact_memo_;
	mutable std::map<std::pair<HMono, HMono>, HElem> mul_memo_;
	mutable std::map<HMono, HTensor> delta_memo_;
	mutable std::map<HMono, HElem> anti_memo_;
};

FElem determinant(const HopfAlgebraF &F, const std::vector<std::vector<FElem>> &m);
ModularPair canonical_mpi(const LieHopf &H);
Rational delta_u(const ModularPair &mp, const Mono &u);
Rational delta_h(const LieHopf &H, const ModularPair &mp, const HElem &h);
// S_delta(h) = delta(h(1)) S(h(2)).
HElem twisted_antipode(const LieHopf &H, const ModularPair &mp, const HElem &h);

Report check_lie_hopf(const LieHopf &H, int degree);
Report check_matched_pair_hopf(const LieHopf &H, int degree, int samples, std::uint64_t seed);
Report check_mpi(const LieHopf &H, const ModularPair &mp, int degree);

// Spanning sets used by the sampled checks.
std::vector<HMono> h_monomials_up_to(const LieHopf &H, int degree);
HElem random_h(const LieHopf &H, Rng &rng, int degree, int terms);

} // namespace lhc
