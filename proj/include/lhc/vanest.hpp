#pragma once

#include "lhc/fixture.hpp"
#include "lhc/reduced.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lhc {

// Hopf pairing laws, the balanced law <v, u |> f> = <v <| u, f> and the coaction
// compatibility u<0> <v, u<1>> = v |> u on monomials of degree <= degree.
Report check_pairing(const Pairing &P, const LieHopf &H, int degree);

// Raised when h fails the hypotheses of the relative bicomplex.
struct LeviError : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

// Cochains of the relative bicomplex M (x) wedge^p g1* (x) wedge^q l*, l = g2/h, stored as
// exterior cochains on a = g1 |x| g2 (g1 basis first); p counts the g1 indices of a wedge.
using RelChain = ExteriorCochain;
using Bigraded = std::map<std::pair<int, int>, RelChain>;

class VanEst
{
public:
	// levi: indices of h in the g2 basis.  Throws LeviError on violated hypotheses.
	VanEst(const Reduced &R, const MatchedPairAlgebra &A, const Pairing &P, std::vector<int> levi);

	const Reduced &reduced() const { return R_; }
	const MatchedPairAlgebra &algebra() const { return A_; }
	const Pairing &pairing() const { return P_; }
	const LieAlgebra &a() const { return a_; }
	const LieModule &a_module() const { return rho_a_; }
	std::size_t n1() const { return n1_; }
	const std::vector<int> &h() const { return h_; }         // indices in a
	const std::vector<int> &l() const { return l_; }         // indices in g2
	const std::vector<int> &complement() const { return comp_; } // a indices outside h

	// theta(f^1 (x) ... (x) f^q)(v^1 (x) ... (x) v^q) = prod <f^i, v^i>
	Rational theta(const MonoN &f, const MonoN &v) const;
	Rational theta(const LinComb<MonoN> &f, const LinComb<MonoN> &v) const;

	// Right action of U(g1) on U(g2)^{(x)q}.
	LinComb<MonoN> star(const MonoN &v, const Mono &u) const;
	LinComb<MonoN> star(const LinComb<MonoN> &v, const UElem &u) const;

	// g1 direction: CE of g1 with coefficients in M (x) wedge^q l*.
	RelChain up(const RelChain &c) const;
	// g2 direction: relative CE of (g2, h) with coefficients in M (x) wedge^p g1*, in the
	// evaluation convention d(v)(xi) = xi . v.
	RelChain right(const RelChain &c) const;
	// up + (-1)^p right
	RelChain total(const RelChain &c) const;
	// CE coboundary of a on h-basic cochains.
	RelChain coboundary_a(const RelChain &c) const;

	// omega -> omega(Z_1, ..., Z_p, zeta_1, ..., zeta_q) by bidegree, and the shuffle inverse.
	Bigraded natural(const RelChain &omega) const;
	RelChain natural_inv(const Bigraded &parts) const;

	// Projection onto h-invariants along the images of the h action.
	RelChain project_invariant(const RelChain &c) const;
	bool is_invariant(const RelChain &c) const;

	// m (x) theta^S (x) f  ->  pi^0 (m theta^S (x) sum_s (-1)^s <xi_s(1), f^1> ... <xi_s(q), f^q>)
	RelChain van_est(const RedChain &c) const;

	// Random h-invariant cochain of total degree s.
	RelChain sample_invariant(Rng &rng, int s) const;
	std::string format(const RelChain &c) const;

private:
	const Reduced &R_;
	const MatchedPairAlgebra &A_;
	const Pairing &P_;
	std::size_t n1_ = 0;
	LieAlgebra a_;
	LieModule rho_a_; // left a-module from the g1 and g2 actions on M
	std::vector<int> levi_, h_, l_, comp_;
	std::vector<ExteriorBasis> spaces_;
	std::vector<SubspaceBasis> inv_;
	std::vector<SparseMatrix> proj_;
};

// Chain-map identities of the van Est map and the relative bicomplex on seeded samples.
Report check_van_est(const VanEst &V, int p_max, int q_max, int samples, std::uint64_t seed, int leg_degree);

// theta is a chain map, star is a right action and theta is equivariant.
Report check_theta_star(const VanEst &V, int q_max, int degree, int samples, std::uint64_t seed);

struct RelativeCohomology {
	LieAlgebra a;
	std::vector<std::size_t> dims;				 // degrees 0..max_degree
	std::vector<std::vector<ExteriorCochain>> representatives; // cocycles spanning each H^i
};

// H^i(a, h, M) for i = 0..max_degree with a = g1 |x| g2 and the a-module assembled from M.
RelativeCohomology relative_cohomology(const MatchedPair &mp, const InducedModule &M, const std::vector<int> &levi,
				       int max_degree);

// Hypotheses on h: subalgebra of g2, g1-invariant and acting on g1 by derivations.
void check_levi(const MatchedPair &mp, const std::vector<int> &levi);

} // namespace lhc
