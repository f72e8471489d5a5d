#pragma once

#include "lhc/cyclic.hpp"

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace lhc {

// m (x) wedge (x) f^1 (x) ... (x) f^q; the wedge is a strictly increasing list of
// basis indices of g1 (or of the dual basis of g1*).
struct RedKey {
	std::size_t m = 0;
	std::vector<int> wedge;
	MonoN f;

	bool operator<(const RedKey &o) const { return std::tie(m, wedge, f) < std::tie(o.m, o.wedge, o.f); }
	bool operator==(const RedKey &o) const { return m == o.m && wedge == o.wedge && f == o.f; }
};
using RedChain = LinComb<RedKey>;

using WedgeF = LinComb<std::pair<std::vector<int>, Mono>>; // X^T (x) f
using FWedge = LinComb<std::pair<Mono, std::vector<int>>>; // f (x) theta^T

class Reduced
{
public:
	explicit Reduced(const Sayd &S) : S_(S), bi_(S) {}

	const Sayd &sayd() const { return S_; }
	const BiCyclic &bicyclic() const { return bi_; }
	std::size_t dim() const { return S_.hopf().dim(); }

	// X . (m (x) f) = X.m (x) f + m (x) X . f on the coefficient part; the wedge is kept.
	RedChain act_left(std::size_t i, const RedKey &k) const;
	// (m (x) f) <| X = delta(X) m (x) f - X . (m (x) f)
	RedChain act_twisted(std::size_t i, const RedKey &k) const;
	// (m (x) f) <| X = - X . (m (x) f)
	RedChain act_dual(std::size_t i, const RedKey &k) const;

	// Lie algebra homology boundary on M (x) wedge^p g (x) F^q, lowers p.
	RedChain boundary_g(const RedChain &c) const;
	// Lie algebra cohomology coboundary on M (x) wedge^p g* (x) F^q, raises p.
	RedChain coboundary_gstar(const RedChain &c) const;

	// X_{i1} ^ ... ^ X_{ip} -> X_{j1} ^ ... ^ X_{jp} (x) f_{i1}^{j1} ... f_{ip}^{jp}
	WedgeF wedge_coaction(const std::vector<int> &wedge) const;
	// theta^{i1} ^ ... -> f_{l1}^{i1} ... (x) theta^{l1} ^ ...
	FWedge dual_coaction(const std::vector<int> &wedge) const;
	// m (x) X^S -> m<0> (x) X^S<0> (x) sigma^-1 m<1> X^S<1>
	LinComb<RedKey> coaction_g(std::size_t m, const std::vector<int> &wedge) const;
	// m (x) theta^S -> m<0> (x) theta^S<0> (x) m<1> S(theta^S<-1>)
	LinComb<RedKey> coaction_gstar(std::size_t m, const std::vector<int> &wedge) const;

	// F direction on M (x) wedge g (x) F^q: b_F = ops.b and B_F = ops.B.
	CocyclicOps<RedKey> f_ops(int p, int leg_degree) const;
	// F direction on M (x) wedge g* (x) F^q.
	CocyclicOps<RedKey> dual_f_ops(int p, int leg_degree) const;
	RedChain b_F(const RedChain &c) const;
	RedChain B_F(const RedChain &c) const;
	RedChain tau_F(const RedChain &c) const;
	RedChain b_star_F(const RedChain &c) const;

	// m (x) X^1 ^ ... ^ X^p (x) f  ->  1/p! sum (-1)^s m (x) X^s(1) (x) ... (x) X^s(p) (x) f
	BiCochain antisymmetrize(const RedChain &c) const;

	// m (x) eta (x) f -> m (x) i(eta) w (x) f with w = X_1 ^ ... ^ X_m; the volume factor
	// of the dual top power is left implicit.
	RedChain poincare(const RedChain &c) const;
	RedChain poincare_inv(const RedChain &c) const;

	RedChain sample(Rng &rng, int p, int q, bool normalized, int leg_degree) const;
	std::string format(const RedChain &c, bool dual) const;

private:
	RedChain f_face(const RedKey &k, int i, bool dual) const;
	RedChain f_tau(const RedKey &k, bool dual) const;
	RedChain f_degeneracy(const RedKey &k, int j) const;

	const Sayd &S_;
	BiCyclic bi_;
};

// Contraction i(theta^{s1} ^ ... ^ theta^{sq}) of X_1 ^ ... ^ X_m: sign and remaining indices.
std::pair<int, std::vector<int>> contract_volume(std::size_t m, const std::vector<int> &s);

Report check_reduced(const Reduced &R, int p_max, int q_max, int samples, std::uint64_t seed, int leg_degree);

// Truncated total cohomology of the dual bicomplex when F has no generators.
struct TotalCohomology {
	std::vector<std::size_t> dims; // total degrees 0..max_degree
	std::size_t even = 0, odd = 0;
};
TotalCohomology dual_total_cohomology_trivial_f(const Reduced &R, int max_degree);

} // namespace lhc
