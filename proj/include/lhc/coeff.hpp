#pragma once

#include "lhc/hopf.hpp"
#include "lhc/matched.hpp"
#include "lhc/pairing.hpp"

#include <map>
#include <mutex>
#include <optional>

namespace lhc {

using MVec = SparseVec;
using HM = std::pair<HMono, std::size_t>; // h (x) m_b
using MH = std::pair<std::size_t, HMono>; // m_b (x) h

// Induced (g1, F)-module: left g1 action and right F-coaction
// m_a -> sum_b m_b (x) coaction[b][a].
struct InducedModule {
	std::string name;
	std::vector<std::string> basis;
	LieModule g1_action;
	std::vector<std::vector<FElem>> coaction;
	std::optional<LieModule> g2_action;

	std::size_t dim() const { return basis.size(); }
	static InducedModule trivial(const LieHopf &H, std::size_t g2_dim);
};

// Left action of U(g1) (or U(g2)) through a left Lie module; letters act right to left.
MVec module_act(const LieModule &rho, const Mono &u, const MVec &m);
MVec module_act(const LieModule &rho, const UElem &u, const MVec &m);

// Module on g1 |x| g2 (g1 basis first) assembled from both actions.
LieModule combined_module(const InducedModule &M, const MatchedPair &mp);

Report check_induced_module(const LieHopf &H, const InducedModule &M, const MatchedPairAlgebra *A,
			    const Pairing *pairing, int degree);

// ^sigma M_delta: right H-module, left H-comodule.
class Sayd
{
public:
	Sayd(const LieHopf &H, const InducedModule &M, ModularPair mp);

	const LieHopf &hopf() const { return H_; }
	const InducedModule &module() const { return M_; }
	const ModularPair &mpi() const { return mp_; }
	std::size_t dim() const { return M_.dim(); }

	// m <| (f >< u) = eps(f) delta(u(2)) S(u(1)) . m
	MVec act(std::size_t a, const HMono &h) const;
	MVec act(const MVec &m, const HElem &h) const;
	// m -> sigma S(m<1>) >< 1 (x) m<0>
	LinComb<HM> coaction(std::size_t a) const;

	// Left-right YD structure: (f >< u) m = eps(f) u m,  m -> m<0> (x) m<1> >< 1.
	MVec yd_act(const HMono &h, const MVec &m) const;
	LinComb<MH> yd_coaction(std::size_t a) const;

private:
	const LieHopf &H_;
	const InducedModule &M_;
	ModularPair mp_;
	mutable std::mutex mu_;
	mutable std::map<std::pair<std::size_t, HMono>, MVec> act_memo_;
};

Report check_yd(const Sayd &S, int degree, int samples, std::uint64_t seed);
Report check_sayd(const Sayd &S, int degree, int samples, std::uint64_t seed);

std::string format_mvec(const InducedModule &M, const MVec &v);

} // namespace lhc
