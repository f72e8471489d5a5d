#include "lhc/coeff.hpp"

#include <stdexcept>

namespace lhc {

InducedModule InducedModule::trivial(const LieHopf &H, std::size_t g2_dim)
{
	InducedModule M;
	M.name = "trivial";
	M.basis = {"1"};
	M.g1_action = LieModule::trivial(H.dim(), 1, Side::Left);
	M.coaction = {{H.F().one()}};
	M.g2_action = LieModule::trivial(g2_dim, 1, Side::Left);
	return M;
}

MVec module_act(const LieModule &rho, const Mono &u, const MVec &m)
{
	auto w = word_of(u);
	MVec cur = m;
	for (auto it = w.rbegin(); it != w.rend() && !cur.empty(); ++it)
		cur = rho.rho[static_cast<std::size_t>(*it)].apply(cur);
	return cur;
}

MVec module_act(const LieModule &rho, const UElem &u, const MVec &m)
{
	MVec out;
	for (const auto &[mono, c] : u)
		axpy(out, c, module_act(rho, mono, m));
	return out;
}

LieModule combined_module(const InducedModule &M, const MatchedPair &mp)
{
	if (!M.g2_action)
		throw std::invalid_argument("module " + M.name + " has no g2 action");
	LieModule out;
	out.dim = M.dim();
	out.side = Side::Left;
	for (const auto &r : M.g1_action.rho)
		out.rho.push_back(r);
	for (const auto &r : M.g2_action->rho)
		out.rho.push_back(r);
	if (out.rho.size() != mp.g1.dim() + mp.g2.dim())
		throw std::invalid_argument("module action does not match the double crossed sum");
	return out;
}

std::string format_mvec(const InducedModule &M, const MVec &v)
{
	LinComb<std::size_t> lc;
	for (const auto &[i, c] : v)
		lc.add(i, c);
	return format_lincomb<std::size_t>(lc, [&](const std::size_t &i) { return M.basis[i]; });
}

namespace {

MVec unit_vec(std::size_t a) { return MVec{{a, Rational(1)}}; }

// Module vector with F coefficients, keyed (b, F-monomial).
using MF = LinComb<std::pair<std::size_t, Mono>>;

MF coact(const InducedModule &M, const MVec &m)
{
	MF out;
	for (const auto &[a, c] : m)
		for (std::size_t b = 0; b < M.dim(); ++b)
			for (const auto &[f, d] : M.coaction[b][a])
				out.add({b, f}, c * d);
	return out;
}

std::string format_mf(const LieHopf &H, const InducedModule &M, const MF &x)
{
	return format_lincomb<std::pair<std::size_t, Mono>>(
	    x, [&](const std::pair<std::size_t, Mono> &k) { return M.basis[k.first] + "(x)" + H.F().format(k.second); });
}

} // namespace

Report check_induced_module(const LieHopf &H, const InducedModule &M, const MatchedPairAlgebra *A,
			    const Pairing *pairing, int deg)
{
	Report rep;
	const auto &F = H.F();
	const std::size_t n = H.dim(), d = M.dim();
	if (M.g1_action.dim != d || M.g1_action.rho.size() != n || M.coaction.size() != d)
		throw std::invalid_argument("module " + M.name + " has inconsistent dimensions");
	rep.merge(check_module(H.g(), M.g1_action));

	for (std::size_t a = 0; a < d; ++a)
		for (std::size_t k = 0; k < d; ++k) {
			std::string w = M.basis[k] + ", " + M.basis[a];
			FTensor l = F.coproduct(M.coaction[k][a]), r;
			for (std::size_t b = 0; b < d; ++b)
				r += tensor(M.coaction[k][b], M.coaction[b][a]);
			rep.expect_equal("M-comodule", "Delta(c_k^a) = sum_b c_k^b (x) c_b^a", l, r, w, F.format(l),
					 F.format(r));
			Rational e = F.counit(M.coaction[k][a]), want = k == a ? 1 : 0;
			rep.expect_equal("M-comodule", "eps(c_k^a) = delta_k^a", e, want, w, to_string(e), to_string(want));
		}

	// nabla(X . m) = X<0> . m<0> (x) X<1> m<1> + m<0> (x) X |> m<1>
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t a = 0; a < d; ++a) {
			MF l = coact(M, M.g1_action.rho[i].apply(unit_vec(a))), r;
			for (std::size_t b = 0; b < d; ++b) {
				const FElem &cba = M.coaction[b][a];
				if (cba.empty())
					continue;
				for (std::size_t j = 0; j < n; ++j) {
					if (H.coef(i, j).empty())
						continue;
					FElem f = F.mul(H.coef(i, j), cba);
					for (const auto &[bb, c] : M.g1_action.rho[j].apply(unit_vec(b)))
						for (const auto &[fm, fc] : f)
							r.add({bb, fm}, c * fc);
				}
				for (const auto &[fm, fc] : H.act(i, cba))
					r.add({b, fm}, fc);
			}
			rep.expect_equal("induced", "nabla(X . m) = X . nabla(m)", l, r,
					 H.g().names()[i] + ", " + M.basis[a], format_mf(H, M, l), format_mf(H, M, r));
		}

	if (!M.g2_action || A == nullptr)
		return rep;
	const auto &mp = A->pair();
	const auto &rho2 = *M.g2_action;
	if (rho2.dim != d || rho2.rho.size() != mp.g2.dim())
		throw std::invalid_argument("module " + M.name + " has inconsistent g2 action");

	if (pairing != nullptr) {
		for (const Mono &v : A->U2().monomials_up_to(deg))
			for (std::size_t a = 0; a < d; ++a) {
				MVec l = module_act(rho2, v, unit_vec(a)), r;
				for (std::size_t b = 0; b < d; ++b) {
					Rational p = pairing->eval(M.coaction[b][a], UElem(v));
					if (!is_zero(p))
						axpy(r, p, unit_vec(b));
				}
				rep.expect_equal("pairing-consistency", "v . m = <m<1>, v> m<0>", l, r,
						 "v=" + A->U2().format(v) + ", m=" + M.basis[a], format_mvec(M, l),
						 format_mvec(M, r));
			}
	}

	// zeta.(X.m) - X.(zeta.m) = (zeta |> X).m + (zeta <| X).m
	for (std::size_t z = 0; z < mp.g2.dim(); ++z)
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t a = 0; a < d; ++a) {
				MVec m = unit_vec(a);
				MVec l = rho2.rho[z].apply(M.g1_action.rho[i].apply(m));
				axpy(l, -1, M.g1_action.rho[i].apply(rho2.rho[z].apply(m)));
				MVec r;
				for (const auto &[k, c] : mp.left[z][i])
					axpy(r, c, M.g1_action.rho[k].apply(m));
				for (const auto &[k, c] : mp.right[z][i])
					axpy(r, c, rho2.rho[k].apply(m));
				rep.expect_equal("module-compatibility",
						 "zeta.(X.m) - X.(zeta.m) = (zeta |> X).m + (zeta <| X).m", l, r,
						 mp.g2.names()[z] + ", " + mp.g1.names()[i] + ", " + M.basis[a],
						 format_mvec(M, l), format_mvec(M, r));
			}
	return rep;
}

Sayd::Sayd(const LieHopf &H, const InducedModule &M, ModularPair mp) : H_(H), M_(M), mp_(std::move(mp)) {}

MVec Sayd::act(std::size_t a, const HMono &h) const
{
	{
		std::lock_guard lk(mu_);
		auto it = act_memo_.find({a, h});
		if (it != act_memo_.end())
			return it->second;
	}
	MVec out;
	Rational ef = H_.F().counit(h.first);
	if (!is_zero(ef)) {
		const auto &U = H_.U();
		for (const auto &[legs, c] : U.coproduct(h.second)) {
			Rational d = delta_u(mp_, legs.second);
			if (is_zero(d))
				continue;
			axpy(out, ef * c * d, module_act(M_.g1_action, U.antipode(legs.first), unit_vec(a)));
		}
	}
	std::lock_guard lk(mu_);
	act_memo_.emplace(std::make_pair(a, h), out);
	return out;
}

MVec Sayd::act(const MVec &m, const HElem &h) const
{
	MVec out;
	for (const auto &[a, c] : m)
		for (const auto &[hm, d] : h)
			axpy(out, c * d, act(a, hm));
	return out;
}

LinComb<HM> Sayd::coaction(std::size_t a) const
{
	const auto &F = H_.F();
	LinComb<HM> out;
	for (std::size_t b = 0; b < dim(); ++b) {
		const FElem &c = M_.coaction[b][a];
		if (c.empty())
			continue;
		for (const auto &[f, v] : F.mul(mp_.sigma, F.antipode(c)))
			out.add({HMono{f, H_.U().unit_mono()}, b}, v);
	}
	return out;
}

MVec Sayd::yd_act(const HMono &h, const MVec &m) const
{
	Rational ef = H_.F().counit(h.first);
	if (is_zero(ef))
		return {};
	MVec out;
	axpy(out, ef, module_act(M_.g1_action, h.second, m));
	return out;
}

LinComb<MH> Sayd::yd_coaction(std::size_t a) const
{
	LinComb<MH> out;
	for (std::size_t b = 0; b < dim(); ++b)
		for (const auto &[f, v] : M_.coaction[b][a])
			out.add({b, HMono{f, H_.U().unit_mono()}}, v);
	return out;
}

namespace {

std::vector<HElem> test_elements(const LieHopf &H, int deg, int samples, std::uint64_t seed)
{
	std::vector<HElem> out;
	for (const auto &m : h_monomials_up_to(H, deg))
		out.emplace_back(m);
	Rng rng(seed);
	for (int s = 0; s < samples; ++s)
		out.push_back(random_h(H, rng, deg, 3));
	return out;
}

template <class K> std::string fmt_pairs(const LinComb<K> &x, const std::function<std::string(const K &)> &f)
{
	return format_lincomb<K>(x, f);
}

} // namespace

Report check_yd(const Sayd &S, int deg, int samples, std::uint64_t seed)
{
	Report rep;
	const auto &H = S.hopf();
	const auto &M = S.module();
	std::function<std::string(const MH &)> key = [&](const MH &k) {
		return M.basis[k.first] + "(x)(" + H.format(k.second) + ")";
	};
	for (const HElem &h : test_elements(H, deg, samples, seed))
		for (std::size_t a = 0; a < S.dim(); ++a) {
			// (h(2) m)<0> (x) (h(2) m)<1> h(1) = h(1) m<0> (x) h(2) m<1>
			LinComb<MH> l, r;
			for (const auto &[pr, c] : H.h_coproduct(h)) {
				MVec hm = S.yd_act(pr.second, unit_vec(a));
				for (const auto &[b, cb] : hm)
					for (const auto &[co, cc] : S.yd_coaction(b))
						for (const auto &[x, cx] : H.h_mul(co.second, pr.first))
							l.add({co.first, x}, c * cb * cc * cx);
				for (const auto &[co, cc] : S.yd_coaction(a)) {
					MVec left = S.yd_act(pr.first, unit_vec(co.first));
					HElem right = H.h_mul(pr.second, co.second);
					for (const auto &[b, cb] : left)
						for (const auto &[x, cx] : right)
							r.add({b, x}, c * cc * cb * cx);
				}
			}
			rep.expect_equal("yd", "(h(2) m)<0> (x) (h(2) m)<1> h(1) = h(1) m<0> (x) h(2) m<1>", l, r,
					 "h=" + H.format(h) + ", m=" + M.basis[a], fmt_pairs<MH>(l, key), fmt_pairs<MH>(r, key));
		}
	return rep;
}

Report check_sayd(const Sayd &S, int deg, int samples, std::uint64_t seed)
{
	Report rep;
	const auto &H = S.hopf();
	const auto &M = S.module();
	std::function<std::string(const HM &)> key = [&](const HM &k) {
		return "(" + H.format(k.first) + ")(x)" + M.basis[k.second];
	};

	for (std::size_t a = 0; a < S.dim(); ++a) {
		MVec l;
		for (const auto &[co, c] : S.coaction(a))
			axpy(l, c, S.act(co.second, co.first));
		MVec r = unit_vec(a);
		rep.expect_equal("stability", "m<0> m<-1> = m", l, r, "m=" + M.basis[a], format_mvec(M, l),
				 format_mvec(M, r));
	}

	for (const HElem &h : test_elements(H, deg, samples, seed)) {
		auto legs = H.h_coproduct_n(h, 3);
		for (std::size_t a = 0; a < S.dim(); ++a) {
			// nabla(m h) = S(h(3)) m<-1> h(1) (x) m<0> h(2)
			LinComb<HM> l, r;
			for (const auto &[b, cb] : S.act(unit_vec(a), h))
				for (const auto &[co, cc] : S.coaction(b))
					l.add(co, cb * cc);
			for (const auto &[hs, c] : legs)
				for (const auto &[co, cc] : S.coaction(a)) {
					MVec right = S.act(co.second, hs[1]);
					if (right.empty())
						continue;
					HElem left = H.h_mul(H.h_mul(H.h_antipode(hs[2]), HElem(co.first)), HElem(hs[0]));
					for (const auto &[x, cx] : left)
						for (const auto &[b, cb] : right)
							r.add({x, b}, c * cc * cx * cb);
				}
			rep.expect_equal("ayd", "nabla(m h) = S(h(3)) m<-1> h(1) (x) m<0> h(2)", l, r,
					 "h=" + H.format(h) + ", m=" + M.basis[a], fmt_pairs<HM>(l, key), fmt_pairs<HM>(r, key));
		}
	}
	return rep;
}

} // namespace lhc
