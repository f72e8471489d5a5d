#include "lhc/cyclic.hpp"

#include <stdexcept>

namespace lhc {

namespace {

MVec unit_vec(std::size_t a) { return MVec{{a, Rational(1)}}; }

} // namespace

Mono mono_mul(const HopfAlgebraF &F, const Mono &a, const Mono &b)
{
	FElem p = F.mul(FElem(a), FElem(b));
	if (p.size() != 1 || p.begin()->second != 1)
		throw std::logic_error("F monomials must multiply to a monomial");
	return p.begin()->first;
}

namespace {

// For v^1..v^n: v^k<0> (v^n itself) together with the F factors
// c_k = v^1<k-1> v^2<k-2> ... v^{k-1}<1>.
LinComb<std::pair<MonoN, MonoN>> staircase(const LieHopf &H, const MonoN &v)
{
	const std::size_t n = v.size();
	const auto &F = H.F();
	LinComb<std::pair<MonoN, MonoN>> cur;
	cur.add({MonoN{}, MonoN(n, F.unit_mono())}, 1);
	for (std::size_t k = 0; k < n; ++k) {
		LinComb<std::pair<MonoN, MonoN>> next;
		auto co = H.coaction_iter(v[k], n - 1 - k);
		for (const auto &[st, c] : cur)
			for (const auto &[t, d] : co) {
				auto key = st;
				key.first.push_back(t.first);
				for (std::size_t j = 0; j < t.second.size(); ++j)
					key.second[k + 1 + j] = mono_mul(F, key.second[k + 1 + j], t.second[j]);
				next.add(key, c * d);
			}
		cur = std::move(next);
	}
	return cur;
}

// Module basis with F coefficients: m_a -> sum_b m_b (x) coaction[b][a].
const FElem &m_coef(const InducedModule &M, std::size_t b, std::size_t a) { return M.coaction[b][a]; }

std::string join(const std::vector<std::string> &parts)
{
	std::string out;
	for (std::size_t i = 0; i < parts.size(); ++i)
		out += (i ? " (x) " : "") + parts[i];
	return out;
}

std::string paren(const std::string &s)
{
	return s.find_first_of("+- ") == std::string::npos ? s : "(" + s + ")";
}

} // namespace

FElem random_f(const HopfAlgebraF &F, Rng &rng, int deg, bool normalized)
{
	auto monos = F.monomials_up_to(deg);
	FElem f;
	for (int t = 0; t < 2; ++t)
		f.add(monos[rng.below(monos.size())], rng.small_rational());
	if (normalized)
		f.add(F.unit_mono(), -F.counit(f));
	return f;
}

UElem random_u(const Enveloping &U, Rng &rng, int deg, bool normalized)
{
	auto monos = U.monomials_up_to(deg);
	UElem u;
	for (int t = 0; t < 2; ++t)
		u.add(monos[rng.below(monos.size())], rng.small_rational());
	if (normalized)
		u.add(U.unit_mono(), -U.counit(u));
	return u;
}

// ---- standard cocyclic module ----

StdCochain StdCyclic::face(const StdKey &k, int q, int i) const
{
	const auto &H = S_.hopf();
	const auto &h = k.second;
	StdCochain out;
	if (i == 0) {
		auto legs = h;
		legs.insert(legs.begin(), HMono{H.F().unit_mono(), H.U().unit_mono()});
		out.add({k.first, legs}, 1);
	} else if (i <= q) {
		for (const auto &[pr, c] : H.h_coproduct(h[i - 1])) {
			auto legs = h;
			legs[i - 1] = pr.first;
			legs.insert(legs.begin() + i, pr.second);
			out.add({k.first, legs}, c);
		}
	} else {
		for (const auto &[hb, c] : S_.coaction(k.first)) {
			auto legs = h;
			legs.push_back(hb.first);
			out.add({hb.second, legs}, c);
		}
	}
	return out;
}

StdCochain StdCyclic::degeneracy(const StdKey &k, int, int j) const
{
	const auto &H = S_.hopf();
	Rational e = H.h_counit(k.second[j]);
	StdCochain out;
	if (is_zero(e))
		return out;
	auto legs = k.second;
	legs.erase(legs.begin() + j);
	out.add({k.first, legs}, e);
	return out;
}

StdCochain StdCyclic::tau(const StdKey &k, int q) const
{
	if (q == 0)
		return StdCochain(k);
	{
		std::lock_guard lk(mu_);
		auto it = tau_memo_.find(k);
		if (it != tau_memo_.end())
			return it->second;
	}
	const auto &H = S_.hopf();
	const auto &h = k.second;
	const auto qs = static_cast<std::size_t>(q);
	auto co = S_.coaction(k.first);
	StdCochain out;
	// m<0> h^1(1) (x) S(h^1(2)) . (h^2 (x) ... (x) h^q (x) m<-1>)
	for (const auto &[pr, c] : H.h_coproduct(h[0])) {
		auto legs = H.h_coproduct_n(H.h_antipode(pr.second), qs);
		for (const auto &[hb, cb] : co) {
			MVec m0 = S_.act(hb.second, pr.first);
			if (m0.empty())
				continue;
			for (const auto &[zs, cz] : legs) {
				std::vector<HElem> factors;
				for (std::size_t j = 0; j + 1 < qs; ++j)
					factors.push_back(H.h_mul(zs[j], h[j + 1]));
				factors.push_back(H.h_mul(zs[qs - 1], hb.first));
				for (const auto &[tensor_key, ct] : expand_tensor(factors))
					for (const auto &[a, ca] : m0)
						out.add({a, tensor_key}, c * cb * cz * ct * ca);
			}
		}
	}
	std::lock_guard lk(mu_);
	tau_memo_.emplace(k, out);
	return out;
}

StdCochain StdCyclic::sample(Rng &rng, int q, bool normalized, int leg_degree) const
{
	const auto &H = S_.hopf();
	std::vector<HElem> legs;
	for (int i = 0; i < q; ++i) {
		HElem h = random_h(H, rng, leg_degree, 2);
		if (normalized)
			h.add_scaled(H.h_one(), -H.h_counit(h));
		legs.push_back(h);
	}
	StdCochain out;
	std::size_t a = rng.below(S_.dim());
	for (const auto &[k, c] : expand_tensor(legs))
		out.add({a, k}, c);
	return out;
}

std::string StdCyclic::format(const StdCochain &c) const
{
	const auto &H = S_.hopf();
	const auto &M = S_.module();
	return format_lincomb<StdKey>(c, [&](const StdKey &k) {
		std::vector<std::string> parts{M.basis[k.first]};
		for (const auto &h : k.second)
			parts.push_back(paren(H.format(h)));
		return join(parts);
	});
}

CocyclicOps<StdKey> StdCyclic::ops(int leg_degree) const
{
	CocyclicOps<StdKey> o;
	o.name = "standard";
	o.face = [this](const StdKey &k, int q, int i) { return face(k, q, i); };
	o.degeneracy = [this](const StdKey &k, int q, int j) { return degeneracy(k, q, j); };
	o.tau = [this](const StdKey &k, int q) { return tau(k, q); };
	o.sample = [this, leg_degree](Rng &rng, int q, bool nz) { return sample(rng, q, nz, leg_degree); };
	o.format = [this](const StdCochain &c) { return format(c); };
	return o;
}

// ---- bicocyclic module ----

LinComb<MonoN> BiCyclic::bullet(const Mono &u, const MonoN &f) const
{
	const auto &H = S_.hopf();
	const auto &U = H.U();
	LinComb<MonoN> out;
	if (f.empty()) {
		Rational e = U.counit(u);
		if (!is_zero(e))
			out.add({}, e);
		return out;
	}
	const std::size_t n = f.size();
	for (const auto &[v, c] : U.coproduct_n(u, n))
		for (const auto &[st, d] : staircase(H, v)) {
			std::vector<FElem> factors;
			for (std::size_t k = 0; k < n; ++k)
				factors.push_back(H.F().mul(FElem(st.second[k]), H.act(st.first[k], FElem(f[k]))));
			out.add_scaled(expand_tensor(factors), c * d);
		}
	return out;
}

LinComb<MonoN> BiCyclic::bullet(const UElem &u, const LinComb<MonoN> &f) const
{
	LinComb<MonoN> out;
	for (const auto &[um, c] : u)
		for (const auto &[fm, d] : f)
			out.add_scaled(bullet(um, fm), c * d);
	return out;
}

BiCochain BiCyclic::row_face(const BiKey &k, int i) const
{
	const auto &U = S_.hopf().U();
	const int p = static_cast<int>(k.u.size());
	BiCochain out;
	if (i == 0 || i == p + 1) {
		BiKey n = k;
		n.u.insert(i == 0 ? n.u.begin() : n.u.end(), U.unit_mono());
		out.add(n, 1);
		return out;
	}
	for (const auto &[pr, c] : U.coproduct(k.u[i - 1])) {
		BiKey n = k;
		n.u[i - 1] = pr.first;
		n.u.insert(n.u.begin() + i, pr.second);
		out.add(n, c);
	}
	return out;
}

BiCochain BiCyclic::row_degeneracy(const BiKey &k, int j) const
{
	Rational e = S_.hopf().U().counit(k.u[j]);
	BiCochain out;
	if (is_zero(e))
		return out;
	BiKey n = k;
	n.u.erase(n.u.begin() + j);
	out.add(n, e);
	return out;
}

BiCochain BiCyclic::row_tau(const BiKey &k) const
{
	if (k.u.empty())
		return BiCochain(k);
	const auto &H = S_.hopf();
	const auto &U = H.U();
	const auto &M = S_.module();
	const std::size_t p = k.u.size();
	BiCochain out;
	// delta(u(1)) S(u(2)) m (x) S(u(4)) . (u^2 (x) ... (x) u^p (x) 1) (x) S(u(3)) . f
	for (const auto &[legs, c] : U.coproduct_n(k.u[0], 4)) {
		Rational d = delta_u(S_.mpi(), legs[0]);
		if (is_zero(d))
			continue;
		MVec m = module_act(M.g1_action, U.antipode(legs[1]), unit_vec(k.m));
		if (m.empty())
			continue;
		LinComb<MonoN> fs = bullet(U.antipode(legs[2]), LinComb<MonoN>(k.f));
		if (fs.empty())
			continue;
		for (const auto &[s, cs] : U.antipode(legs[3]))
			for (const auto &[zs, cz] : U.coproduct_n(s, p)) {
				std::vector<UElem> factors;
				for (std::size_t j = 0; j + 1 < p; ++j)
					factors.push_back(U.mul(zs[j], k.u[j + 1]));
				factors.push_back(UElem(zs[p - 1]));
				for (const auto &[us, cu] : expand_tensor(factors))
					for (const auto &[fm, cf] : fs)
						for (const auto &[a, ca] : m)
							out.add({a, us, fm}, c * d * cs * cz * cu * cf * ca);
			}
	}
	return out;
}

BiCochain BiCyclic::col_face(const BiKey &k, int i) const
{
	const auto &H = S_.hopf();
	const auto &F = H.F();
	const auto &M = S_.module();
	const int q = static_cast<int>(k.f.size());
	BiCochain out;
	if (i == 0) {
		BiKey n = k;
		n.f.insert(n.f.begin(), F.unit_mono());
		out.add(n, 1);
		return out;
	}
	if (i <= q) {
		for (const auto &[pr, c] : F.coproduct(k.f[i - 1])) {
			BiKey n = k;
			n.f[i - 1] = pr.first;
			n.f.insert(n.f.begin() + i, pr.second);
			out.add(n, c);
		}
		return out;
	}
	// m<0> (x) u<0> (x) f (x) S(u<1> m<1>) sigma
	std::vector<UF> co;
	for (const auto &u : k.u)
		co.push_back(H.coaction(u));
	for (const auto &[pairs, c] : expand_tensor(co)) {
		MonoN u0;
		FElem u1 = F.one();
		for (const auto &pr : pairs) {
			u0.push_back(pr.first);
			u1 = F.mul(u1, FElem(pr.second));
		}
		for (std::size_t b = 0; b < M.dim(); ++b) {
			const FElem &mc = m_coef(M, b, k.m);
			if (mc.empty())
				continue;
			FElem last = F.mul(F.antipode(F.mul(u1, mc)), S_.mpi().sigma);
			for (const auto &[fm, cf] : last) {
				BiKey n{b, u0, k.f};
				n.f.push_back(fm);
				out.add(n, c * cf);
			}
		}
	}
	return out;
}

BiCochain BiCyclic::col_degeneracy(const BiKey &k, int j) const
{
	Rational e = S_.hopf().F().counit(k.f[j]);
	BiCochain out;
	if (is_zero(e))
		return out;
	BiKey n = k;
	n.f.erase(n.f.begin() + j);
	out.add(n, e);
	return out;
}

BiCochain BiCyclic::col_tau(const BiKey &k) const
{
	if (k.f.empty())
		return BiCochain(k);
	const auto &H = S_.hopf();
	const auto &F = H.F();
	const auto &M = S_.module();
	const std::size_t q = k.f.size();
	BiCochain out;
	// m<0> (x) u<0> (x) S(f^1) . (f^2 (x) ... (x) f^q (x) S(u<1> m<1>) sigma)
	auto sf = F.coproduct_n(F.antipode(FElem(k.f[0])), q);
	std::vector<UF> co;
	for (const auto &u : k.u)
		co.push_back(H.coaction(u));
	for (const auto &[pairs, c] : expand_tensor(co)) {
		MonoN u0;
		FElem u1 = F.one();
		for (const auto &pr : pairs) {
			u0.push_back(pr.first);
			u1 = F.mul(u1, FElem(pr.second));
		}
		for (std::size_t b = 0; b < M.dim(); ++b) {
			const FElem &mc = m_coef(M, b, k.m);
			if (mc.empty())
				continue;
			FElem last = F.mul(F.antipode(F.mul(u1, mc)), S_.mpi().sigma);
			for (const auto &[zs, cz] : sf) {
				std::vector<FElem> factors;
				for (std::size_t j = 0; j + 1 < q; ++j)
					factors.push_back(FElem(mono_mul(F, zs[j], k.f[j + 1])));
				factors.push_back(F.mul(FElem(zs[q - 1]), last));
				for (const auto &[fs, cf] : expand_tensor(factors))
					out.add({b, u0, fs}, c * cz * cf);
			}
		}
	}
	return out;
}

BiCochain BiCyclic::sample(Rng &rng, int p, int q, bool normalized, int leg_degree) const
{
	const auto &H = S_.hopf();
	std::vector<UElem> us;
	std::vector<FElem> fs;
	for (int i = 0; i < p; ++i)
		us.push_back(random_u(H.U(), rng, leg_degree, normalized));
	for (int i = 0; i < q; ++i)
		fs.push_back(random_f(H.F(), rng, leg_degree, normalized));
	std::size_t a = rng.below(S_.dim());
	BiCochain out;
	for (const auto &[uk, cu] : expand_tensor(us))
		for (const auto &[fk, cf] : expand_tensor(fs))
			out.add({a, uk, fk}, cu * cf);
	return out;
}

std::string BiCyclic::format(const BiCochain &c) const
{
	const auto &H = S_.hopf();
	const auto &M = S_.module();
	return format_lincomb<BiKey>(c, [&](const BiKey &k) {
		std::vector<std::string> parts{M.basis[k.m]};
		for (const auto &u : k.u)
			parts.push_back(H.U().format(u));
		std::string s = join(parts);
		if (!k.f.empty()) {
			std::vector<std::string> fp;
			for (const auto &f : k.f)
				fp.push_back(H.F().format(f));
			s += " | " + join(fp);
		}
		return s;
	});
}

CocyclicOps<BiKey> BiCyclic::row_ops(int q, int leg_degree) const
{
	CocyclicOps<BiKey> o;
	o.name = "row q=" + std::to_string(q);
	o.face = [this](const BiKey &k, int, int i) { return row_face(k, i); };
	o.degeneracy = [this](const BiKey &k, int, int j) { return row_degeneracy(k, j); };
	o.tau = [this](const BiKey &k, int) { return row_tau(k); };
	o.sample = [this, q, leg_degree](Rng &rng, int p, bool nz) { return sample(rng, p, q, nz, leg_degree); };
	o.format = [this](const BiCochain &c) { return format(c); };
	return o;
}

CocyclicOps<BiKey> BiCyclic::col_ops(int p, int leg_degree) const
{
	CocyclicOps<BiKey> o;
	o.name = "column p=" + std::to_string(p);
	o.face = [this](const BiKey &k, int, int i) { return col_face(k, i); };
	o.degeneracy = [this](const BiKey &k, int, int j) { return col_degeneracy(k, j); };
	o.tau = [this](const BiKey &k, int) { return col_tau(k); };
	o.sample = [this, p, leg_degree](Rng &rng, int q, bool nz) { return sample(rng, p, q, nz, leg_degree); };
	o.format = [this](const BiCochain &c) { return format(c); };
	return o;
}

CocyclicOps<BiKey> BiCyclic::diagonal_ops(int leg_degree) const
{
	CocyclicOps<BiKey> o;
	o.name = "diagonal";
	auto lin = [](const BiCochain &c, auto &&f) { return extend_linear(c, f); };
	o.face = [this, lin](const BiKey &k, int, int i) {
		return lin(row_face(k, i), [&](const BiKey &x) { return col_face(x, i); });
	};
	o.degeneracy = [this, lin](const BiKey &k, int, int j) {
		return lin(row_degeneracy(k, j), [&](const BiKey &x) { return col_degeneracy(x, j); });
	};
	o.tau = [this, lin](const BiKey &k, int) {
		return lin(row_tau(k), [&](const BiKey &x) { return col_tau(x); });
	};
	o.sample = [this, leg_degree](Rng &rng, int n, bool nz) { return sample(rng, n, n, nz, leg_degree); };
	o.format = [this](const BiCochain &c) { return format(c); };
	return o;
}

StdCochain BiCyclic::psi(const BiCochain &c) const
{
	const auto &H = S_.hopf();
	const auto &F = H.F();
	StdCochain out;
	for (const auto &[k, ck] : c) {
		if (k.u.size() != k.f.size())
			throw std::invalid_argument("psi needs equal bidegrees");
		for (const auto &[st, d] : staircase(H, k.u)) {
			std::vector<HMono> legs;
			for (std::size_t i = 0; i < k.u.size(); ++i)
				legs.push_back({mono_mul(F, k.f[i], st.second[i]), st.first[i]});
			out.add({k.m, legs}, ck * d);
		}
	}
	return out;
}

BiCochain BiCyclic::psi_inv(const StdCochain &c) const
{
	const auto &H = S_.hopf();
	const auto &F = H.F();
	BiCochain out;
	for (const auto &[k, ck] : c) {
		MonoN u, f;
		for (const auto &h : k.second) {
			f.push_back(h.first);
			u.push_back(h.second);
		}
		for (const auto &[st, d] : staircase(H, u)) {
			std::vector<FElem> factors;
			for (std::size_t i = 0; i < f.size(); ++i)
				factors.push_back(F.mul(FElem(f[i]), F.antipode(FElem(st.second[i]))));
			for (const auto &[fs, cf] : expand_tensor(factors))
				out.add({k.first, st.first, fs}, ck * d * cf);
		}
	}
	return out;
}

Report check_psi(const BiCyclic &bi, const StdCyclic &st, int n_max, int samples, std::uint64_t seed,
		 int leg_degree)
{
	Report rep;
	Rng rng(seed);
	auto D = bi.diagonal_ops(leg_degree);
	auto S = st.ops(leg_degree);
	for (int n = 0; n <= n_max; ++n)
		for (int s = 0; s < samples; ++s) {
			BiCochain c = bi.sample(rng, n, n, false, leg_degree);
			StdCochain x = st.sample(rng, n, false, leg_degree);
			const std::string w = "n=" + std::to_string(n) + ", c=" + bi.format(c);
			const std::string wx = "n=" + std::to_string(n) + ", c=" + st.format(x);
			auto expect_bi = [&](const std::string &id, const std::string &stmt, const BiCochain &l,
					     const BiCochain &r, const std::string &wit) {
				if (l == r)
					rep.pass();
				else
					rep.fail({id, stmt, wit, bi.format(l), bi.format(r)});
			};
			auto expect_st = [&](const std::string &id, const std::string &stmt, const StdCochain &l,
					     const StdCochain &r, const std::string &wit) {
				if (l == r)
					rep.pass();
				else
					rep.fail({id, stmt, wit, st.format(l), st.format(r)});
			};

			StdCochain pc = bi.psi(c);
			expect_bi("psi-round-trip", "psi^-1 psi = id", bi.psi_inv(pc), c, w);
			expect_st("psi-round-trip", "psi psi^-1 = id", bi.psi(bi.psi_inv(x)), x, wx);
			expect_st("psi-tau", "psi tau = tau psi", bi.psi(D.t(c, n)), S.t(pc, n), w);
			for (int i = 0; i <= n + 1; ++i)
				expect_st("psi-face", "psi d_i = d_i psi", bi.psi(D.d(c, n, i)), S.d(pc, n, i),
					  w + " i=" + std::to_string(i));
			for (int j = 0; j < n; ++j)
				expect_st("psi-degeneracy", "psi s_j = s_j psi", bi.psi(D.s(c, n, j)), S.s(pc, n, j),
					  w + " j=" + std::to_string(j));
		}
	return rep;
}

} // namespace lhc
