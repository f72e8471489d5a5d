#include "lhc/hopf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lhc {

namespace {

Mono add_mono(const Mono &a, const Mono &b)
{
	Mono r = a;
	for (std::size_t i = 0; i < r.size(); ++i)
		r[i] += b[i];
	return r;
}

MonoN cat(MonoN a, const MonoN &b)
{
	a.insert(a.end(), b.begin(), b.end());
	return a;
}

} // namespace

HopfAlgebraF::HopfAlgebraF(std::vector<HopfGenerator> gens) : gens_(std::move(gens))
{
	for (std::size_t i = 0; i < gens_.size(); ++i) {
		const auto &g = gens_[i];
		if (!g.invertible)
			continue;
		Mono m = unit_mono(), inv = unit_mono();
		m[i] = 1;
		inv[i] = -1;
		if (g.coproduct != FTensor(Mono2{m, m}) || g.antipode != FElem(inv) || g.epsilon != 1)
			throw std::invalid_argument("only group-like generators may be inverted: " + g.name);
	}
}

HopfAlgebraF::HopfAlgebraF(const HopfAlgebraF &o) : gens_(o.gens_) {}

HopfAlgebraF &HopfAlgebraF::operator=(const HopfAlgebraF &o)
{
	gens_ = o.gens_;
	std::lock_guard lk(mu_);
	delta_memo_.clear();
	return *this;
}

std::size_t HopfAlgebraF::index_of(const std::string &name) const
{
	for (std::size_t i = 0; i < gens_.size(); ++i)
		if (gens_[i].name == name)
			return i;
	throw std::invalid_argument("unknown F generator: " + name);
}

void HopfAlgebraF::validate(const Mono &m) const
{
	if (m.size() != ngens())
		throw std::invalid_argument("F monomial has wrong length");
	for (std::size_t i = 0; i < m.size(); ++i)
		if (m[i] < 0 && !gens_[i].invertible)
			throw std::invalid_argument("negative exponent on non-invertible generator " + gens_[i].name);
}

FElem HopfAlgebraF::gen(std::size_t i, int e) const
{
	Mono m = unit_mono();
	m[i] = e;
	validate(m);
	return FElem(m);
}

FElem HopfAlgebraF::mul(const FElem &a, const FElem &b) const
{
	FElem out;
	for (const auto &[ma, ca] : a)
		for (const auto &[mb, cb] : b)
			out.add(add_mono(ma, mb), ca * cb);
	return out;
}

FElem HopfAlgebraF::pow(const FElem &a, int e) const
{
	if (e < 0)
		throw std::invalid_argument("negative power of an F element");
	FElem r = one();
	for (int k = 0; k < e; ++k)
		r = mul(r, a);
	return r;
}

FTensor mul_tensor(const HopfAlgebraF &F, const FTensor &a, const FTensor &b)
{
	(void)F;
	FTensor out;
	for (const auto &[ka, ca] : a)
		for (const auto &[kb, cb] : b)
			out.add({add_mono(ka.first, kb.first), add_mono(ka.second, kb.second)}, ca * cb);
	return out;
}

FTensor HopfAlgebraF::coproduct(const Mono &m) const
{
	validate(m);
	{
		std::lock_guard lk(mu_);
		auto it = delta_memo_.find(m);
		if (it != delta_memo_.end())
			return it->second;
	}
	FTensor out(Mono2{unit_mono(), unit_mono()});
	for (std::size_t i = 0; i < m.size(); ++i) {
		FTensor d = gens_[i].coproduct;
		if (m[i] < 0) {
			Mono inv = unit_mono();
			inv[i] = -1;
			d = FTensor(Mono2{inv, inv});
		}
		for (int k = 0; k < std::abs(m[i]); ++k)
			out = mul_tensor(*this, out, d);
	}
	std::lock_guard lk(mu_);
	delta_memo_.emplace(m, out);
	return out;
}

FTensor HopfAlgebraF::coproduct(const FElem &f) const
{
	return extend_linear(f, [&](const Mono &m) { return coproduct(m); });
}

LinComb<MonoN> HopfAlgebraF::coproduct_n(const FElem &f, std::size_t legs) const
{
	LinComb<MonoN> cur;
	if (legs == 0) {
		if (!is_zero(counit(f)))
			cur.add({}, counit(f));
		return cur;
	}
	for (const auto &[m, c] : f)
		cur.add({m}, c);
	for (std::size_t l = 1; l < legs; ++l) {
		LinComb<MonoN> next;
		for (const auto &[ms, c] : cur) {
			MonoN head(ms.begin(), ms.end() - 1);
			for (const auto &[pr, d] : coproduct(ms.back()))
				next.add(cat(head, {pr.first, pr.second}), c * d);
		}
		cur = std::move(next);
	}
	return cur;
}

Rational HopfAlgebraF::counit(const Mono &m) const
{
	validate(m);
	Rational r = 1;
	for (std::size_t i = 0; i < m.size(); ++i)
		for (int k = 0; k < m[i]; ++k)
			r *= gens_[i].epsilon;
	return r;
}

Rational HopfAlgebraF::counit(const FElem &f) const
{
	Rational r = 0;
	for (const auto &[m, c] : f)
		r += c * counit(m);
	return r;
}

FElem HopfAlgebraF::antipode(const Mono &m) const
{
	validate(m);
	FElem out = one();
	for (std::size_t i = 0; i < m.size(); ++i) {
		if (m[i] < 0)
			out = mul(out, gen(i, -m[i]));
		else
			out = mul(out, pow(gens_[i].antipode, m[i]));
	}
	return out;
}

FElem HopfAlgebraF::antipode(const FElem &f) const
{
	return extend_linear(f, [&](const Mono &m) { return antipode(m); });
}

std::vector<Mono> HopfAlgebraF::monomials_up_to(int deg) const
{
	std::vector<Mono> out;
	Mono cur = unit_mono();
	auto rec = [&](auto &&self, std::size_t i, int left) -> void {
		if (i == ngens()) {
			out.push_back(cur);
			return;
		}
		int lo = gens_[i].invertible ? -left : 0;
		for (int e = lo; e <= left; ++e) {
			cur[i] = e;
			self(self, i + 1, left - std::abs(e));
		}
		cur[i] = 0;
	};
	rec(rec, 0, deg);
	std::stable_sort(out.begin(), out.end(), [](const Mono &a, const Mono &b) { return degree(a) < degree(b); });
	return out;
}

std::string HopfAlgebraF::format(const Mono &m) const
{
	std::vector<std::string> names;
	for (const auto &g : gens_)
		names.push_back(g.name);
	return format_mono(m, names);
}

std::string HopfAlgebraF::format(const FElem &f) const
{
	return format_lincomb<Mono>(f, [&](const Mono &m) { return format(m); });
}

std::string HopfAlgebraF::format(const FTensor &t) const
{
	return format_lincomb<Mono2>(t, [&](const Mono2 &k) { return "(" + format(k.first) + ")(x)(" + format(k.second) + ")"; });
}

Report check_hopf_axioms_F(const HopfAlgebraF &F, int deg)
{
	Report rep;
	for (const Mono &m : F.monomials_up_to(deg)) {
		const std::string w = F.format(m);
		FElem fm(m);
		FTensor d = F.coproduct(m);

		LinComb<MonoN> left, right;
		for (const auto &[pr, c] : d) {
			for (const auto &[q, e] : F.coproduct(pr.first))
				left.add({q.first, q.second, pr.second}, c * e);
			for (const auto &[q, e] : F.coproduct(pr.second))
				right.add({pr.first, q.first, q.second}, c * e);
		}
		rep.expect_equal("F-coassociativity", "(Delta (x) id) Delta = (id (x) Delta) Delta", left, right, w, "", "");

		FElem cl, cr, sl, sr;
		for (const auto &[pr, c] : d) {
			cl.add(pr.second, c * F.counit(pr.first));
			cr.add(pr.first, c * F.counit(pr.second));
			sl.add_scaled(F.mul(F.antipode(pr.first), FElem(pr.second)), c);
			sr.add_scaled(F.mul(FElem(pr.first), F.antipode(pr.second)), c);
		}
		rep.expect_equal("F-counit", "(eps (x) id) Delta(f) = f", cl, fm, w, F.format(cl), F.format(fm));
		rep.expect_equal("F-counit", "(id (x) eps) Delta(f) = f", cr, fm, w, F.format(cr), F.format(fm));
		FElem unit = F.one() * F.counit(m);
		rep.expect_equal("F-antipode", "S(f(1)) f(2) = eps(f) 1", sl, unit, w, F.format(sl), F.format(unit));
		rep.expect_equal("F-antipode", "f(1) S(f(2)) = eps(f) 1", sr, unit, w, F.format(sr), F.format(unit));
	}
	return rep;
}

LieHopf::LieHopf(LieHopfDatum d) : d_(std::move(d)), u_(d_.g1)
{
	const std::size_t n = d_.g1.dim();
	if (d_.action.size() != n || d_.coef.size() != n)
		throw std::invalid_argument("Lie-Hopf datum dimensions do not match g1");
	for (std::size_t i = 0; i < n; ++i) {
		if (d_.action[i].size() != d_.F.ngens() || d_.coef[i].size() != n)
			throw std::invalid_argument("Lie-Hopf datum dimensions do not match g1");
	}
}

FElem LieHopf::act(std::size_t i, const Mono &f) const
{
	{
		std::lock_guard lk(mu_);
		auto it = act_memo_.find({i, f});
		if (it != act_memo_.end())
			return it->second;
	}
	const auto &F = d_.F;
	FElem out;
	for (std::size_t g = 0; g < f.size(); ++g) {
		if (f[g] == 0)
			continue;
		Mono rest = f;
		--rest[g];
		out.add_scaled(F.mul(FElem(rest), d_.action[i][g]), Rational(f[g]));
	}
	std::lock_guard lk(mu_);
	act_memo_.emplace(std::make_pair(i, f), out);
	return out;
}

FElem LieHopf::act(std::size_t i, const FElem &f) const
{
	return extend_linear(f, [&](const Mono &m) { return act(i, m); });
}

FElem LieHopf::act(const Mono &u, const FElem &f) const
{
	auto w = word_of(u);
	FElem cur = f;
	for (auto it = w.rbegin(); it != w.rend(); ++it)
		cur = act(static_cast<std::size_t>(*it), cur);
	return cur;
}

FElem LieHopf::act(const UElem &u, const FElem &f) const
{
	FElem out;
	for (const auto &[m, c] : u)
		out.add_scaled(act(m, f), c);
	return out;
}

UF LieHopf::coaction(const Mono &u) const
{
	const auto &F = d_.F;
	if (degree(u) == 0)
		return UF(Mono2{u, F.unit_mono()});
	{
		std::lock_guard lk(mu_);
		auto it = coact_memo_.find(u);
		if (it != coact_memo_.end())
			return it->second;
	}
	std::size_t i = 0;
	while (u[i] == 0)
		++i;
	Mono rest = u;
	--rest[i];
	// nabla(X_i m) = X_j m<0> (x) f_i^j m<1> + m<0> (x) X_i |> m<1>
	UF out;
	for (const auto &[pr, c] : coaction(rest)) {
		for (std::size_t j = 0; j < dim(); ++j) {
			if (d_.coef[i][j].empty())
				continue;
			Mono xj = u_.unit_mono();
			xj[j] = 1;
			UElem left = u_.mul(xj, pr.first);
			FElem right = F.mul(d_.coef[i][j], FElem(pr.second));
			out.add_scaled(tensor(left, right), c);
		}
		out.add_scaled(tensor(UElem(pr.first), act(i, pr.second)), c);
	}
	std::lock_guard lk(mu_);
	coact_memo_.emplace(u, out);
	return out;
}

UF LieHopf::coaction(const UElem &u) const
{
	return extend_linear(u, [&](const Mono &m) { return coaction(m); });
}

LinComb<std::pair<Mono, MonoN>> LieHopf::coaction_iter(const Mono &u, std::size_t k) const
{
	LinComb<std::pair<Mono, MonoN>> out;
	if (k == 0) {
		out.add({u, {}}, 1);
		return out;
	}
	for (const auto &[pr, c] : coaction(u))
		for (const auto &[legs, d] : d_.F.coproduct_n(FElem(pr.second), k))
			out.add({pr.first, legs}, c * d);
	return out;
}

HElem LieHopf::h_from_f(const FElem &f) const
{
	HElem out;
	for (const auto &[m, c] : f)
		out.add({m, u_.unit_mono()}, c);
	return out;
}

HElem LieHopf::h_from_u(const UElem &u) const
{
	HElem out;
	for (const auto &[m, c] : u)
		out.add({d_.F.unit_mono(), m}, c);
	return out;
}

HElem LieHopf::h_mul(const HMono &a, const HMono &b) const
{
	{
		std::lock_guard lk(mu_);
		auto it = mul_memo_.find({a, b});
		if (it != mul_memo_.end())
			return it->second;
	}
	// (f >< u)(g >< v) = f (u(1) |> g) >< u(2) v
	HElem out;
	for (const auto &[pr, c] : u_.coproduct(a.second)) {
		FElem f = d_.F.mul(FElem(a.first), act(pr.first, FElem(b.first)));
		UElem u = u_.mul(pr.second, b.second);
		for (const auto &[mf, cf] : f)
			for (const auto &[mu, cu] : u)
				out.add({mf, mu}, c * cf * cu);
	}
	std::lock_guard lk(mu_);
	mul_memo_.emplace(std::make_pair(a, b), out);
	return out;
}

HElem LieHopf::h_mul(const HElem &a, const HElem &b) const
{
	HElem out;
	for (const auto &[ma, ca] : a)
		for (const auto &[mb, cb] : b)
			out.add_scaled(h_mul(ma, mb), ca * cb);
	return out;
}

HTensor LieHopf::h_coproduct(const HMono &h) const
{
	{
		std::lock_guard lk(mu_);
		auto it = delta_memo_.find(h);
		if (it != delta_memo_.end())
			return it->second;
	}
	// f(1) >< u(1)<0> (x) f(2) u(1)<1> >< u(2)
	HTensor out;
	const auto &F = d_.F;
	for (const auto &[fp, cf] : F.coproduct(h.first))
		for (const auto &[up, cu] : u_.coproduct(h.second))
			for (const auto &[co, cc] : coaction(up.first)) {
				Mono f2 = fp.second;
				for (std::size_t g = 0; g < f2.size(); ++g)
					f2[g] += co.second[g];
				out.add({HMono{fp.first, co.first}, HMono{f2, up.second}}, cf * cu * cc);
			}
	std::lock_guard lk(mu_);
	delta_memo_.emplace(h, out);
	return out;
}

HTensor LieHopf::h_coproduct(const HElem &h) const
{
	return extend_linear(h, [&](const HMono &m) { return h_coproduct(m); });
}

LinComb<std::vector<HMono>> LieHopf::h_coproduct_n(const HElem &h, std::size_t legs) const
{
	LinComb<std::vector<HMono>> cur;
	if (legs == 0) {
		Rational e = h_counit(h);
		if (!is_zero(e))
			cur.add({}, e);
		return cur;
	}
	for (const auto &[m, c] : h)
		cur.add({m}, c);
	for (std::size_t l = 1; l < legs; ++l) {
		LinComb<std::vector<HMono>> next;
		for (const auto &[ms, c] : cur) {
			std::vector<HMono> head(ms.begin(), ms.end() - 1);
			for (const auto &[pr, d] : h_coproduct(ms.back())) {
				auto key = head;
				key.push_back(pr.first);
				key.push_back(pr.second);
				next.add(key, c * d);
			}
		}
		cur = std::move(next);
	}
	return cur;
}

Rational LieHopf::h_counit(const HMono &h) const { return d_.F.counit(h.first) * u_.counit(h.second); }

Rational LieHopf::h_counit(const HElem &h) const
{
	Rational r = 0;
	for (const auto &[m, c] : h)
		r += c * h_counit(m);
	return r;
}

HElem LieHopf::h_antipode(const HMono &h) const
{
	{
		std::lock_guard lk(mu_);
		auto it = anti_memo_.find(h);
		if (it != anti_memo_.end())
			return it->second;
	}
	// (1 >< S(u<0>)) (S(f u<1>) >< 1)
	HElem out;
	const auto &F = d_.F;
	for (const auto &[co, c] : coaction(h.second)) {
		HElem left = h_from_u(u_.antipode(co.first));
		Mono fu = h.first;
		for (std::size_t g = 0; g < fu.size(); ++g)
			fu[g] += co.second[g];
		HElem right = h_from_f(F.antipode(fu));
		out.add_scaled(h_mul(left, right), c);
	}
	std::lock_guard lk(mu_);
	anti_memo_.emplace(h, out);
	return out;
}

HElem LieHopf::h_antipode(const HElem &h) const
{
	return extend_linear(h, [&](const HMono &m) { return h_antipode(m); });
}

std::string LieHopf::format(const HMono &h) const
{
	return d_.F.format(h.first) + "><" + u_.format(h.second);
}

std::string LieHopf::format(const HElem &h) const
{
	return format_lincomb<HMono>(h, [&](const HMono &m) { return "(" + format(m) + ")"; });
}

std::string LieHopf::format_uf(const UF &x) const
{
	return format_lincomb<Mono2>(x, [&](const Mono2 &k) { return "(" + u_.format(k.first) + ")(x)(" + d_.F.format(k.second) + ")"; });
}

FElem determinant(const HopfAlgebraF &F, const std::vector<std::vector<FElem>> &m)
{
	const std::size_t n = m.size();
	std::vector<std::size_t> perm(n);
	std::iota(perm.begin(), perm.end(), 0);
	FElem out;
	do {
		int inv = 0;
		for (std::size_t a = 0; a < n; ++a)
			for (std::size_t b = a + 1; b < n; ++b)
				if (perm[a] > perm[b])
					++inv;
		FElem term = F.one();
		for (std::size_t i = 0; i < n && !term.empty(); ++i)
			term = F.mul(term, m[i][perm[i]]);
		out.add_scaled(term, inv % 2 == 0 ? Rational(1) : Rational(-1));
	} while (std::next_permutation(perm.begin(), perm.end()));
	return out;
}

ModularPair canonical_mpi(const LieHopf &H)
{
	return {adjoint_trace_character(H.g()), determinant(H.F(), H.datum().coef)};
}

Rational delta_u(const ModularPair &mp, const Mono &u)
{
	Rational r = 1;
	for (std::size_t i = 0; i < u.size(); ++i)
		for (int k = 0; k < u[i]; ++k)
			r *= mp.delta[i];
	return r;
}

Rational delta_h(const LieHopf &H, const ModularPair &mp, const HElem &h)
{
	Rational r = 0;
	for (const auto &[m, c] : h)
		r += c * H.F().counit(m.first) * delta_u(mp, m.second);
	return r;
}

HElem twisted_antipode(const LieHopf &H, const ModularPair &mp, const HElem &h)
{
	HElem out;
	for (const auto &[pr, c] : H.h_coproduct(h)) {
		Rational d = H.F().counit(pr.first.first) * delta_u(mp, pr.first.second);
		if (!is_zero(d))
			out.add_scaled(H.h_antipode(pr.second), c * d);
	}
	return out;
}

Report check_lie_hopf(const LieHopf &H, int deg)
{
	Report rep;
	const auto &F = H.F();
	const auto &g = H.g();
	const auto &U = H.U();
	const std::size_t n = H.dim();
	const auto fmonos = F.monomials_up_to(deg);
	auto gname = [&](std::size_t i) { return g.names()[i]; };

	for (std::size_t i = 0; i < n; ++i)
		for (const Mono &m : fmonos) {
			FElem fm(m);
			std::string w = gname(i) + ", " + F.format(m);
			FElem xf = H.act(i, fm);
			rep.expect_equal("counit-action", "eps(X |> f) = 0", F.counit(xf), Rational(0), w,
					 to_string(F.counit(xf)), "0");

			FTensor lhs = F.coproduct(xf), rhs;
			for (const auto &[pr, c] : F.coproduct(m)) {
				for (std::size_t j = 0; j < n; ++j) {
					const FElem &fij = H.coef(i, j);
					if (fij.empty())
						continue;
					rhs.add_scaled(tensor(H.act(j, FElem(pr.first)), F.mul(fij, FElem(pr.second))), c);
				}
				rhs.add_scaled(tensor(FElem(pr.first), H.act(i, FElem(pr.second))), c);
			}
			rep.expect_equal("action-coproduct", "Delta(X |> f) = X<0> |> f(1) (x) X<1> f(2) + f(1) (x) X |> f(2)",
					 lhs, rhs, w, F.format(lhs), F.format(rhs));

			for (std::size_t j = 0; j < n; ++j) {
				FElem l = H.act(i, H.act(j, fm)) - H.act(j, H.act(i, fm));
				FElem r;
				for (const auto &[k, c] : g.bracket(i, j))
					r.add_scaled(H.act(k, fm), c);
				rep.expect_equal("lie-action", "X |> (Y |> f) - Y |> (X |> f) = [X,Y] |> f", l, r,
						 gname(i) + ", " + gname(j) + ", " + F.format(m), F.format(l), F.format(r));
			}
			for (const Mono &m2 : fmonos) {
				if (degree(m) + degree(m2) > deg)
					continue;
				FElem l = H.act(i, F.mul(fm, FElem(m2)));
				FElem r = F.mul(H.act(i, fm), FElem(m2)) + F.mul(fm, H.act(i, FElem(m2)));
				rep.expect_equal("derivation", "X |> (fg) = (X |> f) g + f (X |> g)", l, r,
						 w + ", " + F.format(m2), F.format(l), F.format(r));
			}
		}

	// f_{j,i}^k - f_{i,j}^k = C^k_{s,r} f_i^r f_j^s + C^l_{i,j} f_l^k, with f_{j,i}^k = X_i |> f_j^k
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				FElem l = H.act(i, H.coef(j, k)) - H.act(j, H.coef(i, k));
				FElem r;
				for (std::size_t s = 0; s < n; ++s)
					for (std::size_t rr = 0; rr < n; ++rr) {
						Rational c = g.structure(s, rr, k);
						if (!is_zero(c))
							r.add_scaled(F.mul(H.coef(i, rr), H.coef(j, s)), c);
					}
				for (const auto &[ll, c] : g.bracket(i, j))
					r.add_scaled(H.coef(ll, k), c);
				rep.expect_equal("bianchi",
						 "X_i |> f_j^k - X_j |> f_i^k = C^k_{s,r} f_i^r f_j^s + C^l_{i,j} f_l^k", l, r,
						 "i=" + gname(i) + ", j=" + gname(j) + ", k=" + gname(k), F.format(l), F.format(r));
			}

	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			std::string w = "i=" + gname(i) + ", j=" + gname(j);
			FTensor l = F.coproduct(H.coef(i, j)), r;
			for (std::size_t k = 0; k < n; ++k)
				r += tensor(H.coef(k, j), H.coef(i, k));
			rep.expect_equal("coaction-coproduct", "Delta(f_i^j) = sum_k f_k^j (x) f_i^k", l, r, w, F.format(l),
					 F.format(r));
			Rational e = F.counit(H.coef(i, j));
			Rational d = i == j ? 1 : 0;
			rep.expect_equal("coaction-counit", "eps(f_i^j) = delta_i^j", e, d, w, to_string(e), to_string(d));

			UElem xy = U.mul(U.gen(i), U.gen(j)) - U.mul(U.gen(j), U.gen(i));
			UF lc = H.coaction(xy);
			UF rc = H.coaction(U.from_lie(g.bracket(i, j)));
			rep.expect_equal("coaction-well-defined", "nabla(XY - YX) = nabla([X,Y])", lc, rc, w, H.format_uf(lc),
					 H.format_uf(rc));
		}
	return rep;
}

std::vector<HMono> h_monomials_up_to(const LieHopf &H, int deg)
{
	std::vector<HMono> out;
	for (const Mono &f : H.F().monomials_up_to(deg))
		for (const Mono &u : H.U().monomials_up_to(deg - degree(f)))
			out.push_back({f, u});
	return out;
}

HElem random_h(const LieHopf &H, Rng &rng, int deg, int terms)
{
	auto monos = h_monomials_up_to(H, deg);
	HElem out;
	for (int t = 0; t < terms; ++t)
		out.add(monos[rng.below(monos.size())], rng.small_rational());
	return out;
}

namespace {

using Key3 = std::vector<Mono>;

} // namespace

Report check_matched_pair_hopf(const LieHopf &H, int deg, int samples, std::uint64_t seed)
{
	Report rep;
	const auto &F = H.F();
	const auto &U = H.U();
	const auto umonos = U.monomials_up_to(deg);
	const auto fmonos = F.monomials_up_to(deg);

	{
		UF l = H.coaction(U.unit_mono()), r(Mono2{U.unit_mono(), F.unit_mono()});
		rep.expect_equal("mp3", "nabla(1) = 1 (x) 1", l, r, "u=1", H.format_uf(l), H.format_uf(r));
	}
	for (const Mono &u : umonos) {
		const std::string wu = "u=" + U.format(u);
		UF co = H.coaction(u);

		// cc1
		LinComb<Key3> l1, r1;
		for (const auto &[pr, c] : co)
			for (const auto &[d, e] : U.coproduct(pr.first))
				l1.add({d.first, d.second, pr.second}, c * e);
		for (const auto &[d, e] : U.coproduct(u))
			for (const auto &[a, ca] : H.coaction(d.first))
				for (const auto &[b, cb] : H.coaction(d.second)) {
					Mono f = a.second;
					for (std::size_t g = 0; g < f.size(); ++g)
						f[g] += b.second[g];
					r1.add({a.first, b.first, f}, e * ca * cb);
				}
		rep.expect_equal("cc1", "u<0>(1) (x) u<0>(2) (x) u<1> = u(1)<0> (x) u(2)<0> (x) u(1)<1> u(2)<1>", l1, r1,
				 wu, "", "");

		// cc2
		FElem l2, r2 = F.one() * U.counit(u);
		for (const auto &[pr, c] : co)
			l2.add(pr.second, c * U.counit(pr.first));
		rep.expect_equal("cc2", "eps(u<0>) u<1> = eps(u) 1", l2, r2, wu, F.format(l2), F.format(r2));

		// comodule laws
		LinComb<Key3> cl, cr;
		for (const auto &[pr, c] : co) {
			for (const auto &[q, d] : H.coaction(pr.first))
				cl.add({q.first, q.second, pr.second}, c * d);
			for (const auto &[q, d] : F.coproduct(pr.second))
				cr.add({pr.first, q.first, q.second}, c * d);
		}
		rep.expect_equal("U-comodule", "(nabla (x) id) nabla = (id (x) Delta) nabla", cl, cr, wu, "", "");
		UElem ce;
		for (const auto &[pr, c] : co)
			ce.add(pr.first, c * F.counit(pr.second));
		rep.expect_equal("U-comodule", "(id (x) eps) nabla(u) = u", ce, UElem(u), wu, U.format(ce), U.format(u));

		// ma1
		FElem a1 = H.act(u, F.one()), b1 = F.one() * U.counit(u);
		rep.expect_equal("ma1", "u |> 1 = eps(u) 1", a1, b1, wu, F.format(a1), F.format(b1));

		for (const Mono &f : fmonos) {
			if (degree(u) + degree(f) > deg + 1)
				continue;
			const std::string w = wu + ", f=" + F.format(f);
			FElem uf = H.act(u, FElem(f));

			// mp1
			Rational e1 = F.counit(uf), e2 = U.counit(u) * F.counit(f);
			rep.expect_equal("mp1", "eps(u |> f) = eps(u) eps(f)", e1, e2, w, to_string(e1), to_string(e2));

			// mp2
			FTensor l = F.coproduct(uf), r;
			for (const auto &[d, e] : U.coproduct(u))
				for (const auto &[a, ca] : H.coaction(d.first))
					for (const auto &[fp, cf] : F.coproduct(f)) {
						FElem left = H.act(a.first, FElem(fp.first));
						FElem right = F.mul(FElem(a.second), H.act(d.second, FElem(fp.second)));
						r.add_scaled(tensor(left, right), e * ca * cf);
					}
			rep.expect_equal("mp2", "Delta(u |> f) = u(1)<0> |> f(1) (x) u(1)<1> (u(2) |> f(2))", l, r, w,
					 F.format(l), F.format(r));

			// mp5
			UF l5, r5;
			for (const auto &[d, e] : U.coproduct(u)) {
				FElem a = H.act(d.first, FElem(f));
				for (const auto &[b, cb] : H.coaction(d.second))
					l5.add_scaled(tensor(UElem(b.first), F.mul(a, FElem(b.second))), e * cb);
				FElem c2 = H.act(d.second, FElem(f));
				for (const auto &[b, cb] : H.coaction(d.first))
					r5.add_scaled(tensor(UElem(b.first), F.mul(FElem(b.second), c2)), e * cb);
			}
			rep.expect_equal("mp5", "u(2)<0> (x) (u(1) |> f) u(2)<1> = u(1)<0> (x) u(1)<1> (u(2) |> f)", l5, r5,
					 w, H.format_uf(l5), H.format_uf(r5));

			// ma2
			for (const Mono &g : fmonos) {
				if (degree(u) + degree(f) + degree(g) > deg + 1)
					continue;
				FElem l = H.act(u, F.mul(FElem(f), FElem(g))), r;
				for (const auto &[d, e] : U.coproduct(u))
					r.add_scaled(F.mul(H.act(d.first, FElem(f)), H.act(d.second, FElem(g))), e);
				rep.expect_equal("ma2", "u |> (fg) = (u(1) |> f)(u(2) |> g)", l, r, w + ", g=" + F.format(g),
						 F.format(l), F.format(r));
			}
		}

		// mp4
		for (const Mono &v : umonos) {
			if (degree(u) + degree(v) > deg + 1)
				continue;
			UF l = H.coaction(U.mul(u, v)), r;
			for (const auto &[d, e] : U.coproduct(u))
				for (const auto &[a, ca] : H.coaction(d.first))
					for (const auto &[b, cb] : H.coaction(v)) {
						UElem left = U.mul(a.first, b.first);
						FElem right = F.mul(FElem(a.second), H.act(d.second, FElem(b.second)));
						r.add_scaled(tensor(left, right), e * ca * cb);
					}
			rep.expect_equal("mp4", "nabla(uv) = u(1)<0> v<0> (x) u(1)<1> (u(2) |> v<1>)", l, r,
					 wu + ", v=" + U.format(v), H.format_uf(l), H.format_uf(r));
		}
	}

	// H-level Hopf axioms on monomials and seeded samples.
	auto monos = h_monomials_up_to(H, deg);
	std::vector<HElem> elems;
	for (const auto &m : monos)
		elems.emplace_back(m);
	Rng rng(seed);
	for (int s = 0; s < samples; ++s)
		elems.push_back(random_h(H, rng, deg, 3));

	for (const HElem &h : elems) {
		const std::string w = H.format(h);
		HTensor d = H.h_coproduct(h);
		LinComb<std::vector<HMono>> l, r;
		for (const auto &[pr, c] : d) {
			for (const auto &[q, e] : H.h_coproduct(pr.first))
				l.add({q.first, q.second, pr.second}, c * e);
			for (const auto &[q, e] : H.h_coproduct(pr.second))
				r.add({pr.first, q.first, q.second}, c * e);
		}
		rep.expect_equal("H-coassociativity", "(Delta (x) id) Delta = (id (x) Delta) Delta", l, r, w, "", "");

		HElem cl, cr, sl, sr;
		for (const auto &[pr, c] : d) {
			cl.add(pr.second, c * H.h_counit(pr.first));
			cr.add(pr.first, c * H.h_counit(pr.second));
			sl.add_scaled(H.h_mul(H.h_antipode(HElem(pr.first)), HElem(pr.second)), c);
			sr.add_scaled(H.h_mul(HElem(pr.first), H.h_antipode(HElem(pr.second))), c);
		}
		rep.expect_equal("H-counit", "(eps (x) id) Delta(h) = h", cl, h, w, H.format(cl), w);
		rep.expect_equal("H-counit", "(id (x) eps) Delta(h) = h", cr, h, w, H.format(cr), w);
		HElem unit = H.h_one() * H.h_counit(h);
		rep.expect_equal("H-antipode", "S(h(1)) h(2) = eps(h) 1", sl, unit, w, H.format(sl), H.format(unit));
		rep.expect_equal("H-antipode", "h(1) S(h(2)) = eps(h) 1", sr, unit, w, H.format(sr), H.format(unit));
	}

	// Multiplicativity of Delta and eps, associativity.
	const std::size_t npairs = std::min<std::size_t>(elems.size(), 24);
	for (std::size_t a = 0; a < npairs; ++a)
		for (std::size_t b = 0; b < npairs; ++b) {
			const HElem &x = elems[a], &y = elems[b];
			const std::string w = H.format(x) + " ; " + H.format(y);
			HElem xy = H.h_mul(x, y);
			HTensor l = H.h_coproduct(xy), r;
			for (const auto &[p, c] : H.h_coproduct(x))
				for (const auto &[q, e] : H.h_coproduct(y))
					r.add_scaled(tensor(H.h_mul(p.first, q.first), H.h_mul(p.second, q.second)), c * e);
			rep.expect_equal("H-bialgebra", "Delta(hk) = Delta(h) Delta(k)", l, r, w, "", "");
			Rational el = H.h_counit(xy), er = H.h_counit(x) * H.h_counit(y);
			rep.expect_equal("H-bialgebra", "eps(hk) = eps(h) eps(k)", el, er, w, to_string(el), to_string(er));
			const HElem &z = elems[(a * 7 + b * 3) % elems.size()];
			HElem al = H.h_mul(xy, z), ar = H.h_mul(x, H.h_mul(y, z));
			rep.expect_equal("H-associativity", "(hk)l = h(kl)", al, ar, w + " ; " + H.format(z), H.format(al),
					 H.format(ar));
		}
	return rep;
}

Report check_mpi(const LieHopf &H, const ModularPair &mp, int deg)
{
	Report rep;
	const auto &F = H.F();
	const std::string ws = "sigma=" + F.format(mp.sigma);

	FTensor ds = F.coproduct(mp.sigma), ss = tensor(mp.sigma, mp.sigma);
	rep.expect_equal("sigma-group-like", "Delta(sigma) = sigma (x) sigma", ds, ss, ws, F.format(ds), F.format(ss));
	Rational es = F.counit(mp.sigma);
	rep.expect_equal("sigma-group-like", "eps(sigma) = 1", es, Rational(1), ws, to_string(es), "1");
	Rational dsig = delta_h(H, mp, H.h_from_f(mp.sigma));
	rep.expect_equal("delta-sigma", "delta(sigma) = 1", dsig, Rational(1), ws, to_string(dsig), "1");

	for (std::size_t i = 0; i < H.dim(); ++i)
		for (std::size_t j = 0; j < H.dim(); ++j) {
			Rational d = 0;
			for (const auto &[k, c] : H.g().bracket(i, j))
				d += c * mp.delta[k];
			rep.expect_equal("delta-character", "delta([X,Y]) = 0", d, Rational(0),
					 H.g().names()[i] + ", " + H.g().names()[j], to_string(d), "0");
		}

	HElem sig = H.h_from_f(mp.sigma);
	HElem sig_inv = H.h_from_f(F.antipode(mp.sigma));
	for (const HMono &m : h_monomials_up_to(H, deg)) {
		HElem h(m);
		HElem l = twisted_antipode(H, mp, twisted_antipode(H, mp, h));
		HElem r = H.h_mul(H.h_mul(sig, h), sig_inv);
		rep.expect_equal("S-delta-squared", "S_delta^2(h) = sigma h sigma^-1", l, r, H.format(m), H.format(l),
				 H.format(r));
	}
	return rep;
}

} // namespace lhc
