#include "lhc/vanest.hpp"

#include <algorithm>
#include <numeric>

namespace lhc {

namespace {

Mono unit_mono_at(std::size_t n, std::size_t i)
{
	Mono m(n, 0);
	m[i] = 1;
	return m;
}

Rational coord(const LieVec &v, std::size_t k)
{
	auto it = v.find(k);
	return it == v.end() ? Rational(0) : it->second;
}

std::string fmt_monos(const Enveloping &U, const MonoN &v)
{
	std::string s;
	for (std::size_t i = 0; i < v.size(); ++i)
		s += (i ? " (x) " : "") + U.format(v[i]);
	return s.empty() ? "1" : s;
}

std::string fmt_fmonos(const HopfAlgebraF &F, const MonoN &f)
{
	std::string s;
	for (std::size_t i = 0; i < f.size(); ++i)
		s += (i ? " (x) " : "") + F.format(f[i]);
	return s.empty() ? "1" : s;
}

} // namespace

Report check_pairing(const Pairing &P, const LieHopf &H, int deg)
{
	Report rep;
	const auto &F = P.F();
	const auto &A = P.algebra();
	const auto &U1 = A.U1();
	const auto &U2 = A.U2();
	const auto fmonos = F.monomials_up_to(deg);
	const auto vmonos = U2.monomials_up_to(deg);
	const auto umonos = U1.monomials_up_to(deg);
	auto pe = [&](const FElem &f, const UElem &v) { return P.eval(f, v); };

	for (const Mono &v : vmonos) {
		Rational l = P.eval(F.unit_mono(), v), r = U2.counit(v);
		rep.expect_equal("pairing-unit", "<1, v> = eps(v)", l, r, "v=" + U2.format(v), to_string(l), to_string(r));
	}
	for (const Mono &f : fmonos) {
		Rational l = P.eval(f, U2.unit_mono()), r = F.counit(f);
		rep.expect_equal("pairing-counit", "<f, 1> = eps(f)", l, r, "f=" + F.format(f), to_string(l), to_string(r));
	}

	for (const Mono &f : fmonos)
		for (const Mono &g : fmonos) {
			if (degree(f) + degree(g) > deg)
				continue;
			FElem fg = F.mul(FElem(f), FElem(g));
			for (const Mono &v : vmonos) {
				Rational l = pe(fg, UElem(v)), r = 0;
				for (const auto &[vv, c] : U2.coproduct(v))
					r += c * P.eval(f, vv.first) * P.eval(g, vv.second);
				rep.expect_equal("pairing-product", "<fg, v> = <f, v(1)><g, v(2)>", l, r,
						 "f=" + F.format(f) + ", g=" + F.format(g) + ", v=" + U2.format(v), to_string(l),
						 to_string(r));
			}
		}

	for (const Mono &f : fmonos) {
		const FTensor df = F.coproduct(f);
		for (const Mono &v : vmonos)
			for (const Mono &w : vmonos) {
				if (degree(v) + degree(w) > deg)
					continue;
				Rational l = pe(FElem(f), U2.mul(v, w)), r = 0;
				for (const auto &[ff, c] : df)
					r += c * P.eval(ff.first, v) * P.eval(ff.second, w);
				rep.expect_equal("pairing-coproduct", "<f, vw> = <f(1), v><f(2), w>", l, r,
						 "f=" + F.format(f) + ", v=" + U2.format(v) + ", w=" + U2.format(w), to_string(l),
						 to_string(r));
			}
		for (const Mono &v : vmonos) {
			Rational l = pe(F.antipode(f), UElem(v)), r = pe(FElem(f), U2.antipode(v));
			rep.expect_equal("pairing-antipode", "<S(f), v> = <f, S(v)>", l, r,
					 "f=" + F.format(f) + ", v=" + U2.format(v), to_string(l), to_string(r));
		}
	}

	// <v, u |> f> = <v <| u, f>
	for (const Mono &u : umonos)
		for (const Mono &f : fmonos) {
			if (degree(u) + degree(f) > deg + 1)
				continue;
			FElem uf = H.act(u, FElem(f));
			for (const Mono &v : vmonos) {
				Rational l = pe(uf, UElem(v));
				Rational r = pe(FElem(f), A.right_act(v, u));
				rep.expect_equal("balanced", "<v, u |> f> = <v <| u, f>", l, r,
						 "u=" + U1.format(u) + ", f=" + F.format(f) + ", v=" + U2.format(v), to_string(l),
						 to_string(r));
			}
		}

	// u<0> <v, u<1>> = v |> u
	for (const Mono &u : umonos) {
		const UF cu = H.coaction(u);
		for (const Mono &v : vmonos) {
			UElem l;
			for (const auto &[uf, c] : cu) {
				Rational x = P.eval(uf.second, v);
				if (!is_zero(x))
					l.add(uf.first, c * x);
			}
			UElem r = A.left_act(v, u);
			rep.expect_equal("coaction-compatible", "u<0> <v, u<1>> = v |> u", l, r,
					 "u=" + U1.format(u) + ", v=" + U2.format(v), U1.format(l), U1.format(r));
		}
	}
	return rep;
}

void check_levi(const MatchedPair &mp, const std::vector<int> &levi)
{
	const std::size_t n1 = mp.g1.dim(), n2 = mp.g2.dim();
	std::vector<int> sorted = levi;
	std::sort(sorted.begin(), sorted.end());
	if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
		throw LeviError("levi indices repeat");
	for (int z : levi)
		if (z < 0 || static_cast<std::size_t>(z) >= n2)
			throw LeviError("levi index out of range");
	if (!is_subalgebra(mp.g2, levi))
		throw LeviError("h not a subalgebra of g2");
	auto in_h = [&](std::size_t k) { return std::binary_search(sorted.begin(), sorted.end(), static_cast<int>(k)); };
	for (int z : levi)
		for (std::size_t i = 0; i < n1; ++i)
			for (const auto &[k, c] : mp.right[static_cast<std::size_t>(z)][i])
				if (!is_zero(c) && !in_h(k))
					throw LeviError("h not g1-invariant: " + mp.g2.names()[static_cast<std::size_t>(z)] + " <| " +
							mp.g1.names()[i] + " leaves h");
	// zeta |> [X, Y] = [zeta |> X, Y] + [X, zeta |> Y]
	for (int z : levi) {
		auto act = [&](const LieVec &x) {
			LieVec out;
			for (const auto &[i, c] : x)
				axpy(out, c, mp.left[static_cast<std::size_t>(z)][i]);
			return out;
		};
		for (std::size_t i = 0; i < n1; ++i)
			for (std::size_t j = i + 1; j < n1; ++j) {
				LieVec l = act(mp.g1.bracket(i, j));
				LieVec r = mp.g1.bracket(mp.left[static_cast<std::size_t>(z)][i], unit(j));
				axpy(r, 1, mp.g1.bracket(unit(i), mp.left[static_cast<std::size_t>(z)][j]));
				if (l != r)
					throw LeviError("h does not act by derivations on g1: " +
							mp.g2.names()[static_cast<std::size_t>(z)] + " on [" + mp.g1.names()[i] + "," +
							mp.g1.names()[j] + "]");
			}
	}
}

VanEst::VanEst(const Reduced &R, const MatchedPairAlgebra &A, const Pairing &P, std::vector<int> levi)
    : R_(R), A_(A), P_(P), levi_(std::move(levi))
{
	const auto &mp = A.pair();
	check_levi(mp, levi_);
	std::sort(levi_.begin(), levi_.end());
	n1_ = mp.g1.dim();
	a_ = double_crossed_sum(mp);
	rho_a_ = combined_module(R.sayd().module(), mp);
	for (int z : levi_)
		h_.push_back(static_cast<int>(n1_) + z);
	for (int z = 0; z < static_cast<int>(mp.g2.dim()); ++z)
		if (!std::binary_search(levi_.begin(), levi_.end(), z))
			l_.push_back(z);
	comp_ = complement_of(a_.dim(), h_);
	inv_ = relative_invariant_basis(a_, h_, rho_a_);

	const std::size_t md = rho_a_.dim;
	for (std::size_t s = 0; s <= comp_.size(); ++s) {
		spaces_.emplace_back(md, comp_, s);
		const auto &basis = spaces_.back();
		const std::size_t n = basis.size();
		if (h_.empty()) {
			proj_.emplace_back();
			continue;
		}
		// V = V^h (+) sum of images of h; the projection kills the second summand.
		std::vector<SparseVec> gens;
		for (int z : h_) {
			SparseMatrix act = relative_action_matrix(a_, comp_, rho_a_, basis, static_cast<std::size_t>(z));
			for (std::size_t c = 0; c < n; ++c)
				gens.push_back(act.column(c));
		}
		SubspaceBasis img = span(n, gens);
		const SubspaceBasis &inv = inv_[s];
		if (inv.dim() + img.dim() != n)
			throw LeviError("h does not act semisimply on the cochains of degree " + std::to_string(s));
		SparseMatrix B(n, n);
		for (std::size_t c = 0; c < inv.dim(); ++c)
			B.set_column(c, inv.vectors[c]);
		for (std::size_t c = 0; c < img.dim(); ++c)
			B.set_column(inv.dim() + c, img.vectors[c]);
		SparseMatrix Pm(n, n);
		for (std::size_t e = 0; e < n; ++e) {
			SparseMatrix aug(n, n + 1);
			for (std::size_t c = 0; c < n; ++c)
				aug.set_column(c, B.column(c));
			aug.set(e, n, -1);
			auto ker = rank_kernel(aug).kernel;
			if (ker.dim() != 1)
				throw std::logic_error("projection onto invariants is not well defined");
			SparseVec x = ker.vectors[0];
			Rational scale = 1 / x.at(n);
			SparseVec col;
			for (std::size_t c = 0; c < inv.dim(); ++c) {
				auto it = x.find(c);
				if (it != x.end())
					axpy(col, it->second * scale, inv.vectors[c]);
			}
			Pm.set_column(e, col);
		}
		proj_.push_back(std::move(Pm));
	}
}

Rational VanEst::theta(const MonoN &f, const MonoN &v) const
{
	if (f.size() != v.size())
		throw std::invalid_argument("theta: leg count mismatch");
	Rational r = 1;
	for (std::size_t i = 0; i < f.size() && !is_zero(r); ++i)
		r *= P_.eval(f[i], v[i]);
	return r;
}

Rational VanEst::theta(const LinComb<MonoN> &f, const LinComb<MonoN> &v) const
{
	Rational r = 0;
	for (const auto &[fk, fc] : f)
		for (const auto &[vk, vc] : v)
			r += fc * vc * theta(fk, vk);
	return r;
}

// (v^1 (x) w) * u = v^1 <| (w(1) |> u(1)) (x) w(2) * u(2), w(1) the product of the first legs
LinComb<MonoN> VanEst::star(const MonoN &v, const Mono &u) const
{
	const auto &U1 = A_.U1();
	const auto &U2 = A_.U2();
	LinComb<MonoN> out;
	if (v.empty()) {
		Rational e = U1.counit(u);
		if (!is_zero(e))
			out.add(MonoN{}, e);
		return out;
	}
	if (v.size() == 1) {
		for (const auto &[m, c] : A_.right_act(v[0], u))
			out.add(MonoN{m}, c);
		return out;
	}
	std::vector<LinComb<Mono2>> legs;
	for (std::size_t i = 1; i < v.size(); ++i)
		legs.push_back(U2.coproduct(v[i]));
	const auto du = U1.coproduct(u);
	for (const auto &[split, cs] : expand_tensor(legs)) {
		UElem first = U2.one();
		MonoN second;
		for (const auto &[a, b] : split) {
			first = U2.mul(first, UElem(a));
			second.push_back(b);
		}
		for (const auto &[uu, cu] : du) {
			UElem x = A_.left_act(first, UElem(uu.first));
			UElem y = A_.right_act(UElem(v[0]), x);
			if (y.empty())
				continue;
			LinComb<MonoN> rest = star(second, uu.second);
			for (const auto &[ym, yc] : y)
				for (const auto &[rk, rc] : rest) {
					MonoN key{ym};
					key.insert(key.end(), rk.begin(), rk.end());
					out.add(key, cs * cu * yc * rc);
				}
		}
	}
	return out;
}

LinComb<MonoN> VanEst::star(const LinComb<MonoN> &v, const UElem &u) const
{
	LinComb<MonoN> out;
	for (const auto &[vk, vc] : v)
		for (const auto &[um, uc] : u)
			out.add_scaled(star(vk, um), vc * uc);
	return out;
}

RelChain VanEst::up(const RelChain &c) const
{
	const auto &mp = A_.pair();
	const int n1 = static_cast<int>(n1_);
	RelChain out;
	for (const auto &[k, ck] : c) {
		const auto &w = k.wedge;
		const auto split = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [&](int x) { return x < n1; }));
		for (int i = 0; i < n1; ++i) {
			auto emit = [&](std::size_t m, std::vector<int> seq, const Rational &x) {
				seq.insert(seq.begin(), i);
				int s = sort_sign(seq);
				if (s != 0)
					out.add(ExtKey{m, seq}, ck * x * s);
			};
			// right action of X_i on m (x) theta^T: -X_i.m (x) theta^T - m (x) T_X theta^T
			for (const auto &[b, x] : rho_a_.rho[static_cast<std::size_t>(i)].column(k.m))
				emit(b, w, -x);
			for (std::size_t t = split; t < w.size(); ++t) {
				const std::size_t kk = static_cast<std::size_t>(w[t]) - n1_;
				for (int j : l_) {
					Rational x = coord(mp.right[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], kk);
					if (is_zero(x))
						continue;
					std::vector<int> seq = w;
					seq[t] = n1 + j;
					emit(k.m, seq, -x);
				}
			}
		}
		// d theta^k = 1/2 C^k_ij theta^i ^ theta^j on the g1 part
		for (std::size_t t = 0; t < split; ++t) {
			const auto kk = static_cast<std::size_t>(w[t]);
			Rational st = t % 2 == 0 ? ck : -ck;
			for (int i = 0; i < n1; ++i)
				for (int j = i + 1; j < n1; ++j) {
					Rational cs = mp.g1.structure(static_cast<std::size_t>(i), static_cast<std::size_t>(j), kk);
					if (is_zero(cs))
						continue;
					std::vector<int> seq(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(t));
					seq.push_back(i);
					seq.push_back(j);
					seq.insert(seq.end(), w.begin() + static_cast<std::ptrdiff_t>(t) + 1, w.end());
					int s = sort_sign(seq);
					if (s != 0)
						out.add(ExtKey{k.m, seq}, st * cs * s);
				}
		}
	}
	return out;
}

RelChain VanEst::right(const RelChain &c) const
{
	const auto &mp = A_.pair();
	const int n1 = static_cast<int>(n1_);
	RelChain out;
	for (const auto &[k, ck] : c) {
		const auto &w = k.wedge;
		const auto split = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [&](int x) { return x < n1; }));
		for (int j : l_) {
			const int z = n1 + j;
			// xi_j . (m (x) theta^S) (x) theta^z ^ theta^T
			auto emit = [&](std::size_t m, std::vector<int> seq, const Rational &x) {
				seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(split), z);
				int s = sort_sign(seq);
				if (s != 0)
					out.add(ExtKey{m, seq}, ck * x * s);
			};
			for (const auto &[b, x] : rho_a_.rho[static_cast<std::size_t>(z)].column(k.m))
				emit(b, w, x);
			// xi . theta^k = -sum_i (xi |> X_i)_k theta^i
			for (std::size_t t = 0; t < split; ++t) {
				const auto kk = static_cast<std::size_t>(w[t]);
				for (int i = 0; i < n1; ++i) {
					Rational x = coord(mp.left[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], kk);
					if (is_zero(x))
						continue;
					std::vector<int> seq = w;
					seq[t] = i;
					emit(k.m, seq, -x);
				}
			}
		}
		// d theta^k = -1/2 C^k_ij theta^i ^ theta^j on l, brackets taken modulo h
		for (std::size_t t = split; t < w.size(); ++t) {
			const std::size_t kk = static_cast<std::size_t>(w[t]) - n1_;
			Rational st = (t - split) % 2 == 0 ? -ck : ck;
			for (std::size_t a = 0; a < l_.size(); ++a)
				for (std::size_t b = a + 1; b < l_.size(); ++b) {
					const auto i = static_cast<std::size_t>(l_[a]), j = static_cast<std::size_t>(l_[b]);
					Rational cs = mp.g2.structure(i, j, kk);
					if (is_zero(cs))
						continue;
					std::vector<int> seq(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(t));
					seq.push_back(n1 + l_[a]);
					seq.push_back(n1 + l_[b]);
					seq.insert(seq.end(), w.begin() + static_cast<std::ptrdiff_t>(t) + 1, w.end());
					int s = sort_sign(seq);
					if (s != 0)
						out.add(ExtKey{k.m, seq}, st * cs * s);
				}
		}
	}
	return out;
}

RelChain VanEst::total(const RelChain &c) const
{
	RelChain out;
	for (const auto &[k, ck] : c) {
		RelChain one(k, ck);
		out += up(one);
		const auto p = std::count_if(k.wedge.begin(), k.wedge.end(), [&](int x) { return x < static_cast<int>(n1_); });
		out.add_scaled(right(one), p % 2 == 0 ? 1 : -1);
	}
	return out;
}

RelChain VanEst::coboundary_a(const RelChain &c) const
{
	RelChain full = ce_coboundary(a_, rho_a_.with_side(Side::Right), c);
	RelChain out;
	for (const auto &[k, x] : full)
		if (std::none_of(k.wedge.begin(), k.wedge.end(),
				 [&](int i) { return std::binary_search(h_.begin(), h_.end(), i); }))
			out.add(k, x);
	return out;
}

namespace {

// omega(e_{seq_1}, ..., e_{seq_s}) for basis vectors of a/h.
Rational evaluate(const RelChain &omega, std::size_t m, std::vector<int> seq)
{
	int s = sort_sign(seq);
	if (s == 0)
		return 0;
	return omega.coeff(ExtKey{m, seq}) * s;
}

} // namespace

Bigraded VanEst::natural(const RelChain &omega) const
{
	Bigraded out;
	const int n1 = static_cast<int>(n1_);
	for (const auto &[k, c] : omega) {
		std::vector<int> Z, zeta;
		for (int i : k.wedge)
			(i < n1 ? Z : zeta).push_back(i);
		std::vector<int> seq = Z;
		seq.insert(seq.end(), zeta.begin(), zeta.end());
		Rational v = evaluate(omega, k.m, seq);
		if (!is_zero(v))
			out[{static_cast<int>(Z.size()), static_cast<int>(zeta.size())}].add(ExtKey{k.m, seq}, v);
	}
	return out;
}

RelChain VanEst::natural_inv(const Bigraded &parts) const
{
	const int n1 = static_cast<int>(n1_);
	RelChain out;
	for (const auto &[pq, part] : parts) {
		const auto [p, q] = pq;
		const std::size_t s = static_cast<std::size_t>(p + q);
		if (s > comp_.size())
			continue;
		std::vector<std::size_t> ms;
		for (const auto &[k, c] : part)
			ms.push_back(k.m);
		std::sort(ms.begin(), ms.end());
		ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
		for (const auto &W : subsets(comp_, s))
			for (std::size_t m : ms) {
				// sum over (p,q) shuffles; mu sees the g1 components, nu the l components
				Rational v = 0;
				std::vector<int> pick(s, 0);
				std::fill(pick.begin(), pick.begin() + p, 1);
				do {
					std::vector<int> Z, zeta, perm;
					bool ok = true;
					for (std::size_t r = 0; r < s && ok; ++r)
						if (pick[r]) {
							ok = W[r] < n1;
							Z.push_back(W[r]);
							perm.push_back(static_cast<int>(r));
						}
					for (std::size_t r = 0; r < s && ok; ++r)
						if (!pick[r]) {
							ok = W[r] >= n1;
							zeta.push_back(W[r]);
							perm.push_back(static_cast<int>(r));
						}
					if (!ok)
						continue;
					int sign = sort_sign(perm);
					std::vector<int> seq = Z;
					seq.insert(seq.end(), zeta.begin(), zeta.end());
					v += evaluate(part, m, seq) * sign;
				} while (std::prev_permutation(pick.begin(), pick.end()));
				if (!is_zero(v))
					out.add(ExtKey{m, W}, v);
			}
	}
	return out;
}

RelChain VanEst::project_invariant(const RelChain &c) const
{
	if (h_.empty())
		return c;
	std::map<std::size_t, RelChain> by_degree;
	for (const auto &[k, x] : c)
		by_degree[k.wedge.size()].add(k, x);
	RelChain out;
	for (const auto &[s, part] : by_degree)
		out += spaces_[s].from_vec(proj_[s].apply(spaces_[s].to_vec(part)));
	return out;
}

bool VanEst::is_invariant(const RelChain &c) const
{
	std::map<std::size_t, RelChain> by_degree;
	for (const auto &[k, x] : c)
		by_degree[k.wedge.size()].add(k, x);
	for (const auto &[s, part] : by_degree) {
		if (s >= spaces_.size())
			return false;
		for (const auto &[k, x] : part)
			if (!spaces_[s].index(k))
				return false;
		if (!membership(spaces_[s].to_vec(part), inv_[s]))
			return false;
	}
	return true;
}

RelChain VanEst::van_est(const RedChain &c) const
{
	const std::size_t n2 = A_.U2().ngens();
	RelChain out;
	for (const auto &[k, ck] : c) {
		const std::size_t q = k.f.size();
		if (q > l_.size())
			continue;
		std::vector<int> base;
		for (int i : k.wedge)
			base.push_back(i);
		for (const auto &T : subsets(l_, q)) {
			Rational v = 0;
			std::vector<int> perm(q);
			std::iota(perm.begin(), perm.end(), 0);
			do {
				std::vector<int> tmp = perm;
				Rational x = sort_sign(tmp);
				for (std::size_t i = 0; i < q && !is_zero(x); ++i)
					x *= P_.eval(k.f[i], unit_mono_at(n2, static_cast<std::size_t>(T[static_cast<std::size_t>(perm[i])])));
				v += x;
			} while (std::next_permutation(perm.begin(), perm.end()));
			if (is_zero(v))
				continue;
			std::vector<int> seq = base;
			for (int j : T)
				seq.push_back(static_cast<int>(n1_) + j);
			out.add(ExtKey{k.m, seq}, ck * v);
		}
	}
	return project_invariant(out);
}

RelChain VanEst::sample_invariant(Rng &rng, int s) const
{
	RelChain out;
	if (s < 0 || static_cast<std::size_t>(s) >= inv_.size())
		return out;
	SparseVec v;
	for (const auto &b : inv_[static_cast<std::size_t>(s)].vectors)
		if (rng.coin())
			axpy(v, rng.small_rational(), b);
	return spaces_[static_cast<std::size_t>(s)].from_vec(v);
}

std::string VanEst::format(const RelChain &c) const
{
	const auto &M = R_.sayd().module();
	return format_lincomb<ExtKey>(c, [&](const ExtKey &k) {
		std::string s = M.basis[k.m];
		for (std::size_t t = 0; t < k.wedge.size(); ++t)
			s += std::string(t ? "^" : " (x) ") + "th_" + a_.names()[static_cast<std::size_t>(k.wedge[t])];
		return s;
	});
}

Report check_van_est(const VanEst &V, int p_max, int q_max, int samples, std::uint64_t seed, int leg_degree)
{
	Report rep;
	Rng rng(seed);
	const Reduced &R = V.reduced();
	auto fmt_red = [&](const RedChain &c) { return R.format(c, true); };
	auto expect = [&](const std::string &id, const std::string &stmt, const RelChain &l, const RelChain &r,
			  const std::string &w) {
		rep.expect_equal(id, stmt, l, r, w, V.format(l), V.format(r));
	};
	const int n1 = static_cast<int>(V.n1());
	for (int p = 0; p <= std::min(p_max, n1); ++p)
		for (int q = 0; q <= q_max; ++q)
			for (int n = 0; n < samples; ++n) {
				RedChain c = R.sample(rng, p, q, n % 2 == 1, leg_degree);
				const std::string w = "p=" + std::to_string(p) + " q=" + std::to_string(q) + ", c=" + fmt_red(c);
				RelChain vc = V.van_est(c);
				expect("vanest-bF", "V b*_F = right V", V.van_est(R.b_star_F(c)), V.right(vc), w);
				expect("vanest-dg", "V d_g* = up V", V.van_est(R.coboundary_gstar(c)), V.up(vc), w);
				rep.expect_equal("vanest-invariant", "V lands in the h-invariants", V.is_invariant(vc), true, w,
						 V.format(vc), "invariant");
				// a unit in any tensor slot is killed
				for (int j = 0; j < q; ++j) {
					RedChain deg;
					for (const auto &[k, x] : c) {
						RedKey kk = k;
						kk.f[static_cast<std::size_t>(j)] = R.sayd().hopf().F().unit_mono();
						deg.add(kk, x);
					}
					expect("vanest-degenerate", "V vanishes on degenerate cochains", V.van_est(deg), {},
					       w + ", slot " + std::to_string(j));
				}
			}

	const int top = static_cast<int>(V.complement().size());
	for (int s = 0; s <= top; ++s)
		for (int n = 0; n < samples; ++n) {
			RelChain om = V.sample_invariant(rng, s);
			const std::string w = "s=" + std::to_string(s) + ", omega=" + V.format(om);
			expect("up-squared", "up up = 0", V.up(V.up(om)), {}, w);
			expect("right-squared", "right right = 0", V.right(V.right(om)), {}, w);
			expect("rel-bicomplex", "up right = right up", V.up(V.right(om)), V.right(V.up(om)), w);
			rep.expect_equal("rel-invariant", "up and right preserve h-invariants",
					 V.is_invariant(V.up(om)) && V.is_invariant(V.right(om)), true, w, "", "");
			expect("natural-round-trip", "natural^-1 natural = id", V.natural_inv(V.natural(om)), om, w);
			// the exterior CE convention of a and the evaluation one of the g2 direction
			// differ by (-1)^q on each bidegree
			Bigraded parts = V.natural(om);
			for (auto &[pq, part] : parts)
				if (pq.second % 2 == 1)
					part *= Rational(-1);
			Bigraded lhs = V.natural(V.coboundary_a(om));
			for (auto &[pq, part] : lhs)
				if (pq.second % 2 == 1)
					part *= Rational(-1);
			expect("natural-chain", "(-1)^q natural d_a = total (-1)^q natural", V.natural_inv(lhs),
			       V.total(V.natural_inv(parts)), w);
		}
	return rep;
}

Report check_theta_star(const VanEst &V, int q_max, int deg, int samples, std::uint64_t seed)
{
	Report rep;
	Rng rng(seed);
	const auto &F = V.pairing().F();
	const auto &U1 = V.algebra().U1();
	const auto &U2 = V.algebra().U2();
	const auto &bi = V.reduced().bicyclic();
	const auto fmonos = F.monomials_up_to(deg);
	const auto umonos = U1.monomials_up_to(deg);
	const auto vmonos = U2.monomials_up_to(deg);
	auto pick = [&](const std::vector<Mono> &pool) { return pool[rng.below(pool.size())]; };
	auto draw = [&](const std::vector<Mono> &pool, int q) {
		MonoN out;
		for (int i = 0; i < q; ++i)
			out.push_back(pick(pool));
		return out;
	};
	auto fmt_v = [&](const LinComb<MonoN> &x) {
		return format_lincomb<MonoN>(x, [&](const MonoN &k) { return fmt_monos(U2, k); });
	};

	for (int q = 0; q <= q_max; ++q)
		for (int n = 0; n < samples; ++n) {
			const MonoN f = draw(fmonos, q);
			const MonoN a = draw(vmonos, q + 1);
			const std::string w = "f=" + fmt_fmonos(F, f) + ", v=" + fmt_monos(U2, a);

			// coalgebra Hochschild coboundary of f against the algebra one of theta(f)
			LinComb<MonoN> bf;
			for (int i = 0; i <= q + 1; ++i) {
				const Rational sg = i % 2 == 0 ? 1 : -1;
				if (i == 0 || i == q + 1) {
					MonoN k = f;
					k.insert(i == 0 ? k.begin() : k.end(), F.unit_mono());
					bf.add(k, sg);
					continue;
				}
				for (const auto &[dd, c] : F.coproduct(f[static_cast<std::size_t>(i - 1)])) {
					MonoN k(f.begin(), f.begin() + (i - 1));
					k.push_back(dd.first);
					k.push_back(dd.second);
					k.insert(k.end(), f.begin() + i, f.end());
					bf.add(k, sg * c);
				}
			}
			Rational l = V.theta(bf, LinComb<MonoN>(a)), r = 0;
			for (int i = 0; i <= q + 1; ++i) {
				const Rational sg = i % 2 == 0 ? 1 : -1;
				if (i == 0 || i == q + 1) {
					const Mono &e = i == 0 ? a.front() : a.back();
					MonoN rest(a.begin() + (i == 0 ? 1 : 0), a.end() - (i == 0 ? 0 : 1));
					r += sg * U2.counit(e) * V.theta(f, rest);
					continue;
				}
				for (const auto &[m, c] : U2.mul(a[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(i)])) {
					MonoN k(a.begin(), a.begin() + (i - 1));
					k.push_back(m);
					k.insert(k.end(), a.begin() + i + 1, a.end());
					r += sg * c * V.theta(f, k);
				}
			}
			rep.expect_equal("theta-chain", "theta(b f) = b theta(f)", l, r, w, to_string(l), to_string(r));

			const MonoN v = draw(vmonos, q);
			const Mono u1 = pick(umonos), u2 = pick(umonos);
			const LinComb<MonoN> vv(v);
			const std::string wv = "v=" + fmt_monos(U2, v) + ", u1=" + U1.format(u1) + ", u2=" + U1.format(u2);
			LinComb<MonoN> one = V.star(vv, U1.one());
			rep.expect_equal("star-unit", "v * 1 = v", one, vv, wv, fmt_v(one), fmt_v(vv));
			LinComb<MonoN> ll = V.star(V.star(vv, UElem(u1)), UElem(u2));
			LinComb<MonoN> rr = V.star(vv, U1.mul(u1, u2));
			rep.expect_equal("star-action", "(v * u1) * u2 = v * (u1 u2)", ll, rr, wv, fmt_v(ll), fmt_v(rr));

			Rational el = V.theta(bi.bullet(u1, f), vv);
			Rational er = V.theta(LinComb<MonoN>(f), V.star(vv, UElem(u1)));
			rep.expect_equal("theta-equivariant", "theta(u . f)(v) = theta(f)(v * u)", el, er,
					 "f=" + fmt_fmonos(F, f) + ", " + wv, to_string(el), to_string(er));
		}
	return rep;
}

RelativeCohomology relative_cohomology(const MatchedPair &mp, const InducedModule &M, const std::vector<int> &levi,
				       int max_degree)
{
	check_levi(mp, levi);
	RelativeCohomology out;
	out.a = double_crossed_sum(mp);
	std::vector<int> h;
	for (int z : levi)
		h.push_back(static_cast<int>(mp.g1.dim()) + z);
	std::sort(h.begin(), h.end());
	RelativeComplex rc = relative_complex(out.a, h, combined_module(M, mp));
	Cohomology co = cohomology_dims(rc.dims(), rc.d);
	const auto want = static_cast<std::size_t>(std::max(max_degree, 0) + 1);
	out.dims.assign(want, 0);
	out.representatives.resize(want);
	for (std::size_t q = 0; q < want && q < co.dims.size(); ++q) {
		out.dims[q] = co.dims[q];
		for (const auto &coords : co.representatives[q]) {
			SparseVec v;
			for (const auto &[i, x] : coords)
				axpy(v, x, rc.invariants[q].vectors[i]);
			out.representatives[q].push_back(rc.spaces[q].from_vec(v));
		}
	}
	return out;
}

} // namespace lhc
