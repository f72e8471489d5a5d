#include "lhc/matched.hpp"

#include "lhc/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace lhc {

MatchedPair::MatchedPair(LieAlgebra a, LieAlgebra b)
    : g1(std::move(a)), g2(std::move(b)), right(g2.dim(), std::vector<LieVec>(g1.dim())),
      left(g2.dim(), std::vector<LieVec>(g1.dim()))
{
}

LieVec MatchedPair::act_right(const LieVec &zeta, const LieVec &x) const
{
	LieVec out;
	for (const auto &[a, ca] : zeta)
		for (const auto &[i, ci] : x)
			axpy(out, ca * ci, right[a][i]);
	return out;
}

LieVec MatchedPair::act_left(const LieVec &zeta, const LieVec &x) const
{
	LieVec out;
	for (const auto &[a, ca] : zeta)
		for (const auto &[i, ci] : x)
			axpy(out, ca * ci, left[a][i]);
	return out;
}

namespace {

LieVec sum(LieVec a, const LieVec &b, const Rational &s = 1)
{
	axpy(a, s, b);
	return a;
}

} // namespace

Report check_matched_pair(const MatchedPair &mp)
{
	Report rep;
	const auto &g1 = mp.g1;
	const auto &g2 = mp.g2;
	const std::size_t n = g1.dim(), k = g2.dim();
	for (std::size_t a = 0; a < k; ++a)
		for (std::size_t b = 0; b < k; ++b)
			for (std::size_t i = 0; i < n; ++i) {
				LieVec z = unit(a), xi = unit(b), x = unit(i);
				std::string w = g2.names()[a] + "," + g2.names()[b] + "," + g1.names()[i];
				LieVec l1 = mp.act_left(g2.bracket(z, xi), x);
				LieVec r1 = sum(mp.act_left(z, mp.act_left(xi, x)), mp.act_left(xi, mp.act_left(z, x)), -1);
				rep.expect_equal("mp-L-1", "[zeta,xi] |> X = zeta |> (xi |> X) - xi |> (zeta |> X)", l1, r1, w,
						 g1.format(l1), g1.format(r1));
				LieVec l4 = mp.act_right(g2.bracket(z, xi), x);
				LieVec r4 = g2.bracket(mp.act_right(z, x), xi);
				r4 = sum(r4, g2.bracket(z, mp.act_right(xi, x)));
				r4 = sum(r4, mp.act_right(z, mp.act_left(xi, x)));
				r4 = sum(r4, mp.act_right(xi, mp.act_left(z, x)), -1);
				rep.expect_equal("mp-L-4",
						 "[zeta,xi] <| X = [zeta <| X, xi] + [zeta, xi <| X] + zeta <| (xi |> X) - xi <| (zeta |> X)",
						 l4, r4, w, g2.format(l4), g2.format(r4));
			}
	for (std::size_t a = 0; a < k; ++a)
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j) {
				LieVec z = unit(a), x = unit(i), y = unit(j);
				std::string w = g2.names()[a] + "," + g1.names()[i] + "," + g1.names()[j];
				LieVec l2 = mp.act_right(z, g1.bracket(x, y));
				LieVec r2 = sum(mp.act_right(mp.act_right(z, x), y), mp.act_right(mp.act_right(z, y), x), -1);
				rep.expect_equal("mp-L-2", "zeta <| [X,Y] = (zeta <| X) <| Y - (zeta <| Y) <| X", l2, r2, w,
						 g2.format(l2), g2.format(r2));
				LieVec l3 = mp.act_left(z, g1.bracket(x, y));
				LieVec r3 = g1.bracket(mp.act_left(z, x), y);
				r3 = sum(r3, g1.bracket(x, mp.act_left(z, y)));
				r3 = sum(r3, mp.act_left(mp.act_right(z, x), y));
				r3 = sum(r3, mp.act_left(mp.act_right(z, y), x), -1);
				rep.expect_equal("mp-L-3",
						 "zeta |> [X,Y] = [zeta |> X, Y] + [X, zeta |> Y] + (zeta <| X) |> Y - (zeta <| Y) |> X",
						 l3, r3, w, g1.format(l3), g1.format(r3));
			}
	return rep;
}

LieAlgebra double_crossed_sum(const MatchedPair &mp)
{
	const std::size_t n = mp.g1.dim(), k = mp.g2.dim();
	std::vector<std::string> names = mp.g1.names();
	names.insert(names.end(), mp.g2.names().begin(), mp.g2.names().end());
	LieAlgebra a(names);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (const auto &[c, v] : mp.g1.bracket(i, j))
				a.set_structure(i, j, c, v);
	for (std::size_t x = 0; x < k; ++x)
		for (std::size_t y = 0; y < k; ++y)
			for (const auto &[c, v] : mp.g2.bracket(x, y))
				a.set_structure(n + x, n + y, n + c, v);
	for (std::size_t z = 0; z < k; ++z)
		for (std::size_t i = 0; i < n; ++i) {
			// [zeta, X] = zeta |> X + zeta <| X
			for (const auto &[c, v] : mp.left[z][i]) {
				a.set_structure(n + z, i, c, v);
				a.set_structure(i, n + z, c, -v);
			}
			for (const auto &[c, v] : mp.right[z][i]) {
				a.set_structure(n + z, i, n + c, v);
				a.set_structure(i, n + z, n + c, -v);
			}
		}
	return a;
}

MatchedPair decompose(const LieAlgebra &a, const std::vector<int> &part1, const std::vector<int> &part2)
{
	if (part1.size() + part2.size() != a.dim())
		throw std::invalid_argument("split does not partition the basis");
	if (!is_subalgebra(a, part1) || !is_subalgebra(a, part2))
		throw std::invalid_argument("part not a subalgebra");
	auto local = [](const std::vector<int> &part, std::size_t idx) {
		auto it = std::find(part.begin(), part.end(), static_cast<int>(idx));
		return it == part.end() ? -1 : static_cast<int>(it - part.begin());
	};
	auto restrict = [&](const std::vector<int> &part) {
		std::vector<std::string> names;
		for (int i : part)
			names.push_back(a.names()[i]);
		LieAlgebra g(names);
		for (std::size_t i = 0; i < part.size(); ++i)
			for (std::size_t j = 0; j < part.size(); ++j)
				for (const auto &[c, v] : a.bracket(part[i], part[j]))
					g.set_structure(i, j, local(part, c), v);
		return g;
	};
	MatchedPair mp(restrict(part1), restrict(part2));
	for (std::size_t z = 0; z < part2.size(); ++z)
		for (std::size_t i = 0; i < part1.size(); ++i)
			for (const auto &[c, v] : a.bracket(part2[z], part1[i])) {
				int l1 = local(part1, c);
				if (l1 >= 0)
					mp.left[z][i][l1] = v;
				else
					mp.right[z][i][local(part2, c)] = v;
			}
	return mp;
}

MatchedPairAlgebra::MatchedPairAlgebra(MatchedPair mp)
    : mp_(std::move(mp)), u1_(mp_.g1), u2_(mp_.g2), ua_(double_crossed_sum(mp_))
{
}

Mono MatchedPairAlgebra::embed1(const Mono &u) const
{
	Mono m(ua_.ngens(), 0);
	std::copy(u.begin(), u.end(), m.begin());
	return m;
}

Mono MatchedPairAlgebra::embed2(const Mono &v) const
{
	Mono m(ua_.ngens(), 0);
	std::copy(v.begin(), v.end(), m.begin() + static_cast<std::ptrdiff_t>(u1_.ngens()));
	return m;
}

Mono2 MatchedPairAlgebra::split(const Mono &a) const
{
	auto mid = a.begin() + static_cast<std::ptrdiff_t>(u1_.ngens());
	return {Mono(a.begin(), mid), Mono(mid, a.end())};
}

LinComb<Mono2> MatchedPairAlgebra::psi(const Mono &v, const Mono &u) const
{
	{
		std::lock_guard lk(mu_);
		auto it = memo_.find({v, u});
		if (it != memo_.end())
			return it->second;
	}
	LinComb<Mono2> out;
	for (const auto &[m, c] : ua_.mul(embed2(v), embed1(u)))
		out.add(split(m), c);
	std::lock_guard lk(mu_);
	memo_.emplace(Mono2{v, u}, out);
	return out;
}

UElem MatchedPairAlgebra::left_act(const Mono &v, const Mono &u) const
{
	UElem out;
	for (const auto &[legs, c] : psi(v, u))
		if (degree(legs.second) == 0)
			out.add(legs.first, c);
	return out;
}

UElem MatchedPairAlgebra::right_act(const Mono &v, const Mono &u) const
{
	UElem out;
	for (const auto &[legs, c] : psi(v, u))
		if (degree(legs.first) == 0)
			out.add(legs.second, c);
	return out;
}

UElem MatchedPairAlgebra::left_act(const UElem &v, const UElem &u) const
{
	UElem out;
	for (const auto &[mv, cv] : v)
		for (const auto &[mu, cu] : u)
			out.add_scaled(left_act(mv, mu), cv * cu);
	return out;
}

UElem MatchedPairAlgebra::right_act(const UElem &v, const UElem &u) const
{
	UElem out;
	for (const auto &[mv, cv] : v)
		for (const auto &[mu, cu] : u)
			out.add_scaled(right_act(mv, mu), cv * cu);
	return out;
}

Rational MatchedPairAlgebra::matrix_coefficient(std::size_t i, std::size_t j, const Mono &v) const
{
	Mono xi = u1_.unit_mono();
	xi[i] = 1;
	Mono xj = u1_.unit_mono();
	xj[j] = 1;
	return left_act(v, xi).coeff(xj);
}

namespace {

Mono random_mono(Rng &rng, std::size_t ngens, int max_deg)
{
	Mono m(ngens, 0);
	if (ngens == 0)
		return m;
	int d = rng.range(0, max_deg);
	for (int t = 0; t < d; ++t)
		++m[rng.below(ngens)];
	return m;
}

UElem tensor_mul(const Enveloping &A, const UElem &a, const UElem &b) { return A.mul(a, b); }

} // namespace

Report check_mutual_pair(const MatchedPairAlgebra &A, int depth, int samples, std::uint64_t seed)
{
	Report rep;
	const auto &U1 = A.U1();
	const auto &U2 = A.U2();
	const auto &Ua = A.Ua();
	Rng rng(seed);
	auto fmt1 = [&](const UElem &x) { return U1.format(x); };
	auto fmt2 = [&](const UElem &x) { return U2.format(x); };
	auto mono_name = [&](const Enveloping &U, const Mono &m) { return U.format(m); };

	for (const Mono &u : U1.monomials_up_to(depth)) {
		UElem l = A.right_act(U2.one(), UElem(u));
		UElem r = U2.one() * U1.counit(u);
		rep.expect_equal("mutual-unit", "1 <| u = eps(u)", l, r, mono_name(U1, u), fmt2(l), fmt2(r));
	}
	for (const Mono &v : U2.monomials_up_to(depth)) {
		UElem l = A.left_act(UElem(v), U1.one());
		UElem r = U1.one() * U2.counit(v);
		rep.expect_equal("mutual-unit", "v |> 1 = eps(v)", l, r, mono_name(U2, v), fmt1(l), fmt1(r));
	}

	for (int s = 0; s < samples; ++s) {
		Mono v = random_mono(rng, U2.ngens(), depth);
		Mono v2 = random_mono(rng, U2.ngens(), depth);
		Mono u = random_mono(rng, U1.ngens(), depth);
		Mono u2 = random_mono(rng, U1.ngens(), depth);
		std::string w = "v=" + U2.format(v) + ", u1=" + U1.format(u) + ", u2=" + U1.format(u2);

		// mutual-1: v |> (u1 u2) = (v(1) |> u1(1)) ((v(2) <| u1(2)) |> u2)
		UElem lhs1 = A.left_act(UElem(v), U1.mul(u, u2));
		UElem rhs1;
		for (const auto &[vl, cv] : U2.coproduct(v))
			for (const auto &[ul, cu] : U1.coproduct(u)) {
				UElem a = A.left_act(vl.first, ul.first);
				UElem b = A.left_act(A.right_act(UElem(vl.second), UElem(ul.second)), UElem(u2));
				rhs1.add_scaled(tensor_mul(U1, a, b), cv * cu);
			}
		rep.expect_equal("mutual-1", "v |> (u1 u2) = (v(1) |> u1(1)) ((v(2) <| u1(2)) |> u2)", lhs1, rhs1, w,
				 fmt1(lhs1), fmt1(rhs1));

		// mutual-2: (v1 v2) <| u = (v1 <| (v2(1) |> u(1))) (v2(2) <| u(2))
		std::string w2 = "v1=" + U2.format(v) + ", v2=" + U2.format(v2) + ", u=" + U1.format(u);
		UElem lhs2 = A.right_act(U2.mul(v, v2), UElem(u));
		UElem rhs2;
		for (const auto &[vl, cv] : U2.coproduct(v2))
			for (const auto &[ul, cu] : U1.coproduct(u)) {
				UElem a = A.right_act(UElem(v), A.left_act(vl.first, ul.first));
				UElem b = A.right_act(vl.second, ul.second);
				rhs2.add_scaled(U2.mul(a, b), cv * cu);
			}
		rep.expect_equal("mutual-2", "(v1 v2) <| u = (v1 <| (v2(1) |> u(1))) (v2(2) <| u(2))", lhs2, rhs2, w2,
				 fmt2(lhs2), fmt2(rhs2));

		// mutual-3: v(1) <| u(1) (x) v(2) |> u(2) = v(2) <| u(2) (x) v(1) |> u(1)
		LinComb<Mono2> lhs3, rhs3;
		for (const auto &[vl, cv] : U2.coproduct(v))
			for (const auto &[ul, cu] : U1.coproduct(u)) {
				auto a = tensor(A.right_act(vl.first, ul.first), A.left_act(vl.second, ul.second));
				auto b = tensor(A.right_act(vl.second, ul.second), A.left_act(vl.first, ul.first));
				lhs3.add_scaled(a, cv * cu);
				rhs3.add_scaled(b, cv * cu);
			}
		rep.expect_equal("mutual-3", "v(1) <| u(1) (x) v(2) |> u(2) = v(2) <| u(2) (x) v(1) |> u(1)", lhs3, rhs3,
				 "v=" + U2.format(v) + ", u=" + U1.format(u), "", "");

		// Psi legs multiplied back in U(a) give v u.
		UElem prod = Ua.mul(A.embed2(v), A.embed1(u));
		UElem back;
		for (const auto &[legs, c] : A.psi(v, u))
			back.add_scaled(Ua.mul(A.embed1(legs.first), A.embed2(legs.second)), c);
		rep.expect_equal("psi-factorization", "mu(i1 (x) i2)(Psi(v (x) u)) = v u", back, prod,
				 "v=" + U2.format(v) + ", u=" + U1.format(u), Ua.format(back), Ua.format(prod));

		// f_i^j(v1 v2) = sum_k f_k^j(v1) f_i^k(v2)
		const std::size_t n = U1.ngens();
		UElem vv = U2.mul(v, v2);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j) {
				Rational l = 0, r = 0;
				for (const auto &[m, c] : vv)
					l += c * A.matrix_coefficient(i, j, m);
				for (std::size_t k = 0; k < n; ++k)
					r += A.matrix_coefficient(k, j, v) * A.matrix_coefficient(i, k, v2);
				rep.expect_equal("D-f-j-i", "f_i^j(v1 v2) = sum_k f_k^j(v1) f_i^k(v2)", l, r,
						 w2 + ", i=" + std::to_string(i) + ", j=" + std::to_string(j), to_string(l),
						 to_string(r));
			}
	}
	return rep;
}

} // namespace lhc
