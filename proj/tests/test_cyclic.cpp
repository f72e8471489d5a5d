#include "doctest.h"
#include "support.hpp"

#include "lhc/cyclic.hpp"

using namespace lhc;

namespace {

const Workspace &ws1() { return testing::workspace("e1-borel-sl2"); }

const Mono kH{1, 0}, kE{0, 1}, kOne{0, 0};
Mono f(int n) { return Mono{n}; }

StdCochain std1(std::initializer_list<std::pair<HMono, int>> terms)
{
	StdCochain c;
	for (const auto &[hm, x] : terms)
		c.add(StdKey{0, {hm}}, x);
	return c;
}

struct E1Trivial {
	Sayd S{ws1().hopf(), ws1().fixture().module("trivial"), ws1().mpi()};
	StdCyclic st{S};
	BiCyclic bi{S};
};

} // namespace

TEST_SUITE("cyclichom")
{
	TEST_CASE("standard complex operators")
	{
		E1Trivial e;
		auto ops = e.st.ops(2);
		HMono one{f(0), kOne}, H{f(0), kH};
		StdCochain m(StdKey{0, {}});
		CHECK(ops.d(m, 0, 0) == std1({{one, 1}}));
		CHECK(ops.b(m, 0).empty());

		StdCochain tH = ops.t(std1({{H, 1}}), 1);
		CHECK(tH == std1({{one, 2}, {H, -1}}));
		CHECK(ops.t(tH, 1) == std1({{H, 1}}));
		CHECK(ops.t(std1({{one, 1}}), 1) == std1({{one, 1}}));
		CHECK(ops.t(m, 0) == m);

		CHECK(ops.B(std1({{one, 1}}), 1) == m);
	}

	TEST_CASE("b squares to zero on random cochains")
	{
		E1Trivial e;
		auto ops = e.st.ops(2);
		Rng rng(91);
		for (int q = 1; q <= 2; ++q)
			for (int t = 0; t < 4; ++t) {
				StdCochain c = ops.sample(rng, q, false);
				CHECK(ops.b(ops.b(c, q), q + 1).empty());
			}
	}

	TEST_CASE("cocyclic identities")
	{
		E1Trivial e;
		CHECK(check_cocyclic(e.st.ops(2), 2, 3, 17).ok());
		for (int q = 0; q <= 1; ++q)
			CHECK(check_cocyclic(e.bi.row_ops(q, 1), 2, 2, 18).ok());
		for (int p = 0; p <= 1; ++p)
			CHECK(check_cocyclic(e.bi.col_ops(p, 1), 2, 2, 19).ok());

		const auto &W3 = testing::workspace("e3-laurent");
		Sayd S3(W3.hopf(), W3.fixture().module("trivial"), W3.mpi());
		CHECK(check_cocyclic(StdCyclic(S3).ops(2), 2, 3, 20).ok());
	}

	TEST_CASE("dropping the delta twist breaks the cyclic order")
	{
		ModularPair plain = ws1().mpi();
		std::fill(plain.delta.begin(), plain.delta.end(), Rational(0));
		Sayd S(ws1().hopf(), ws1().fixture().module("trivial"), plain);
		Report r = check_cocyclic(StdCyclic(S).ops(1), 2, 3, 21);
		CHECK(r.mentions("tau-order"));
	}

	TEST_CASE("bullet action")
	{
		E1Trivial e;
		CHECK(e.bi.bullet(kH, MonoN{f(1)}) == LinComb<MonoN>(MonoN{f(1)}, 2));
		LinComb<MonoN> want;
		want.add(MonoN{f(2), f(1)}, 1);
		want.add(MonoN{f(1), f(2)}, 3);
		CHECK(e.bi.bullet(kE, MonoN{f(1), f(1)}) == want);
		// unit acts trivially
		CHECK(e.bi.bullet(kOne, MonoN{f(2), f(1)}) == LinComb<MonoN>(MonoN{f(2), f(1)}));
	}

	TEST_CASE("bullet is a U(g1) action")
	{
		E1Trivial e;
		const auto &U = ws1().hopf().U();
		Rng rng(61);
		for (int t = 0; t < 15; ++t) {
			Mono u(2, 0), v(2, 0);
			for (int k = rng.range(0, 2); k > 0; --k)
				++u[rng.below(2)];
			for (int k = rng.range(0, 2); k > 0; --k)
				++v[rng.below(2)];
			LinComb<MonoN> x(MonoN{f(rng.range(0, 2)), f(rng.range(0, 2))});
			CHECK(e.bi.bullet(U.mul(u, v), x) == e.bi.bullet(UElem(u), e.bi.bullet(UElem(v), x)));
		}
	}

	TEST_CASE("vertical face on the unit")
	{
		E1Trivial e;
		BiKey k{0, {kOne}, {}};
		BiCochain last = e.bi.col_face(k, 1);
		CHECK(last == BiCochain(BiKey{0, {kOne}, {f(0)}}));
	}

	TEST_CASE("psi")
	{
		E1Trivial e;
		BiCochain m(BiKey{0, {}, {}});
		CHECK(e.bi.psi(m) == StdCochain(StdKey{0, {}}));
		CHECK(e.bi.psi(BiCochain(BiKey{0, {kH}, {f(1)}})) == StdCochain(StdKey{0, {HMono{f(1), kH}}}));

		Rng rng(71);
		for (int t = 0; t < 5; ++t) {
			BiCochain c = e.bi.sample(rng, 2, 2, false, 1);
			CHECK(e.bi.psi_inv(e.bi.psi(c)) == c);
		}
		CHECK(check_psi(e.bi, e.st, 2, 3, 72, 1).ok());
	}
}
