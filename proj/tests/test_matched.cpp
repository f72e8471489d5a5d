#include "doctest.h"
#include "support.hpp"

#include "lhc/matched.hpp"

using namespace lhc;

namespace {

const MatchedPairAlgebra &e1() { return testing::workspace("e1-borel-sl2").algebra(); }

const Mono kH{1, 0}, kE{0, 1}, kOne1{0, 0};
Mono F(int n) { return Mono{n}; }

LinComb<Mono2> psi_lit(std::initializer_list<std::tuple<Mono, Mono, int>> terms)
{
	LinComb<Mono2> out;
	for (const auto &[u, v, c] : terms)
		out.add({u, v}, c);
	return out;
}

oracle::Word word(const Mono &m, int offset)
{
	oracle::Word w;
	for (std::size_t i = 0; i < m.size(); ++i)
		for (int e = 0; e < m[i]; ++e)
			w.push_back(static_cast<int>(i) + offset);
	return w;
}

Mono random_mono(Rng &rng, std::size_t n, int max_deg)
{
	Mono m(n, 0);
	int d = rng.range(0, max_deg);
	for (int k = 0; k < d; ++k)
		++m[rng.below(n)];
	return m;
}

} // namespace

TEST_SUITE("matched")
{
	TEST_CASE("matched pair axioms")
	{
		CHECK(check_matched_pair(e1().pair()).ok());

		MatchedPair ab(LieAlgebra({"A"}), LieAlgebra({"B", "C"}));
		CHECK(check_matched_pair(ab).ok());

		MatchedPair broken = e1().pair();
		broken.right[0][1] = unit(0); // F <| E = F
		Report r = check_matched_pair(broken);
		CHECK_FALSE(r.ok());
		// F |> [H,E] = -2H on both sides of mp-L-3; the right action law is what breaks
		CHECK(r.mentions("mp-L-2"));
		CHECK_FALSE(r.mentions("mp-L-3"));

		MatchedPair tilted = e1().pair();
		tilted.left[0][0] = unit(0); // F |> H = H
		CHECK(check_matched_pair(tilted).mentions("mp-L-3"));
	}

	TEST_CASE("double crossed sum")
	{
		LieAlgebra a = double_crossed_sum(e1().pair());
		REQUIRE(a.dim() == 3);
		CHECK(a.bracket(0, 1) == LieVec{{1, Rational(2)}});
		CHECK(a.bracket(0, 2) == LieVec{{2, Rational(-2)}});
		CHECK(a.bracket(1, 2) == LieVec{{0, Rational(1)}});
		CHECK(oracle::jacobi_holds(testing::to_oracle(a)));

		MatchedPair ab(LieAlgebra({"A"}), LieAlgebra({"B"}));
		LieAlgebra s = double_crossed_sum(ab);
		CHECK(s.bracket(0, 1).empty());

		LieAlgebra e3 = double_crossed_sum(testing::workspace("e3-laurent").algebra().pair());
		REQUIRE(e3.dim() == 2);
		// basis (Y, X), [X, Y] = Y
		CHECK(e3.bracket(1, 0) == LieVec{{0, Rational(1)}});
	}

	TEST_CASE("decompose reverses the double crossed sum")
	{
		LieAlgebra a = double_crossed_sum(e1().pair());
		MatchedPair mp = decompose(a, {0, 1}, {2});
		CHECK(mp.right == e1().pair().right);
		CHECK(mp.left == e1().pair().left);
		CHECK(check_matched_pair(mp).ok());

		MatchedPair one = decompose(a, {0, 1, 2}, {});
		CHECK(one.g2.dim() == 0);
		CHECK(check_matched_pair(one).ok());

		const auto &e3 = testing::workspace("e3-laurent").algebra().pair();
		MatchedPair back = decompose(double_crossed_sum(e3), {0}, {1});
		CHECK(back.left == e3.left);
		CHECK(back.right == e3.right);
	}

	TEST_CASE("psi on small monomials")
	{
		for (const Mono &u : e1().U1().monomials_up_to(2))
			CHECK(e1().psi(F(0), u) == LinComb<Mono2>({u, F(0)}));
		CHECK(e1().psi(F(1), kE) == psi_lit({{kE, F(1), 1}, {kH, F(0), -1}}));
		CHECK(e1().psi(F(2), kE) == psi_lit({{kE, F(2), 1}, {kH, F(1), -2}, {kOne1, F(1), -2}}));
	}

	TEST_CASE("mutual actions")
	{
		CHECK(e1().left_act(F(1), kE) == UElem(kH, -1));
		CHECK(e1().right_act(F(1), kE).empty());
		for (int n = 1; n <= 4; ++n) {
			CHECK(e1().left_act(F(n), kH).empty());
			CHECK(e1().right_act(F(n), kH) == UElem(F(n), 2 * n));
		}
		// v |> 1 = eps(v), 1 <| u = eps(u)
		for (int n = 0; n <= 3; ++n) {
			CHECK(e1().left_act(F(n), kOne1) == (n == 0 ? UElem(kOne1) : UElem()));
			CHECK(e1().right_act(F(0), Mono{n, 1}).empty());
		}
		CHECK(e1().right_act(F(0), kOne1) == UElem(F(0)));
	}

	TEST_CASE("matrix coefficients")
	{
		for (std::size_t i = 0; i < 2; ++i)
			for (std::size_t j = 0; j < 2; ++j)
				CHECK(e1().matrix_coefficient(i, j, F(0)) == (i == j ? 1 : 0));
		CHECK(e1().matrix_coefficient(1, 0, F(1)) == -1);
		CHECK(e1().matrix_coefficient(1, 0, F(2)) == 0);
	}

	TEST_CASE("mutual pair identities")
	{
		CHECK(check_mutual_pair(e1(), 3, 20, 9).ok());
		CHECK(check_mutual_pair(testing::workspace("e2-axb").algebra(), 3, 20, 9).ok());
		CHECK(check_mutual_pair(testing::workspace("e3-laurent").algebra(), 3, 20, 9).ok());
	}

	TEST_CASE("psi legs recombine to the straightened product")
	{
		const auto &A = e1();
		oracle::Straightener st(testing::to_oracle(A.Ua().algebra()));
		const int n1 = static_cast<int>(A.U1().ngens());
		Rng rng(505);
		for (int t = 0; t < 60; ++t) {
			Mono v = random_mono(rng, A.U2().ngens(), 3), u = random_mono(rng, A.U1().ngens(), 3);
			oracle::Word vu = word(v, n1);
			auto wu = word(u, 0);
			vu.insert(vu.end(), wu.begin(), wu.end());
			oracle::Elem lhs = st.straighten(vu);
			oracle::Elem rhs;
			for (const auto &[k, c] : A.psi(v, u)) {
				oracle::Word w = word(k.first, 0);
				auto w2 = word(k.second, n1);
				w.insert(w.end(), w2.begin(), w2.end());
				oracle::add_to(rhs, st.straighten(w), c);
			}
			CAPTURE(t);
			CHECK(lhs == oracle::clean(rhs));
		}
	}
}
