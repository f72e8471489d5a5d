#include "doctest.h"
#include "support.hpp"

#include "lhc/hopf.hpp"

using namespace lhc;

namespace {

const LieHopf &e1() { return testing::workspace("e1-borel-sl2").hopf(); }
const LieHopf &e3() { return testing::workspace("e3-laurent").hopf(); }

const Mono kH{1, 0}, kE{0, 1}, kOne{0, 0};
Mono f(int n) { return Mono{n}; }

HElem h(std::initializer_list<std::tuple<Mono, Mono, int>> terms)
{
	HElem out;
	for (const auto &[fm, um, c] : terms)
		out.add({fm, um}, c);
	return out;
}

UF uf(std::initializer_list<std::tuple<Mono, Mono, int>> terms)
{
	UF out;
	for (const auto &[um, fm, c] : terms)
		out.add({um, fm}, c);
	return out;
}

HopfAlgebraF polynomial(FTensor delta, Rational eps)
{
	HopfGenerator g;
	g.name = "f";
	g.epsilon = eps;
	g.coproduct = std::move(delta);
	g.antipode = FElem(f(1), -1);
	return HopfAlgebraF({g});
}

} // namespace

TEST_SUITE("hopf")
{
	TEST_CASE("F operations")
	{
		const auto &F = e1().F();
		CHECK(F.coproduct(f(1)) == FTensor({f(1), f(0)}) + FTensor({f(0), f(1)}));
		CHECK(F.antipode(f(2)) == FElem(f(2)));
		CHECK(F.antipode(f(1)) == FElem(f(1), -1));
		const auto &L = e3().F();
		CHECK(L.coproduct(Mono{-1}) == FTensor({Mono{-1}, Mono{-1}}));
		CHECK(L.mul(L.gen(0, 1), L.gen(0, -1)) == L.one());
		CHECK(L.antipode(Mono{2}) == FElem(Mono{-2}));
	}

	TEST_CASE("F axioms")
	{
		CHECK(check_hopf_axioms_F(e1().F(), 4).ok());
		CHECK(check_hopf_axioms_F(e3().F(), 4).ok());
		HopfAlgebraF bad = polynomial(FTensor({f(1), f(1)}), 0);
		Report r = check_hopf_axioms_F(bad, 3);
		CHECK(r.mentions("F-counit"));
	}

	TEST_CASE("Lie-Hopf datum")
	{
		CHECK(check_lie_hopf(e1(), 4).ok());
		CHECK(check_lie_hopf(e3(), 4).ok());
		CHECK(check_lie_hopf(testing::workspace("e2-axb").hopf(), 4).ok());
		CHECK(check_lie_hopf(testing::workspace("e0-trivial").hopf(), 4).ok());

		// the structure identity instance X_1 |> f_2^1 - X_2 |> f_1^1 = C^2_{1,2} f_2^1
		CHECK(e1().act(0, e1().coef(1, 0)) - e1().act(1, e1().coef(0, 0)) == FElem(f(1), 2));

		LieHopfDatum d = e1().datum();
		d.action[1][0] = FElem(f(1)); // E |> f = f
		Report r = check_lie_hopf(LieHopf(d), 3);
		CHECK_FALSE(r.ok());
		CHECK((r.mentions("bianchi") || r.mentions("action-coproduct")));
	}

	TEST_CASE("enveloping algebra")
	{
		const auto &U = e1().U();
		Mono x2{2, 0};
		CHECK(U.coproduct(x2) == LinComb<Mono2>({x2, kOne}) + LinComb<Mono2>({kOne, x2}) +
					     LinComb<Mono2>({kH, kH}, 2));
		CHECK(U.mul(kE, kH) == UElem(Mono{1, 1}) - UElem(kE, 2));
		// S(HE) = S(E) S(H) = EH
		CHECK(U.antipode(Mono{1, 1}) == U.mul(kE, kH));
	}

	TEST_CASE("coaction")
	{
		const auto &H = e1();
		for (std::size_t i = 0; i < 2; ++i) {
			UF want;
			for (std::size_t j = 0; j < 2; ++j)
				for (const auto &[m, c] : H.coef(i, j)) {
					Mono u(2, 0);
					u[j] = 1;
					want.add({u, m}, c);
				}
			Mono u(2, 0);
			u[i] = 1;
			CHECK(H.coaction(u) == want);
		}
		CHECK(H.coaction(kOne) == uf({{kOne, f(0), 1}}));
		CHECK(H.coaction(Mono{1, 1}) == uf({{Mono{1, 1}, f(0), 1}, {Mono{2, 0}, f(1), 1}, {kH, f(1), 2}}));
	}

	TEST_CASE("coaction of HE through the matched pair")
	{
		// F |> u is the g2-free part of the straightened word F u in U(sl2), and must equal
		// u<0> <u<1>, F> with <1, F> = 0 and <f, F> read off F |> E.
		const auto &A = testing::workspace("e1-borel-sl2").algebra();
		oracle::Straightener st(testing::to_oracle(A.Ua().algebra()));
		oracle::Elem FE = st.straighten(oracle::Word{2, 1});
		oracle::Q fF = 0;
		for (const auto &[w, c] : FE)
			if (w == oracle::Word{0})
				fF += c;
		CHECK(fF == -1);

		oracle::Elem FHE = st.straighten(oracle::Word{2, 0, 1});
		oracle::Elem free;
		for (const auto &[w, c] : FHE)
			if (std::find(w.begin(), w.end(), 2) == w.end())
				free[w] += c;
		oracle::Elem paired;
		for (const auto &[k, c] : e1().coaction(Mono{1, 1})) {
			oracle::Q pv = k.second == f(1) ? fF : 0;
			if (pv == 0)
				continue;
			oracle::Word w;
			for (int e = 0; e < k.first[0]; ++e)
				w.push_back(0);
			for (int e = 0; e < k.first[1]; ++e)
				w.push_back(1);
			paired[w] += c * pv;
		}
		CHECK(oracle::clean(free) == oracle::clean(paired));
	}

	TEST_CASE("bicrossed product")
	{
		const auto &H = e1();
		// (1 >< X)(g >< 1) = (X |> g) >< 1 + g >< X
		for (int n = 0; n <= 3; ++n)
			for (std::size_t i = 0; i < 2; ++i) {
				Mono x(2, 0);
				x[i] = 1;
				HElem want = H.h_from_f(H.act(i, FElem(f(n)))) + HElem(HMono{f(n), x});
				CHECK(H.h_mul(HMono{f(0), x}, HMono{f(n), kOne}) == want);
			}
		HElem SE = H.h_antipode(HMono{f(0), kE});
		CHECK(SE == h({{f(0), kE, -1}, {f(1), kOne, 2}, {f(1), kH, 1}}));
		// S(u) = (1 >< S(u<0>)) (S(u<1>) >< 1) with nabla E = E (x) 1 + H (x) f
		HElem rebuilt = H.h_mul(h({{f(0), kE, -1}}), H.h_one()) + H.h_mul(h({{f(0), kH, -1}}), h({{f(1), kOne, -1}}));
		CHECK(SE == rebuilt);
		for (const auto &m : h_monomials_up_to(H, 3)) {
			CHECK(H.h_counit(m) == H.F().counit(m.first) * H.U().counit(m.second));
			HElem lhs;
			for (const auto &[k, c] : H.h_coproduct(m))
				lhs.add_scaled(H.h_mul(H.h_antipode(k.first), HElem(k.second)), c);
			CHECK(lhs == H.h_one() * H.h_counit(m));
		}
	}

	TEST_CASE("bicrossed product axioms")
	{
		CHECK(check_matched_pair_hopf(e1(), 3, 20, 4).ok());
		CHECK(check_matched_pair_hopf(e3(), 3, 20, 4).ok());

		LieHopfDatum d = e1().datum();
		std::swap(d.coef[0][1], d.coef[1][0]);
		Report r = check_matched_pair_hopf(LieHopf(d), 2, 10, 4);
		CHECK_FALSE(r.ok());
	}

	TEST_CASE("canonical modular pair")
	{
		ModularPair m1 = canonical_mpi(e1());
		CHECK(m1.sigma == e1().F().one());
		CHECK(m1.delta == std::vector<Rational>{2, 0});
		CHECK(m1.delta == oracle::ad_trace(testing::to_oracle(e1().g())));
		// sigma = det of the coefficient matrix, expanded by hand
		const auto &F = e1().F();
		CHECK(m1.sigma == F.mul(e1().coef(0, 0), e1().coef(1, 1)) - F.mul(e1().coef(0, 1), e1().coef(1, 0)));

		ModularPair m3 = canonical_mpi(e3());
		CHECK(m3.sigma == FElem(Mono{1}));
		CHECK(m3.sigma == e3().coef(0, 0));

		ModularPair m0 = canonical_mpi(testing::workspace("e0-trivial").hopf());
		CHECK(m0.sigma == testing::workspace("e0-trivial").hopf().F().one());
		CHECK(m0.delta == std::vector<Rational>{0, 0, 0});
	}

	TEST_CASE("modular pair in involution")
	{
		ModularPair m1 = canonical_mpi(e1());
		CHECK(check_mpi(e1(), m1, 3).ok());
		HElem E = h({{f(0), kE, 1}});
		CHECK(twisted_antipode(e1(), m1, twisted_antipode(e1(), m1, E)) == E);
		CHECK(delta_h(e1(), m1, h({{f(0), kH, 1}})) == 2);

		ModularPair m3 = canonical_mpi(e3());
		CHECK(check_mpi(e3(), m3, 3).ok());
		HElem Y = HElem(HMono{Mono{0}, Mono{1}});
		HElem ad = e3().h_mul(e3().h_mul(HElem(HMono{Mono{1}, Mono{0}}), Y), HElem(HMono{Mono{-1}, Mono{0}}));
		CHECK(ad == Y);

		ModularPair bad = m1;
		bad.delta[1] = 1;
		Report r = check_mpi(e1(), bad, 3);
		CHECK(r.mentions("S-delta-squared"));
	}

	TEST_CASE("antipode and coproduct on random elements")
	{
		Rng rng(31);
		for (const LieHopf *H : {&e1(), &e3()})
			for (int t = 0; t < 15; ++t) {
				HElem a = random_h(*H, rng, 2, 2), b = random_h(*H, rng, 2, 2);
				// S is an anti-homomorphism and Delta is multiplicative
				CHECK(H->h_antipode(H->h_mul(a, b)) == H->h_mul(H->h_antipode(b), H->h_antipode(a)));
				HTensor ab = H->h_coproduct(H->h_mul(a, b)), prod;
				for (const auto &[x, cx] : H->h_coproduct(a))
					for (const auto &[y, cy] : H->h_coproduct(b))
						for (const auto &[l, cl] : H->h_mul(x.first, y.first))
							for (const auto &[r, cr] : H->h_mul(x.second, y.second))
								prod.add({l, r}, cx * cy * cl * cr);
				CHECK(ab == prod);
			}
	}
}
