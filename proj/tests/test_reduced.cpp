#include "doctest.h"
#include "support.hpp"

#include "lhc/reduced.hpp"

using namespace lhc;

namespace {

const Workspace &ws(const std::string &name) { return testing::workspace(name); }

struct Ctx {
	Sayd S;
	Reduced R;
	Ctx(const std::string &fixture, const std::string &module, std::optional<ModularPair> mp = std::nullopt)
	    : S(ws(fixture).hopf(), ws(fixture).fixture().module(module), mp ? *mp : ws(fixture).mpi()), R(S)
	{
	}
};

RedChain key(std::vector<int> wedge, MonoN f, const Rational &c = 1) { return RedChain(RedKey{0, std::move(wedge), std::move(f)}, c); }

Mono f(int n) { return Mono{n}; }
const Mono kOne{0, 0};

} // namespace

TEST_SUITE("reduced")
{
	TEST_CASE("antisymmetrization")
	{
		Ctx c("e1-borel-sl2", "trivial");
		CHECK(c.R.antisymmetrize(key({1}, {})) == BiCochain(BiKey{0, {Mono{0, 1}}, {}}));
		BiCochain want;
		want.add(BiKey{0, {Mono{1, 0}, Mono{0, 1}}, {}}, Rational(1, 2));
		want.add(BiKey{0, {Mono{0, 1}, Mono{1, 0}}, {}}, Rational(-1, 2));
		CHECK(c.R.antisymmetrize(key({0, 1}, {})) == want);
		CHECK(c.R.antisymmetrize(key({1, 1}, {})).empty());
	}

	TEST_CASE("vertical boundary")
	{
		Ctx c("e1-borel-sl2", "trivial");
		CHECK(c.R.boundary_g(key({0}, {})) == key({}, {}, 2));
		CHECK(c.R.boundary_g(key({1}, {f(1)})) == key({}, {f(2)}, -1));

		Ctx y("e3-laurent", "trivial");
		CHECK(y.R.boundary_g(key({0}, {})).empty());
	}

	TEST_CASE("horizontal operators")
	{
		Ctx c("e1-borel-sl2", "trivial");
		CHECK(c.R.b_F(key({}, {})).empty());
		CHECK(c.R.tau_F(key({}, {f(1)})) == key({}, {f(1)}, -1));

		Ctx y("e3-laurent", "trivial");
		CHECK(y.R.b_F(key({}, {})) == key({}, {Mono{0}}) - key({}, {Mono{1}}));
	}

	TEST_CASE("Poincare isomorphism")
	{
		Ctx c("e1-borel-sl2", "trivial");
		CHECK(c.R.poincare(key({0}, {})) == key({1}, {}));
		CHECK(c.R.poincare(key({}, {})) == key({0, 1}, {}));
		CHECK(c.R.poincare(key({0, 1}, {})) == key({}, {}));

		Ctx a("e1-borel-sl2", "adjoint");
		Rng rng(44);
		for (int t = 0; t < 10; ++t) {
			RedChain x = a.R.sample(rng, rng.range(0, 2), rng.range(0, 2), false, 1);
			CHECK(a.R.poincare_inv(a.R.poincare(x)) == x);
		}
	}

	TEST_CASE("dual coaction")
	{
		Ctx c("e1-borel-sl2", "trivial");
		const auto &H = ws("e1-borel-sl2").hopf();
		for (int i = 0; i < 2; ++i) {
			FWedge want;
			for (int j = 0; j < 2; ++j)
				for (const auto &[m, x] : H.coef(j, i))
					want.add({m, {j}}, x);
			CHECK(c.R.dual_coaction({i}) == want);
		}

		Ctx z("e2-axb", "trivial");
		CHECK(z.R.dual_coaction({0}) == FWedge({Mono{0}, {0}}));

		Ctx y("e3-laurent", "trivial");
		CHECK(y.R.dual_coaction({0}) == FWedge({Mono{1}, {0}}));
	}

	TEST_CASE("dual bicomplex operators")
	{
		Ctx c("e1-borel-sl2", "trivial");
		CHECK(c.R.coboundary_gstar(key({}, {})).empty());
		CHECK(c.R.b_star_F(key({0}, {})) == key({1}, {f(1)}, -1));
	}

	TEST_CASE("identity suites")
	{
		Ctx c("e1-borel-sl2", "trivial");
		CHECK(check_reduced(c.R, 2, 2, 2, 51, 1).ok());
		Ctx a("e1-borel-sl2", "adjoint");
		CHECK(check_reduced(a.R, 2, 2, 2, 52, 1).ok());
		Ctx z("e0-trivial", "trivial");
		CHECK(check_reduced(z.R, 3, 2, 2, 53, 1).ok());
		Ctx y("e3-laurent", "trivial");
		CHECK(check_reduced(y.R, 1, 2, 2, 54, 1).ok());
	}

	TEST_CASE("inverted sigma is caught by the volume coaction")
	{
		ModularPair inv = ws("e3-laurent").mpi();
		inv.sigma = FElem(Mono{-1});
		Ctx y("e3-laurent", "trivial", inv);
		Report r = check_reduced(y.R, 1, 2, 2, 55, 1);
		CHECK(r.mentions("volume-coaction"));
	}

	TEST_CASE("F trivial collapses to the Chevalley-Eilenberg column")
	{
		const auto &W = ws("e0-trivial");
		for (const std::string m : {"trivial", "adjoint"}) {
			Ctx c("e0-trivial", m);
			TotalCohomology t = dual_total_cohomology_trivial_f(c.R, 3);
			LieModule v = W.fixture().module(m).g1_action;
			auto want = oracle::relative_cohomology(testing::to_oracle(W.hopf().g()), testing::to_oracle(v), {}, 3);
			CAPTURE(m);
			CHECK(t.dims == want);
			std::size_t even = 0, odd = 0;
			for (std::size_t i = 0; i < want.size(); ++i)
				(i % 2 == 0 ? even : odd) += want[i];
			CHECK(t.even == even);
			CHECK(t.odd == odd);
		}
		Ctx c("e0-trivial", "trivial");
		TotalCohomology t = dual_total_cohomology_trivial_f(c.R, 3);
		CHECK(t.even == 1);
		CHECK(t.odd == 1);
	}
}
