#include "doctest.h"
#include "support.hpp"

#include "lhc/exactlin.hpp"

using namespace lhc;

namespace {

SparseMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows)
{
	std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
	SparseMatrix m(rows.size(), cols);
	std::size_t r = 0;
	for (const auto &row : rows) {
		std::size_t c = 0;
		for (int x : row)
			m.set(r, c++, x);
		++r;
	}
	return m;
}

SparseVec vec(std::initializer_list<int> xs)
{
	SparseVec v;
	std::size_t i = 0;
	for (int x : xs) {
		if (x != 0)
			v[i] = x;
		++i;
	}
	return v;
}

} // namespace

TEST_SUITE("exactlin")
{
	TEST_CASE("rank and kernel of small matrices")
	{
		auto empty = rank_kernel(SparseMatrix(0, 0));
		CHECK(empty.rank == 0);
		CHECK(empty.kernel.dim() == 0);

		auto id = rank_kernel(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
		CHECK(id.rank == 3);
		CHECK(id.kernel.dim() == 0);

		auto rk = rank_kernel(from_rows({{1, 2}, {2, 4}}));
		CHECK(rk.rank == 1);
		REQUIRE(rk.kernel.dim() == 1);
		const SparseVec &k = rk.kernel.vectors[0];
		// proportional to (-2, 1)
		CHECK(k.at(0) == -2 * k.at(1));
	}

	TEST_CASE("membership")
	{
		SubspaceBasis s = span(2, {vec({1, 0})});
		auto zero = membership(SparseVec{}, s);
		REQUIRE(zero.has_value());
		CHECK(is_zero((*zero)[0]));

		auto self = membership(vec({1, 0}), s);
		REQUIRE(self.has_value());
		CHECK((*self)[0] == 1);

		CHECK_FALSE(membership(vec({1, 1}), s).has_value());
	}

	TEST_CASE("quotient dimension")
	{
		SubspaceBasis k = span(2, {vec({1, 0}), vec({0, 1})});
		CHECK(quotient_dimension(k, k) == 0);
		CHECK(quotient_dimension(span(2, {}), k) == 2);

		// degree 1 of the CE complex of an abelian 2-dim algebra: d = 0 in degrees 0 and 1
		auto ker = rank_kernel(SparseMatrix(1, 2)).kernel;
		SubspaceBasis img = column_space(SparseMatrix(2, 1));
		CHECK(quotient_dimension(img, ker) == 2);

		CHECK_THROWS_AS(quotient_dimension(span(2, {vec({1, 1})}), span(2, {vec({1, 0})})), std::logic_error);
	}

	TEST_CASE("random matrices agree with dense elimination")
	{
		Rng rng(2024);
		for (int trial = 0; trial < 60; ++trial) {
			std::size_t rows = rng.range(1, 7), cols = rng.range(1, 7);
			SparseMatrix m = testing::random_matrix(rng, rows, cols, rng.range(20, 70));
			auto rk = rank_kernel(m);
			CAPTURE(trial);
			CHECK(rk.rank == oracle::rank(testing::to_dense(m)));
			CHECK(rk.rank + rk.kernel.dim() == cols);
			CHECK(rank(m.transpose()) == rk.rank);
			CHECK(column_space(m).dim() == rk.rank);
			for (const auto &v : rk.kernel.vectors)
				CHECK(m.apply(v).empty());
			// pivots carry a 1 and are cleared elsewhere
			for (std::size_t i = 0; i < rk.kernel.dim(); ++i)
				for (std::size_t j = 0; j < rk.kernel.dim(); ++j) {
					auto it = rk.kernel.vectors[j].find(rk.kernel.pivots[i]);
					Rational x = it == rk.kernel.vectors[j].end() ? Rational(0) : it->second;
					CHECK(x == (i == j ? 1 : 0));
				}
		}
	}

	TEST_CASE("membership recovers random combinations")
	{
		Rng rng(77);
		for (int trial = 0; trial < 40; ++trial) {
			std::size_t n = rng.range(2, 6);
			std::vector<SparseVec> gens;
			for (int g = rng.range(1, 4); g > 0; --g) {
				SparseVec v;
				for (std::size_t i = 0; i < n; ++i)
					if (rng.coin())
						v[i] = rng.small_rational();
				gens.push_back(v);
			}
			SubspaceBasis s = span(n, gens);
			SparseVec target;
			std::vector<Rational> coeffs;
			for (std::size_t i = 0; i < s.dim(); ++i) {
				coeffs.push_back(rng.small_rational());
				axpy(target, coeffs.back(), s.vectors[i]);
			}
			auto got = membership(target, s);
			REQUIRE(got.has_value());
			CHECK(*got == coeffs);
			for (const auto &g : gens)
				CHECK(membership(g, s).has_value());
		}
	}

	TEST_CASE("matrix product and transpose")
	{
		Rng rng(5);
		for (int trial = 0; trial < 20; ++trial) {
			SparseMatrix a = testing::random_matrix(rng, 3, 4, 50), b = testing::random_matrix(rng, 4, 2, 50);
			CHECK(testing::to_dense(a * b) == oracle::mul(testing::to_dense(a), testing::to_dense(b)));
			CHECK((a * b).transpose() == b.transpose() * a.transpose());
		}
	}
}
