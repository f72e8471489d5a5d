#pragma once

#include "lhc/fixture.hpp"
#include "lhc/liealg.hpp"
#include "lhc/rng.hpp"
#include "oracle.hpp"

#include <map>
#include <memory>
#include <string>

namespace testing {

inline std::string fixture_path(const std::string &name) { return std::string(LHC_FIXTURE_DIR) + "/" + name + ".json"; }

// Workspaces are expensive to build; tests share one per fixture file.
inline const lhc::Workspace &workspace(const std::string &name)
{
	static std::map<std::string, std::unique_ptr<lhc::Workspace>> cache;
	auto &slot = cache[name];
	if (!slot)
		slot = std::make_unique<lhc::Workspace>(lhc::load_fixture(fixture_path(name)));
	return *slot;
}

inline oracle::Lie to_oracle(const lhc::LieAlgebra &g)
{
	oracle::Lie o;
	o.n = g.dim();
	o.C.assign(o.n, std::vector<std::vector<oracle::Q>>(o.n, std::vector<oracle::Q>(o.n, 0)));
	for (std::size_t i = 0; i < o.n; ++i)
		for (std::size_t j = 0; j < o.n; ++j)
			for (std::size_t k = 0; k < o.n; ++k)
				o.C[i][j][k] = g.structure(i, j, k);
	return o;
}

// Always a left action; a right module becomes X . m = -m . X.
inline oracle::Rep to_oracle(const lhc::LieModule &v)
{
	oracle::Rep r;
	r.dim = v.dim;
	for (const auto &m : v.rho) {
		oracle::Mat d = oracle::zeros(v.dim, v.dim);
		for (std::size_t a = 0; a < v.dim; ++a)
			for (std::size_t b = 0; b < v.dim; ++b)
				d[a][b] = v.side == lhc::Side::Left ? m.get(a, b) : lhc::Rational(-m.get(a, b));
		r.rho.push_back(d);
	}
	return r;
}

inline oracle::Mat to_dense(const lhc::SparseMatrix &m)
{
	oracle::Mat d = oracle::zeros(m.rows(), m.cols());
	for (std::size_t r = 0; r < m.rows(); ++r)
		for (const auto &[c, x] : m.row(r))
			d[r][c] = x;
	return d;
}

inline lhc::SparseMatrix random_matrix(lhc::Rng &rng, std::size_t rows, std::size_t cols, int density_pct)
{
	lhc::SparseMatrix m(rows, cols);
	for (std::size_t r = 0; r < rows; ++r)
		for (std::size_t c = 0; c < cols; ++c)
			if (rng.range(1, 100) <= density_pct)
				m.set(r, c, rng.small_rational());
	return m;
}

inline std::string ids(const lhc::Report &r)
{
	std::string out;
	for (const auto &v : r.violations())
		out += v.identity + " ";
	return out;
}

} // namespace testing
