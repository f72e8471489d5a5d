#include "lhc/liealg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lhc {

LieAlgebra::LieAlgebra(std::vector<std::string> names) : names_(std::move(names)), br_(names_.size() * names_.size()) {}

int LieAlgebra::index_of(const std::string &name) const
{
	auto it = std::find(names_.begin(), names_.end(), name);
	return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const LieVec &v)
{
	br_[i * dim() + j].clear();
	br_[j * dim() + i].clear();
	for (const auto &[k, c] : v) {
		set_structure(i, j, k, c);
		set_structure(j, i, k, -c);
	}
}

void LieAlgebra::set_structure(std::size_t i, std::size_t j, std::size_t k, const Rational &c)
{
	if (i >= dim() || j >= dim() || k >= dim())
		throw std::out_of_range("structure constant index");
	auto &slot = br_[i * dim() + j];
	if (is_zero(c))
		slot.erase(k);
	else
		slot[k] = c;
}

Rational LieAlgebra::structure(std::size_t i, std::size_t j, std::size_t k) const
{
	const auto &slot = br_[i * dim() + j];
	auto it = slot.find(k);
	return it == slot.end() ? Rational(0) : it->second;
}

LieVec LieAlgebra::bracket(const LieVec &x, const LieVec &y) const
{
	LieVec out;
	for (const auto &[i, a] : x)
		for (const auto &[j, b] : y)
			axpy(out, a * b, bracket(i, j));
	return out;
}

std::string LieAlgebra::format(const LieVec &v) const
{
	LinComb<std::size_t> lc;
	for (const auto &[k, c] : v)
		lc.add(k, c);
	return format_lincomb<std::size_t>(lc, [&](const std::size_t &k) { return names_[k]; });
}

LieVec unit(std::size_t i) { return LieVec{{i, Rational(1)}}; }

Report check_jacobi(const LieAlgebra &g, const std::string &label)
{
	Report rep;
	const std::size_t n = g.dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				LieVec a = g.bracket(i, j), b = g.bracket(j, i);
				auto neg = b;
				for (auto &kv : neg)
					kv.second = -kv.second;
				if (k == 0)
					rep.expect_equal("antisymmetry", "[X,Y] = -[Y,X] in " + label, a, neg,
							 g.names()[i] + "," + g.names()[j], g.format(a), g.format(neg));
			}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			for (std::size_t k = j + 1; k < n; ++k) {
				LieVec s = g.bracket(g.bracket(unit(i), unit(j)), unit(k));
				axpy(s, 1, g.bracket(g.bracket(unit(j), unit(k)), unit(i)));
				axpy(s, 1, g.bracket(g.bracket(unit(k), unit(i)), unit(j)));
				rep.expect_equal("jacobi", "[[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y] = 0 in " + label, s, LieVec{},
						 g.names()[i] + "," + g.names()[j] + "," + g.names()[k], g.format(s), "0");
			}
	return rep;
}

std::vector<Rational> adjoint_trace_character(const LieAlgebra &g)
{
	std::vector<Rational> d(g.dim());
	for (std::size_t i = 0; i < g.dim(); ++i)
		for (std::size_t k = 0; k < g.dim(); ++k)
			d[i] += g.structure(i, k, k);
	return d;
}

bool is_subalgebra(const LieAlgebra &g, const std::vector<int> &idx)
{
	for (int i : idx)
		for (int j : idx)
			for (const auto &[k, c] : g.bracket(i, j))
				if (std::find(idx.begin(), idx.end(), static_cast<int>(k)) == idx.end())
					return false;
	return true;
}

LieModule LieModule::trivial(std::size_t gdim, std::size_t dim, Side side)
{
	LieModule m;
	m.dim = dim;
	m.side = side;
	m.rho.assign(gdim, SparseMatrix(dim, dim));
	return m;
}

LieModule LieModule::with_side(Side s) const
{
	if (s == side)
		return *this;
	LieModule m = *this;
	m.side = s;
	for (auto &r : m.rho) {
		SparseMatrix neg(r.rows(), r.cols());
		for (std::size_t i = 0; i < r.rows(); ++i)
			for (const auto &[j, v] : r.row(i))
				neg.set(i, j, -v);
		r = neg;
	}
	return m;
}

LieModule adjoint_module(const LieAlgebra &g, Side side)
{
	LieModule m = LieModule::trivial(g.dim(), g.dim(), Side::Left);
	for (std::size_t i = 0; i < g.dim(); ++i)
		for (std::size_t a = 0; a < g.dim(); ++a)
			for (const auto &[b, c] : g.bracket(i, a))
				m.rho[i].set(b, a, c);
	return m.with_side(side);
}

Report check_module(const LieAlgebra &g, const LieModule &v)
{
	Report rep;
	for (std::size_t i = 0; i < g.dim(); ++i)
		for (std::size_t j = i + 1; j < g.dim(); ++j) {
			SparseMatrix lhs(v.dim, v.dim);
			for (const auto &[k, c] : g.bracket(i, j))
				for (std::size_t r = 0; r < v.dim; ++r)
					for (const auto &[col, x] : v.rho[k].row(r))
						lhs.add(r, col, c * x);
			SparseMatrix ab = v.rho[i] * v.rho[j], ba = v.rho[j] * v.rho[i];
			SparseMatrix rhs(v.dim, v.dim);
			const SparseMatrix &first = v.side == Side::Left ? ab : ba;
			const SparseMatrix &second = v.side == Side::Left ? ba : ab;
			for (std::size_t r = 0; r < v.dim; ++r) {
				for (const auto &[col, x] : first.row(r))
					rhs.add(r, col, x);
				for (const auto &[col, x] : second.row(r))
					rhs.add(r, col, -x);
			}
			rep.expect_equal("lie-module", v.side == Side::Left ? "rho[X,Y] = rho(X)rho(Y) - rho(Y)rho(X)"
									    : "rho[X,Y] = rho(Y)rho(X) - rho(X)rho(Y)",
					 lhs, rhs, g.names()[i] + "," + g.names()[j], "", "");
		}
	return rep;
}

int sort_sign(std::vector<int> &seq)
{
	int sign = 1;
	for (std::size_t i = 1; i < seq.size(); ++i)
		for (std::size_t j = i; j > 0 && seq[j - 1] >= seq[j]; --j) {
			if (seq[j - 1] == seq[j])
				return 0;
			std::swap(seq[j - 1], seq[j]);
			sign = -sign;
		}
	return sign;
}

std::vector<std::vector<int>> subsets(const std::vector<int> &ground, std::size_t q)
{
	std::vector<std::vector<int>> out;
	if (q > ground.size())
		return out;
	std::vector<std::size_t> pick(q);
	std::iota(pick.begin(), pick.end(), 0);
	while (true) {
		std::vector<int> s;
		for (auto p : pick)
			s.push_back(ground[p]);
		out.push_back(std::move(s));
		std::size_t t = q;
		while (t > 0 && pick[t - 1] == ground.size() - q + t - 1)
			--t;
		if (t == 0)
			break;
		++pick[t - 1];
		for (std::size_t u = t; u < q; ++u)
			pick[u] = pick[u - 1] + 1;
	}
	return out;
}

std::vector<int> iota_indices(std::size_t n)
{
	std::vector<int> v(n);
	std::iota(v.begin(), v.end(), 0);
	return v;
}

ExteriorCochain ce_coboundary(const LieAlgebra &g, const LieModule &v, const ExteriorCochain &w)
{
	if (v.side != Side::Right)
		throw std::invalid_argument("ce_coboundary expects a right module");
	ExteriorCochain out;
	const int n = static_cast<int>(g.dim());
	for (const auto &[key, c] : w) {
		for (int i = 0; i < n; ++i) {
			std::vector<int> seq{i};
			seq.insert(seq.end(), key.wedge.begin(), key.wedge.end());
			int s = sort_sign(seq);
			if (s == 0)
				continue;
			SparseVec col = v.rho[i].column(key.m);
			for (const auto &[b, x] : col)
				out.add(ExtKey{b, seq}, c * x * s);
		}
		for (std::size_t t = 0; t < key.wedge.size(); ++t) {
			int k = key.wedge[t];
			Rational st = (t % 2 == 0) ? 1 : -1;
			for (int i = 0; i < n; ++i)
				for (int j = i + 1; j < n; ++j) {
					Rational ck = g.structure(i, j, k);
					if (is_zero(ck))
						continue;
					std::vector<int> seq(key.wedge.begin(), key.wedge.begin() + static_cast<std::ptrdiff_t>(t));
					seq.push_back(i);
					seq.push_back(j);
					seq.insert(seq.end(), key.wedge.begin() + static_cast<std::ptrdiff_t>(t) + 1, key.wedge.end());
					int s = sort_sign(seq);
					if (s != 0)
						out.add(ExtKey{key.m, seq}, c * st * ck * s);
				}
		}
	}
	return out;
}

ExteriorCochain lie_homology_boundary(const LieAlgebra &g, const LieModule &v, const ExteriorCochain &ch)
{
	if (v.side != Side::Right)
		throw std::invalid_argument("lie_homology_boundary expects a right module");
	ExteriorCochain out;
	for (const auto &[key, c] : ch) {
		const auto &w = key.wedge;
		for (std::size_t t = 0; t < w.size(); ++t) {
			std::vector<int> rest = w;
			rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
			Rational st = (t % 2 == 0) ? 1 : -1;
			for (const auto &[b, x] : v.rho[w[t]].column(key.m))
				out.add(ExtKey{b, rest}, c * st * x);
		}
		for (std::size_t t = 0; t < w.size(); ++t)
			for (std::size_t u = t + 1; u < w.size(); ++u) {
				std::vector<int> rest;
				for (std::size_t r = 0; r < w.size(); ++r)
					if (r != t && r != u)
						rest.push_back(w[r]);
				Rational st = ((t + u) % 2 == 0) ? 1 : -1;
				for (const auto &[k, x] : g.bracket(w[t], w[u])) {
					std::vector<int> seq{static_cast<int>(k)};
					seq.insert(seq.end(), rest.begin(), rest.end());
					int s = sort_sign(seq);
					if (s != 0)
						out.add(ExtKey{key.m, seq}, c * st * x * s);
				}
			}
	}
	return out;
}

ExteriorBasis::ExteriorBasis(std::size_t module_dim, std::vector<int> ground, std::size_t q) : q_(q)
{
	auto subs = subsets(ground, q);
	for (std::size_t m = 0; m < module_dim; ++m)
		for (const auto &s : subs)
			keys_.push_back(ExtKey{m, s});
	std::sort(keys_.begin(), keys_.end());
}

std::optional<std::size_t> ExteriorBasis::index(const ExtKey &k) const
{
	auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
	if (it == keys_.end() || *it != k)
		return std::nullopt;
	return static_cast<std::size_t>(it - keys_.begin());
}

SparseVec ExteriorBasis::to_vec(const ExteriorCochain &c) const
{
	SparseVec v;
	for (const auto &[k, x] : c) {
		auto i = index(k);
		if (!i)
			throw std::out_of_range("cochain term outside the exterior basis");
		v[*i] = x;
	}
	return v;
}

ExteriorCochain ExteriorBasis::from_vec(const SparseVec &v) const
{
	ExteriorCochain c;
	for (const auto &[i, x] : v)
		c.add(keys_.at(i), x);
	return c;
}

std::vector<int> complement_of(std::size_t dim, const std::vector<int> &h)
{
	std::vector<int> out;
	for (int i = 0; i < static_cast<int>(dim); ++i)
		if (std::find(h.begin(), h.end(), i) == h.end())
			out.push_back(i);
	return out;
}

SparseMatrix relative_action_matrix(const LieAlgebra &g, const std::vector<int> &complement, const LieModule &v,
				    const ExteriorBasis &basis, std::size_t h_index)
{
	LieModule left = v.with_side(Side::Left);
	SparseMatrix a(basis.size(), basis.size());
	for (std::size_t col = 0; col < basis.size(); ++col) {
		const ExtKey &k = basis.key(col);
		ExteriorCochain img;
		for (const auto &[b, x] : left.rho[h_index].column(k.m))
			img.add(ExtKey{b, k.wedge}, x);
		for (std::size_t t = 0; t < k.wedge.size(); ++t) {
			int c = k.wedge[t];
			for (int cp : complement) {
				Rational w = -g.structure(h_index, cp, c);
				if (is_zero(w))
					continue;
				std::vector<int> seq = k.wedge;
				seq[t] = cp;
				int s = sort_sign(seq);
				if (s != 0)
					img.add(ExtKey{k.m, seq}, w * s);
			}
		}
		for (const auto &[row, x] : basis.to_vec(img))
			a.set(row, col, x);
	}
	return a;
}

std::vector<SubspaceBasis> relative_invariant_basis(const LieAlgebra &g, const std::vector<int> &h, const LieModule &v)
{
	if (!is_subalgebra(g, h))
		throw std::invalid_argument("h not a subalgebra");
	std::vector<int> comp = complement_of(g.dim(), h);
	std::vector<SubspaceBasis> out;
	for (std::size_t q = 0; q <= comp.size(); ++q) {
		ExteriorBasis basis(v.dim, comp, q);
		SparseMatrix stacked(basis.size() * h.size(), basis.size());
		for (std::size_t t = 0; t < h.size(); ++t) {
			SparseMatrix a = relative_action_matrix(g, comp, v, basis, h[t]);
			for (std::size_t r = 0; r < a.rows(); ++r)
				for (const auto &[c, x] : a.row(r))
					stacked.set(t * basis.size() + r, c, x);
		}
		out.push_back(rank_kernel(stacked).kernel);
	}
	return out;
}

std::vector<std::size_t> RelativeComplex::dims() const
{
	std::vector<std::size_t> d;
	for (const auto &s : invariants)
		d.push_back(s.dim());
	return d;
}

RelativeComplex relative_complex(const LieAlgebra &g, const std::vector<int> &h, const LieModule &v)
{
	RelativeComplex rc;
	rc.complement = complement_of(g.dim(), h);
	rc.invariants = relative_invariant_basis(g, h, v);
	LieModule right = v.with_side(Side::Right);
	for (std::size_t q = 0; q <= rc.complement.size(); ++q)
		rc.spaces.emplace_back(v.dim, rc.complement, q);
	for (std::size_t q = 0; q + 1 <= rc.complement.size(); ++q) {
		const auto &src = rc.invariants[q];
		const auto &dst = rc.invariants[q + 1];
		SparseMatrix d(dst.dim(), src.dim());
		for (std::size_t c = 0; c < src.dim(); ++c) {
			ExteriorCochain img = ce_coboundary(g, right, rc.spaces[q].from_vec(src.vectors[c]));
			SparseVec vec;
			for (const auto &[k, x] : img) {
				auto idx = rc.spaces[q + 1].index(k);
				if (!idx)
					throw std::logic_error("relative coboundary leaves the basic cochains");
				vec[*idx] = x;
			}
			auto coords = membership(vec, dst);
			if (!coords)
				throw std::logic_error("relative coboundary leaves the invariant cochains");
			for (std::size_t r = 0; r < coords->size(); ++r)
				if (!is_zero((*coords)[r]))
					d.set(r, c, (*coords)[r]);
		}
		rc.d.push_back(std::move(d));
	}
	return rc;
}

Cohomology cohomology_dims(const std::vector<std::size_t> &space_dims, const std::vector<SparseMatrix> &d)
{
	if (d.size() > space_dims.size())
		throw std::invalid_argument("cohomology_dims: more maps than spaces");
	for (std::size_t q = 0; q < d.size() && q < space_dims.size(); ++q)
		if (d[q].cols() != space_dims[q] || (q + 1 < space_dims.size() && d[q].rows() != space_dims[q + 1]))
			throw std::invalid_argument("cohomology_dims: matrix shape at degree " + std::to_string(q));
	for (std::size_t q = 1; q < d.size(); ++q)
		if (!(d[q] * d[q - 1]).is_zero())
			throw std::logic_error("not a complex at degree " + std::to_string(q));
	Cohomology out;
	for (std::size_t q = 0; q < space_dims.size(); ++q) {
		SubspaceBasis ker;
		if (q < d.size())
			ker = rank_kernel(d[q]).kernel;
		else {
			std::vector<SparseVec> all;
			for (std::size_t i = 0; i < space_dims[q]; ++i)
				all.push_back(SparseVec{{i, Rational(1)}});
			ker = span(space_dims[q], all);
		}
		SubspaceBasis im;
		im.ambient_dim = space_dims[q];
		if (q > 0 && q - 1 < d.size())
			im = column_space(d[q - 1]);
		out.dims.push_back(quotient_dimension(im, ker));
		std::vector<SparseVec> reps;
		std::vector<SparseVec> acc = im.vectors;
		std::size_t have = im.dim();
		for (const auto &k : ker.vectors) {
			acc.push_back(k);
			SubspaceBasis s = span(space_dims[q], acc);
			if (s.dim() > have) {
				have = s.dim();
				reps.push_back(k);
			} else {
				acc.pop_back();
			}
		}
		out.representatives.push_back(std::move(reps));
	}
	return out;
}

} // namespace lhc
