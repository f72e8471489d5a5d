#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

Mat zeros(std::size_t rows, std::size_t cols) { return Mat(rows, std::vector<Q>(cols, Q(0))); }

namespace {

// Row reduction in place; returns pivot columns.
std::vector<std::size_t> reduce(Mat &m, std::size_t cols)
{
	std::vector<std::size_t> pivots;
	std::size_t r = 0;
	for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
		std::size_t p = r;
		while (p < m.size() && m[p][c] == 0)
			++p;
		if (p == m.size())
			continue;
		std::swap(m[p], m[r]);
		Q inv = 1 / m[r][c];
		for (auto &x : m[r])
			x *= inv;
		for (std::size_t i = 0; i < m.size(); ++i) {
			if (i == r || m[i][c] == 0)
				continue;
			Q f = m[i][c];
			for (std::size_t k = c; k < cols; ++k)
				m[i][k] -= f * m[r][k];
		}
		pivots.push_back(c);
		++r;
	}
	return pivots;
}

std::vector<std::vector<int>> tuples(std::size_t n, std::size_t q)
{
	std::vector<std::vector<int>> out;
	if (q > n)
		return out;
	std::vector<int> cur(q);
	for (std::size_t i = 0; i < q; ++i)
		cur[i] = static_cast<int>(i);
	while (true) {
		out.push_back(cur);
		int i = static_cast<int>(q) - 1;
		while (i >= 0 && cur[i] == static_cast<int>(n - q) + i)
			--i;
		if (i < 0)
			break;
		++cur[i];
		for (std::size_t j = i + 1; j < q; ++j)
			cur[j] = cur[j - 1] + 1;
	}
	return out;
}

// Sorts by bubble passes, counting transpositions; 0 on a repeat.
int sort_with_sign(std::vector<int> &t)
{
	int s = 1;
	for (std::size_t i = 0; i < t.size(); ++i)
		for (std::size_t j = 0; j + 1 < t.size() - i; ++j) {
			if (t[j] == t[j + 1])
				return 0;
			if (t[j] > t[j + 1]) {
				std::swap(t[j], t[j + 1]);
				s = -s;
			}
		}
	for (std::size_t j = 0; j + 1 < t.size(); ++j)
		if (t[j] == t[j + 1])
			return 0;
	return s;
}

struct Cochains {
	std::size_t dim = 0;
	std::vector<std::vector<int>> keys;
	std::map<std::vector<int>, std::size_t> index;

	Cochains(std::size_t n, std::size_t q, std::size_t module_dim) : dim(module_dim), keys(tuples(n, q))
	{
		for (std::size_t i = 0; i < keys.size(); ++i)
			index[keys[i]] = i;
	}
	std::size_t size() const { return keys.size() * dim; }
	std::size_t col(std::size_t t, std::size_t a) const { return t * dim + a; }
};

Mat coboundary(const Lie &g, const Rep &v, std::size_t q)
{
	Cochains src(g.n, q, v.dim), dst(g.n, q + 1, v.dim);
	Mat d = zeros(dst.size(), src.size());
	for (std::size_t t = 0; t < dst.keys.size(); ++t) {
		const auto &T = dst.keys[t];
		for (std::size_t i = 0; i < T.size(); ++i) {
			std::vector<int> rest = T;
			rest.erase(rest.begin() + i);
			std::size_t s = src.index.at(rest);
			Q sign = i % 2 == 0 ? 1 : -1;
			for (std::size_t mp = 0; mp < v.dim; ++mp)
				for (std::size_t a = 0; a < v.dim; ++a)
					if (v.rho[T[i]][mp][a] != 0)
						d[dst.col(t, mp)][src.col(s, a)] += sign * v.rho[T[i]][mp][a];
		}
		for (std::size_t i = 0; i < T.size(); ++i)
			for (std::size_t j = i + 1; j < T.size(); ++j) {
				std::vector<int> rest;
				for (std::size_t l = 0; l < T.size(); ++l)
					if (l != i && l != j)
						rest.push_back(T[l]);
				Q sign = (i + j) % 2 == 0 ? 1 : -1;
				for (std::size_t k = 0; k < g.n; ++k) {
					const Q &c = g.C[T[i]][T[j]][k];
					if (c == 0)
						continue;
					std::vector<int> key = rest;
					key.insert(key.begin(), static_cast<int>(k));
					int s = sort_with_sign(key);
					if (s == 0)
						continue;
					std::size_t si = src.index.at(key);
					for (std::size_t a = 0; a < v.dim; ++a)
						d[dst.col(t, a)][src.col(si, a)] += sign * c * s;
				}
			}
	}
	return d;
}

// Rows whose common kernel is the h-basic, h-invariant part of C^q.
Mat relative_constraints(const Lie &g, const Rep &v, const std::vector<int> &h, std::size_t q)
{
	Cochains cq(g.n, q, v.dim);
	Mat rows;
	for (int x : h) {
		if (q >= 1) {
			Cochains lower(g.n, q - 1, v.dim);
			for (std::size_t t = 0; t < lower.keys.size(); ++t)
				for (std::size_t a = 0; a < v.dim; ++a) {
					std::vector<Q> row(cq.size(), Q(0));
					std::vector<int> key = lower.keys[t];
					key.insert(key.begin(), x);
					int s = sort_with_sign(key);
					if (s == 0)
						continue;
					row[cq.col(cq.index.at(key), a)] = s;
					rows.push_back(row);
				}
		}
		for (std::size_t t = 0; t < cq.keys.size(); ++t)
			for (std::size_t mp = 0; mp < v.dim; ++mp) {
				std::vector<Q> row(cq.size(), Q(0));
				for (std::size_t a = 0; a < v.dim; ++a)
					row[cq.col(t, a)] += v.rho[x][mp][a];
				const auto &T = cq.keys[t];
				for (std::size_t i = 0; i < T.size(); ++i)
					for (std::size_t k = 0; k < g.n; ++k) {
						const Q &c = g.C[x][T[i]][k];
						if (c == 0)
							continue;
						std::vector<int> key = T;
						key[i] = static_cast<int>(k);
						int s = sort_with_sign(key);
						if (s == 0)
							continue;
						row[cq.col(cq.index.at(key), mp)] -= c * s;
					}
				rows.push_back(row);
			}
	}
	return rows;
}

Mat basic_basis(const Lie &g, const Rep &v, const std::vector<int> &h, std::size_t q)
{
	Cochains cq(g.n, q, v.dim);
	return kernel(relative_constraints(g, v, h, q), cq.size());
}

} // namespace

std::size_t rank(Mat m)
{
	if (m.empty())
		return 0;
	return reduce(m, m[0].size()).size();
}

Mat kernel(Mat m, std::size_t cols)
{
	std::vector<std::size_t> piv = reduce(m, cols);
	std::vector<bool> is_piv(cols, false);
	for (auto p : piv)
		is_piv[p] = true;
	Mat out = zeros(cols, 0);
	for (std::size_t free = 0; free < cols; ++free) {
		if (is_piv[free])
			continue;
		for (std::size_t r = 0; r < cols; ++r)
			out[r].push_back(Q(0));
		std::size_t c = out[0].size() - 1;
		out[free][c] = 1;
		for (std::size_t i = 0; i < piv.size(); ++i)
			out[piv[i]][c] = -m[i][free];
	}
	return out;
}

Mat mul(const Mat &a, const Mat &b)
{
	if (a.empty())
		return {};
	std::size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
	Mat out = zeros(a.size(), cols);
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t k = 0; k < inner; ++k) {
			if (a[i][k] == 0)
				continue;
			for (std::size_t j = 0; j < cols; ++j)
				out[i][j] += a[i][k] * b[k][j];
		}
	return out;
}

bool jacobi_holds(const Lie &g)
{
	for (std::size_t a = 0; a < g.n; ++a)
		for (std::size_t b = 0; b < g.n; ++b) {
			for (std::size_t k = 0; k < g.n; ++k)
				if (g.C[a][b][k] != -g.C[b][a][k])
					return false;
			for (std::size_t c = 0; c < g.n; ++c)
				for (std::size_t m = 0; m < g.n; ++m) {
					Q s = 0;
					for (std::size_t k = 0; k < g.n; ++k)
						s += g.C[b][c][k] * g.C[a][k][m] + g.C[c][a][k] * g.C[b][k][m] +
						     g.C[a][b][k] * g.C[c][k][m];
					if (s != 0)
						return false;
				}
		}
	return true;
}

bool is_representation(const Lie &g, const Rep &v)
{
	for (std::size_t i = 0; i < g.n; ++i)
		for (std::size_t j = 0; j < g.n; ++j) {
			Mat l = mul(v.rho[i], v.rho[j]), r = mul(v.rho[j], v.rho[i]);
			for (std::size_t a = 0; a < v.dim; ++a)
				for (std::size_t b = 0; b < v.dim; ++b) {
					Q want = 0;
					for (std::size_t k = 0; k < g.n; ++k)
						want += g.C[i][j][k] * v.rho[k][a][b];
					if (l[a][b] - r[a][b] != want)
						return false;
				}
		}
	return true;
}

std::vector<Q> ad_trace(const Lie &g)
{
	std::vector<Q> out(g.n, Q(0));
	for (std::size_t i = 0; i < g.n; ++i)
		for (std::size_t k = 0; k < g.n; ++k)
			out[i] += g.C[i][k][k];
	return out;
}

std::vector<std::size_t> relative_cochain_dims(const Lie &g, const Rep &v, const std::vector<int> &h,
					       int max_degree)
{
	std::vector<std::size_t> out;
	for (int q = 0; q <= max_degree; ++q) {
		Mat k = basic_basis(g, v, h, q);
		out.push_back(k.empty() ? 0 : k[0].size());
	}
	return out;
}

std::vector<std::size_t> relative_cohomology(const Lie &g, const Rep &v, const std::vector<int> &h,
					     int max_degree)
{
	if (!is_representation(g, v))
		throw std::invalid_argument("oracle: not a representation");
	std::vector<std::size_t> out;
	std::size_t prev_image = 0;
	for (int q = 0; q <= max_degree; ++q) {
		Mat K = basic_basis(g, v, h, q);
		std::size_t dimK = K.empty() ? 0 : K[0].size();
		std::size_t r = dimK == 0 ? 0 : rank(mul(coboundary(g, v, q), K));
		out.push_back(dimK - r - prev_image);
		prev_image = r;
	}
	return out;
}

void add_to(Elem &acc, const Elem &e, const Q &c)
{
	for (const auto &[w, x] : e)
		acc[w] += c * x;
}

Elem clean(Elem e)
{
	for (auto it = e.begin(); it != e.end();)
		it = it->second == 0 ? e.erase(it) : std::next(it);
	return e;
}

Elem Straightener::straighten(const Word &w)
{
	auto it = memo_.find(w);
	if (it != memo_.end())
		return it->second;
	std::size_t i = 0;
	while (i + 1 < w.size() && w[i] <= w[i + 1])
		++i;
	Elem out;
	if (i + 1 >= w.size()) {
		out[w] = 1;
	} else {
		Word swapped = w;
		std::swap(swapped[i], swapped[i + 1]);
		add_to(out, straighten(swapped));
		for (std::size_t k = 0; k < g_.n; ++k) {
			const Q &c = g_.C[w[i]][w[i + 1]][k];
			if (c == 0)
				continue;
			Word shorter(w.begin(), w.begin() + i);
			shorter.push_back(static_cast<int>(k));
			shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
			add_to(out, straighten(shorter), c);
		}
		out = clean(out);
	}
	memo_[w] = out;
	return out;
}

Elem Straightener::straighten(const Elem &e)
{
	Elem out;
	for (const auto &[w, c] : e)
		add_to(out, straighten(w), c);
	return clean(out);
}

Elem Straightener::mul(const Elem &a, const Elem &b)
{
	Elem out;
	for (const auto &[wa, ca] : a)
		for (const auto &[wb, cb] : b) {
			Word w = wa;
			w.insert(w.end(), wb.begin(), wb.end());
			add_to(out, straighten(w), ca * cb);
		}
	return clean(out);
}

std::vector<std::pair<int, Q>> binomial_legs(int n)
{
	std::vector<std::pair<int, Q>> out;
	Q c = 1;
	for (int k = 0; k <= n; ++k) {
		out.push_back({k, c});
		c = c * (n - k) / (k + 1);
	}
	return out;
}

} // namespace oracle
