#include "lhc/exactlin.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lhc {

void axpy(SparseVec &y, const Rational &a, const SparseVec &x)
{
	if (is_zero(a))
		return;
	for (const auto &[i, v] : x) {
		auto [it, fresh] = y.try_emplace(i, a * v);
		if (!fresh) {
			it->second += a * v;
			if (is_zero(it->second))
				y.erase(it);
		}
	}
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational &v)
{
	if (r >= rows_ || c >= cols_)
		throw std::out_of_range("matrix index");
	if (lhc::is_zero(v))
		data_[r].erase(c);
	else
		data_[r][c] = v;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational &v)
{
	if (r >= rows_ || c >= cols_)
		throw std::out_of_range("matrix index");
	set(r, c, get(r, c) + v);
}

Rational SparseMatrix::get(std::size_t r, std::size_t c) const
{
	auto it = data_[r].find(c);
	return it == data_[r].end() ? Rational(0) : it->second;
}

SparseVec SparseMatrix::column(std::size_t c) const
{
	SparseVec out;
	for (std::size_t r = 0; r < rows_; ++r) {
		auto it = data_[r].find(c);
		if (it != data_[r].end())
			out[r] = it->second;
	}
	return out;
}

void SparseMatrix::set_column(std::size_t c, const SparseVec &v)
{
	for (std::size_t r = 0; r < rows_; ++r)
		data_[r].erase(c);
	for (const auto &[r, x] : v)
		set(r, c, x);
}

SparseVec SparseMatrix::apply(const SparseVec &x) const
{
	SparseVec out;
	for (std::size_t r = 0; r < rows_; ++r) {
		Rational acc = 0;
		for (const auto &[c, v] : data_[r]) {
			auto it = x.find(c);
			if (it != x.end())
				acc += v * it->second;
		}
		if (!lhc::is_zero(acc))
			out[r] = acc;
	}
	return out;
}

SparseMatrix SparseMatrix::transpose() const
{
	SparseMatrix t(cols_, rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (const auto &[c, v] : data_[r])
			t.data_[c][r] = v;
	return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix &o) const
{
	if (cols_ != o.rows_)
		throw std::invalid_argument("matrix shape mismatch");
	SparseMatrix out(rows_, o.cols_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (const auto &[k, v] : data_[r])
			axpy(out.data_[r], v, o.data_[k]);
	return out;
}

bool SparseMatrix::is_zero() const
{
	return std::all_of(data_.begin(), data_.end(), [](const SparseVec &r) { return r.empty(); });
}

std::size_t SparseMatrix::nonzeros() const
{
	std::size_t n = 0;
	for (const auto &r : data_)
		n += r.size();
	return n;
}

bool SparseMatrix::operator==(const SparseMatrix &o) const
{
	return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

namespace {

// Gauss-Jordan on a list of row vectors.  Returns the nonzero reduced rows
// sorted by pivot.
std::vector<SparseVec> rref_rows(std::vector<SparseVec> rows, std::vector<std::size_t> &pivots)
{
	rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseVec &r) { return r.empty(); }),
		   rows.end());
	std::vector<SparseVec> done;
	pivots.clear();
	while (!rows.empty()) {
		std::size_t lead = std::numeric_limits<std::size_t>::max();
		for (const auto &r : rows)
			lead = std::min(lead, r.begin()->first);
		std::size_t best = rows.size();
		std::size_t best_bits = std::numeric_limits<std::size_t>::max();
		for (std::size_t i = 0; i < rows.size(); ++i) {
			if (rows[i].begin()->first != lead)
				continue;
			std::size_t bits = bit_size(rows[i].begin()->second);
			if (bits < best_bits) {
				best = i;
				best_bits = bits;
			}
		}
		SparseVec piv = std::move(rows[best]);
		rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
		Rational inv = 1 / piv.begin()->second;
		for (auto &kv : piv)
			kv.second *= inv;
		for (auto &r : rows) {
			auto it = r.find(lead);
			if (it != r.end())
				axpy(r, -Rational(it->second), piv);
		}
		for (auto &r : done) {
			auto it = r.find(lead);
			if (it != r.end())
				axpy(r, -Rational(it->second), piv);
		}
		rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseVec &r) { return r.empty(); }),
			   rows.end());
		done.push_back(std::move(piv));
		pivots.push_back(lead);
	}
	std::vector<std::size_t> order(done.size());
	for (std::size_t i = 0; i < order.size(); ++i)
		order[i] = i;
	std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
	std::vector<SparseVec> sorted;
	std::vector<std::size_t> sp;
	for (std::size_t i : order) {
		sorted.push_back(std::move(done[i]));
		sp.push_back(pivots[i]);
	}
	pivots = sp;
	return sorted;
}

} // namespace

SubspaceBasis span(std::size_t ambient_dim, std::vector<SparseVec> generators)
{
	for (const auto &g : generators)
		if (!g.empty() && g.rbegin()->first >= ambient_dim)
			throw std::out_of_range("vector exceeds ambient dimension");
	SubspaceBasis s;
	s.ambient_dim = ambient_dim;
	s.vectors = rref_rows(std::move(generators), s.pivots);
	return s;
}

RankKernel rank_kernel(const SparseMatrix &m)
{
	std::vector<SparseVec> rows;
	rows.reserve(m.rows());
	for (std::size_t r = 0; r < m.rows(); ++r)
		rows.push_back(m.row(r));
	std::vector<std::size_t> pivots;
	auto red = rref_rows(std::move(rows), pivots);
	RankKernel out;
	out.rank = red.size();
	std::vector<bool> is_pivot(m.cols(), false);
	for (auto p : pivots)
		is_pivot[p] = true;
	std::vector<SparseVec> kern;
	for (std::size_t f = 0; f < m.cols(); ++f) {
		if (is_pivot[f])
			continue;
		SparseVec v;
		v[f] = 1;
		for (std::size_t i = 0; i < red.size(); ++i) {
			auto it = red[i].find(f);
			if (it != red[i].end())
				v[pivots[i]] = -it->second;
		}
		kern.push_back(std::move(v));
	}
	out.kernel = span(m.cols(), std::move(kern));
	return out;
}

std::size_t rank(const SparseMatrix &m) { return rank_kernel(m).rank; }

SubspaceBasis column_space(const SparseMatrix &m)
{
	SparseMatrix t = m.transpose();
	std::vector<SparseVec> rows;
	for (std::size_t r = 0; r < t.rows(); ++r)
		rows.push_back(t.row(r));
	return span(m.rows(), std::move(rows));
}

std::optional<std::vector<Rational>> membership(const SparseVec &v, const SubspaceBasis &s)
{
	if (!v.empty() && v.rbegin()->first >= s.ambient_dim)
		throw std::invalid_argument("membership: dimension mismatch");
	std::vector<Rational> coeffs(s.dim());
	SparseVec rest = v;
	for (std::size_t i = 0; i < s.dim(); ++i) {
		auto it = v.find(s.pivots[i]);
		if (it == v.end())
			continue;
		coeffs[i] = it->second;
		axpy(rest, -coeffs[i], s.vectors[i]);
	}
	if (!rest.empty())
		return std::nullopt;
	return coeffs;
}

std::size_t quotient_dimension(const SubspaceBasis &image, const SubspaceBasis &kernel)
{
	if (image.ambient_dim != kernel.ambient_dim)
		throw std::invalid_argument("quotient_dimension: ambient mismatch");
	for (const auto &v : image.vectors)
		if (!membership(v, kernel))
			throw std::logic_error("image not contained in kernel");
	return kernel.dim() - image.dim();
}

} // namespace lhc
