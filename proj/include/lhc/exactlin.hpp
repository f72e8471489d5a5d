#pragma once

#include "lhc/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace lhc {

using SparseVec = std::map<std::size_t, Rational>;

void axpy(SparseVec &y, const Rational &a, const SparseVec &x);

class SparseMatrix
{
public:
	SparseMatrix() = default;
	SparseMatrix(std::size_t rows, std::size_t cols);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	void set(std::size_t r, std::size_t c, const Rational &v);
	void add(std::size_t r, std::size_t c, const Rational &v);
	Rational get(std::size_t r, std::size_t c) const;
	const SparseVec &row(std::size_t r) const { return data_[r]; }

	// Column c as a sparse vector.
	SparseVec column(std::size_t c) const;
	void set_column(std::size_t c, const SparseVec &v);

	SparseVec apply(const SparseVec &x) const;
	SparseMatrix transpose() const;
	SparseMatrix operator*(const SparseMatrix &o) const;
	bool is_zero() const;
	std::size_t nonzeros() const;
	bool operator==(const SparseMatrix &o) const;

private:
	std::size_t rows_ = 0, cols_ = 0;
	std::vector<SparseVec> data_;
};

// Reduced row echelon basis: pivots[i] is the leading index of vectors[i], the
// entry there is 1 and every other vector vanishes at that index.
struct SubspaceBasis {
	std::size_t ambient_dim = 0;
	std::vector<SparseVec> vectors;
	std::vector<std::size_t> pivots;

	std::size_t dim() const { return vectors.size(); }
};

struct RankKernel {
	std::size_t rank = 0;
	SubspaceBasis kernel;
};

SubspaceBasis span(std::size_t ambient_dim, std::vector<SparseVec> generators);
RankKernel rank_kernel(const SparseMatrix &m);
std::size_t rank(const SparseMatrix &m);
SubspaceBasis column_space(const SparseMatrix &m);

// Coefficients w.r.t. s.vectors, or nullopt when v is outside the span.
std::optional<std::vector<Rational>> membership(const SparseVec &v, const SubspaceBasis &s);

// dim kernel - dim image; throws std::logic_error if image is not inside kernel.
std::size_t quotient_dimension(const SubspaceBasis &image, const SubspaceBasis &kernel);

} // namespace lhc
