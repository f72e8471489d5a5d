#pragma once

#include "lhc/exactlin.hpp"
#include "lhc/lincomb.hpp"
#include "lhc/report.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace lhc {

// Elements of a Lie algebra in basis coordinates.
using LieVec = SparseVec;

class LieAlgebra
{
public:
	LieAlgebra() = default;
	explicit LieAlgebra(std::vector<std::string> names);

	std::size_t dim() const { return names_.size(); }
	const std::vector<std::string> &names() const { return names_; }
	int index_of(const std::string &name) const;

	// Sets [X_i,X_j] = v and [X_j,X_i] = -v.
	void set_bracket(std::size_t i, std::size_t j, const LieVec &v);
	// Single structure constant C^k_{i,j}; no antisymmetry bookkeeping.
	void set_structure(std::size_t i, std::size_t j, std::size_t k, const Rational &c);
	Rational structure(std::size_t i, std::size_t j, std::size_t k) const;
	const LieVec &bracket(std::size_t i, std::size_t j) const { return br_[i * dim() + j]; }
	LieVec bracket(const LieVec &x, const LieVec &y) const;

	std::string format(const LieVec &v) const;

private:
	std::vector<std::string> names_;
	std::vector<LieVec> br_;
};

LieVec unit(std::size_t i);
Report check_jacobi(const LieAlgebra &g, const std::string &label = "g");
std::vector<Rational> adjoint_trace_character(const LieAlgebra &g);
bool is_subalgebra(const LieAlgebra &g, const std::vector<int> &idx);

enum class Side { Left, Right };

// rho[i] acts on coordinate columns: (X_i . m_a) = sum_b rho[i](b,a) m_b.
struct LieModule {
	std::size_t dim = 0;
	std::vector<SparseMatrix> rho;
	Side side = Side::Left;

	static LieModule trivial(std::size_t gdim, std::size_t dim, Side side);
	LieModule with_side(Side s) const;
};

LieModule adjoint_module(const LieAlgebra &g, Side side);
Report check_module(const LieAlgebra &g, const LieModule &v);

struct ExtKey {
	std::size_t m = 0;
	std::vector<int> wedge;
	auto operator<=>(const ExtKey &) const = default;
};

using ExteriorCochain = LinComb<ExtKey>;

// Sorts seq increasingly and returns the permutation sign; 0 on a repeated index.
int sort_sign(std::vector<int> &seq);
std::vector<std::vector<int>> subsets(const std::vector<int> &ground, std::size_t q);
std::vector<int> iota_indices(std::size_t n);

// v (x) theta^S  ->  sum vX_i (x) theta^i ^ theta^S + v (x) d_dR theta^S,
// d_dR theta^k = 1/2 C^k_ij theta^i ^ theta^j.  V must be a right module.
ExteriorCochain ce_coboundary(const LieAlgebra &g, const LieModule &v, const ExteriorCochain &w);

// Homology boundary on V (x) wedge^p g for a right module V.
ExteriorCochain lie_homology_boundary(const LieAlgebra &g, const LieModule &v, const ExteriorCochain &c);

// Basis of V (x) wedge^q over a ground set of indices.
class ExteriorBasis
{
public:
	ExteriorBasis() = default;
	ExteriorBasis(std::size_t module_dim, std::vector<int> ground, std::size_t q);

	std::size_t size() const { return keys_.size(); }
	std::size_t degree() const { return q_; }
	const ExtKey &key(std::size_t i) const { return keys_[i]; }
	std::optional<std::size_t> index(const ExtKey &k) const;
	SparseVec to_vec(const ExteriorCochain &c) const;
	ExteriorCochain from_vec(const SparseVec &v) const;

private:
	std::size_t q_ = 0;
	std::vector<ExtKey> keys_;
};

// Left action of h-element X_h on V (x) wedge^q (g/h)*; V given as a right module.
SparseMatrix relative_action_matrix(const LieAlgebra &g, const std::vector<int> &complement, const LieModule &v,
				    const ExteriorBasis &basis, std::size_t h_index);

std::vector<int> complement_of(std::size_t dim, const std::vector<int> &h);

std::vector<SubspaceBasis> relative_invariant_basis(const LieAlgebra &g, const std::vector<int> &h,
						    const LieModule &v);

struct RelativeComplex {
	std::vector<int> complement;
	std::vector<ExteriorBasis> spaces;
	std::vector<SubspaceBasis> invariants;
	std::vector<SparseMatrix> d; // d[q]: invariants[q] -> invariants[q+1], invariant coordinates
	std::vector<std::size_t> dims() const;
};

RelativeComplex relative_complex(const LieAlgebra &g, const std::vector<int> &h, const LieModule &v);

struct Cohomology {
	std::vector<std::size_t> dims;
	std::vector<std::vector<SparseVec>> representatives;
};

// d[q]: C^q -> C^{q+1}.  Throws std::logic_error("not a complex at degree q").
Cohomology cohomology_dims(const std::vector<std::size_t> &space_dims, const std::vector<SparseMatrix> &d);

} // namespace lhc
