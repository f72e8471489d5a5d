#pragma once

#include "lhc/coeff.hpp"
#include "lhc/report.hpp"
#include "lhc/rng.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

namespace lhc {

// Product of two F monomials; F is commutative with monomial basis.
Mono mono_mul(const HopfAlgebraF &F, const Mono &a, const Mono &b);
// Two-term random elements; normalized ones lie in the kernel of the counit.
FElem random_f(const HopfAlgebraF &F, Rng &rng, int deg, bool normalized);
UElem random_u(const Enveloping &U, Rng &rng, int deg, bool normalized);

// m (x) h^1 (x) ... (x) h^q
using StdKey = std::pair<std::size_t, std::vector<HMono>>;
using StdCochain = LinComb<StdKey>;

// m (x) u^1 (x) ... (x) u^p (x) f^1 (x) ... (x) f^q
struct BiKey {
	std::size_t m = 0;
	MonoN u;
	MonoN f;

	bool operator<(const BiKey &o) const { return std::tie(m, u, f) < std::tie(o.m, o.u, o.f); }
	bool operator==(const BiKey &o) const { return m == o.m && u == o.u && f == o.f; }
};
using BiCochain = LinComb<BiKey>;

// Operators of a cocyclic module on basis keys; q is always the degree of the input.
template <class K> struct CocyclicOps {
	using Chain = LinComb<K>;
	std::string name;
	std::function<Chain(const K &, int q, int i)> face;
	std::function<Chain(const K &, int q, int j)> degeneracy;
	std::function<Chain(const K &, int q)> tau;
	// normalized: every tensor leg lies in the kernel of the counit
	std::function<Chain(Rng &, int q, bool normalized)> sample;
	std::function<std::string(const Chain &)> format;

	Chain d(const Chain &c, int q, int i) const
	{
		return extend_linear(c, [&](const K &k) { return face(k, q, i); });
	}
	Chain s(const Chain &c, int q, int j) const
	{
		return extend_linear(c, [&](const K &k) { return degeneracy(k, q, j); });
	}
	Chain t(const Chain &c, int q) const
	{
		return extend_linear(c, [&](const K &k) { return tau(k, q); });
	}
	Chain t_pow(Chain c, int q, int n) const
	{
		for (int i = 0; i < n; ++i)
			c = t(c, q);
		return c;
	}

	Chain b(const Chain &c, int q) const
	{
		Chain out;
		for (int i = 0; i <= q + 1; ++i)
			out.add_scaled(d(c, q, i), i % 2 == 0 ? 1 : -1);
		return out;
	}

	// B = (sum_{i<q} (-1)^{(q-1)i} tau^i) sigma_{q-1} tau, landing in degree q-1.
	Chain B(const Chain &c, int q) const
	{
		if (q == 0)
			return {};
		Chain x = s(t(c, q), q, q - 1);
		Chain out;
		for (int i = 0; i < q; ++i) {
			out.add_scaled(x, ((q - 1) * i) % 2 == 0 ? 1 : -1);
			x = t(x, q - 1);
		}
		return out;
	}
};

namespace detail {

template <class K>
void expect_chain(Report &rep, const CocyclicOps<K> &ops, const std::string &id, const std::string &stmt,
		  const LinComb<K> &l, const LinComb<K> &r, const std::function<std::string()> &witness)
{
	if (l == r) {
		rep.pass();
		return;
	}
	rep.fail({id, stmt, witness(), ops.format(l), ops.format(r)});
}

} // namespace detail

// All cosimplicial and cyclic relations, tau^{q+1} = Id and the b/B identities on
// seeded samples of degree q <= q_max.
template <class K>
Report check_cocyclic(const CocyclicOps<K> &ops, int q_max, int samples, std::uint64_t seed)
{
	using Chain = LinComb<K>;
	Report rep;
	Rng rng(seed);
	const std::string pre = ops.name.empty() ? "" : ops.name + ": ";
	for (int q = 0; q <= q_max; ++q)
		for (int n = 0; n < samples; ++n) {
			const bool normalized = n % 2 == 1;
			Chain c = ops.sample(rng, q, normalized);
			auto at = [&](const std::string &extra) {
				return [&, extra] { return pre + "q=" + std::to_string(q) + " " + extra + ", c=" + ops.format(c); };
			};
			auto ij = [](int i, int j) { return "i=" + std::to_string(i) + " j=" + std::to_string(j); };

			for (int j = 1; j <= q + 2; ++j)
				for (int i = 0; i < j; ++i)
					detail::expect_chain(rep, ops, "cosimplicial-dd", "d_j d_i = d_i d_{j-1} (i<j)",
							     ops.d(ops.d(c, q, i), q + 1, j), ops.d(ops.d(c, q, j - 1), q + 1, i),
							     at(ij(i, j)));
			for (int j = 0; j + 2 <= q; ++j)
				for (int i = 0; i <= j; ++i)
					detail::expect_chain(rep, ops, "cosimplicial-ss", "s_j s_i = s_i s_{j+1} (i<=j)",
							     ops.s(ops.s(c, q, i), q - 1, j), ops.s(ops.s(c, q, j + 1), q - 1, i),
							     at(ij(i, j)));
			for (int j = 0; j <= q; ++j)
				for (int i = 0; i <= q + 1; ++i) {
					Chain l = ops.s(ops.d(c, q, i), q + 1, j);
					Chain r;
					if (i < j)
						r = ops.d(ops.s(c, q, j - 1), q - 1, i);
					else if (i == j || i == j + 1)
						r = c;
					else
						r = ops.d(ops.s(c, q, j), q - 1, i - 1);
					detail::expect_chain(rep, ops, "cosimplicial-sd", "s_j d_i relations", l, r, at(ij(i, j)));
				}

			for (int i = 1; i <= q + 1; ++i)
				detail::expect_chain(rep, ops, "cyclic-td", "tau d_i = d_{i-1} tau",
						     ops.t(ops.d(c, q, i), q + 1), ops.d(ops.t(c, q), q, i - 1),
						     at("i=" + std::to_string(i)));
			detail::expect_chain(rep, ops, "cyclic-td", "tau d_0 = d_{q+1}", ops.t(ops.d(c, q, 0), q + 1),
					     ops.d(c, q, q + 1), at("i=0"));
			if (q >= 1) {
				// c has degree q = r + 1 with r the target degree
				const int r = q - 1;
				for (int i = 1; i <= r; ++i)
					detail::expect_chain(rep, ops, "cyclic-ts", "tau s_i = s_{i-1} tau",
							     ops.t(ops.s(c, q, i), r), ops.s(ops.t(c, q), q, i - 1),
							     at("i=" + std::to_string(i)));
				detail::expect_chain(rep, ops, "cyclic-ts", "tau s_0 = s_q tau^2", ops.t(ops.s(c, q, 0), r),
						     ops.s(ops.t_pow(c, q, 2), q, r), at("i=0"));
			}

			detail::expect_chain(rep, ops, "tau-order", "tau^{q+1} = Id", ops.t_pow(c, q, q + 1), c, at(""));

			detail::expect_chain(rep, ops, "b-squared", "b b = 0", ops.b(ops.b(c, q), q + 1), Chain{}, at(""));
			// B squares to zero and anticommutes with b only on normalized cochains
			if (normalized && q >= 2)
				detail::expect_chain(rep, ops, "B-squared", "B B = 0 on normalized cochains",
						     ops.B(ops.B(c, q), q - 1), Chain{}, at(""));
			if (normalized) {
				Chain x = ops.B(ops.b(c, q), q + 1);
				x += ops.b(ops.B(c, q), q - 1);
				detail::expect_chain(rep, ops, "bB", "b B + B b = 0 on normalized cochains", x, Chain{}, at(""));
			}
		}
	return rep;
}

// Standard cocyclic module C^q(H, M) = M (x) H^{(x)q} of a SAYD module.
class StdCyclic
{
public:
	explicit StdCyclic(const Sayd &S) : S_(S) {}

	const Sayd &sayd() const { return S_; }

	StdCochain face(const StdKey &k, int q, int i) const;
	StdCochain degeneracy(const StdKey &k, int q, int j) const;
	StdCochain tau(const StdKey &k, int q) const;

	StdCochain sample(Rng &rng, int q, bool normalized, int leg_degree) const;
	std::string format(const StdCochain &c) const;

	CocyclicOps<StdKey> ops(int leg_degree) const;

private:
	const Sayd &S_;
	mutable std::mutex mu_;
	mutable std::map<StdKey, StdCochain> tau_memo_;
};

// Bicocyclic module C^{p,q}(U, F, M) = M (x) U^{(x)p} (x) F^{(x)q}.
class BiCyclic
{
public:
	explicit BiCyclic(const Sayd &S) : S_(S) {}

	const Sayd &sayd() const { return S_; }

	// u . (f^1 (x) ... (x) f^n)
	LinComb<MonoN> bullet(const Mono &u, const MonoN &f) const;
	LinComb<MonoN> bullet(const UElem &u, const LinComb<MonoN> &f) const;

	// Horizontal operators act on the U legs, vertical ones on the F legs.
	BiCochain row_face(const BiKey &k, int i) const;
	BiCochain row_degeneracy(const BiKey &k, int j) const;
	BiCochain row_tau(const BiKey &k) const;
	BiCochain col_face(const BiKey &k, int i) const;
	BiCochain col_degeneracy(const BiKey &k, int j) const;
	BiCochain col_tau(const BiKey &k) const;

	BiCochain sample(Rng &rng, int p, int q, bool normalized, int leg_degree) const;
	std::string format(const BiCochain &c) const;

	CocyclicOps<BiKey> row_ops(int q, int leg_degree) const;
	CocyclicOps<BiKey> col_ops(int p, int leg_degree) const;
	// Diagonal: d_i = row d_i col d_i, and so on.
	CocyclicOps<BiKey> diagonal_ops(int leg_degree) const;

	// Diagonal identification with the standard complex.
	StdCochain psi(const BiCochain &c) const;
	BiCochain psi_inv(const StdCochain &c) const;

private:
	const Sayd &S_;
};

// Round trips of psi and its intertwining of the diagonal and standard operators.
Report check_psi(const BiCyclic &bi, const StdCyclic &st, int n_max, int samples, std::uint64_t seed,
		 int leg_degree);

} // namespace lhc
