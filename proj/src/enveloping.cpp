#include "lhc/enveloping.hpp"

#include <cstdlib>

namespace lhc {

int degree(const Mono &m)
{
	int d = 0;
	for (int e : m)
		d += std::abs(e);
	return d;
}

std::vector<int> word_of(const Mono &m)
{
	std::vector<int> w;
	for (std::size_t i = 0; i < m.size(); ++i)
		for (int e = 0; e < m[i]; ++e)
			w.push_back(static_cast<int>(i));
	return w;
}

std::string format_mono(const Mono &m, const std::vector<std::string> &names)
{
	std::string out;
	for (std::size_t i = 0; i < m.size(); ++i) {
		if (m[i] == 0)
			continue;
		if (!out.empty())
			out += "*";
		out += names[i];
		if (m[i] != 1)
			out += "^" + std::to_string(m[i]);
	}
	return out.empty() ? "1" : out;
}

Enveloping::Enveloping(LieAlgebra g) : g_(std::move(g)) {}

UElem Enveloping::gen(std::size_t i) const
{
	Mono m = unit_mono();
	m[i] = 1;
	return UElem(m);
}

UElem Enveloping::from_lie(const LieVec &v) const
{
	UElem out;
	for (const auto &[i, c] : v)
		out.add_scaled(gen(i), c);
	return out;
}

UElem Enveloping::mul_gen(const Mono &m, int b) const
{
	int last = -1;
	for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i)
		if (m[i] > 0) {
			last = i;
			break;
		}
	if (last <= b) {
		Mono r = m;
		++r[b];
		return UElem(r);
	}
	{
		std::lock_guard lk(mu_);
		auto it = memo_.find({m, b});
		if (it != memo_.end())
			return it->second;
	}
	// m = m' X_c with c > b:  m' X_c X_b = (m' X_b) X_c + m' [X_c, X_b]
	Mono mp = m;
	--mp[last];
	UElem out;
	for (const auto &[n, c] : mul_gen(mp, b))
		out.add_scaled(mul_gen(n, last), c);
	for (const auto &[k, c] : g_.bracket(last, b))
		out.add_scaled(mul_gen(mp, static_cast<int>(k)), c);
	std::lock_guard lk(mu_);
	memo_.emplace(std::make_pair(m, b), out);
	return out;
}

UElem Enveloping::mul(const Mono &a, const Mono &b) const
{
	UElem cur(a);
	for (int x : word_of(b)) {
		UElem next;
		for (const auto &[m, c] : cur)
			next.add_scaled(mul_gen(m, x), c);
		cur = std::move(next);
	}
	return cur;
}

UElem Enveloping::mul(const UElem &a, const UElem &b) const
{
	UElem out;
	for (const auto &[ma, ca] : a)
		for (const auto &[mb, cb] : b)
			out.add_scaled(mul(ma, mb), ca * cb);
	return out;
}

namespace {

Rational binom(int n, int k)
{
	mpz_class r;
	mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
	return Rational(r);
}

void split_rec(const Mono &m, std::size_t legs, std::size_t var, MonoN &cur, const Rational &w, LinComb<MonoN> &out)
{
	if (var == m.size()) {
		out.add(cur, w);
		return;
	}
	// distribute m[var] among legs
	std::vector<int> parts(legs, 0);
	auto rec = [&](auto &&self, std::size_t leg, int left, Rational weight) -> void {
		if (leg + 1 == legs) {
			parts[leg] = left;
			for (std::size_t l = 0; l < legs; ++l)
				cur[l][var] = parts[l];
			split_rec(m, legs, var + 1, cur, weight, out);
			return;
		}
		for (int k = 0; k <= left; ++k) {
			parts[leg] = k;
			self(self, leg + 1, left - k, weight * binom(left, k));
		}
	};
	rec(rec, 0, m[var], w);
	for (std::size_t l = 0; l < legs; ++l)
		cur[l][var] = 0;
}

} // namespace

LinComb<MonoN> split_legs(const Mono &m, std::size_t legs)
{
	LinComb<MonoN> out;
	if (legs == 0) {
		if (degree(m) == 0)
			out.add({}, 1);
		return out;
	}
	MonoN cur(legs, Mono(m.size(), 0));
	split_rec(m, legs, 0, cur, Rational(1), out);
	return out;
}

LinComb<Mono2> Enveloping::coproduct(const Mono &m) const
{
	LinComb<Mono2> out;
	for (const auto &[legs, c] : split_legs(m, 2))
		out.add({legs[0], legs[1]}, c);
	return out;
}

LinComb<MonoN> Enveloping::coproduct_n(const Mono &m, std::size_t legs) const { return split_legs(m, legs); }

Rational Enveloping::counit(const Mono &m) const { return degree(m) == 0 ? 1 : 0; }

Rational Enveloping::counit(const UElem &u) const { return u.coeff(unit_mono()); }

UElem Enveloping::antipode(const Mono &m) const
{
	auto w = word_of(m);
	UElem cur = one();
	for (auto it = w.rbegin(); it != w.rend(); ++it) {
		UElem next;
		for (const auto &[n, c] : cur)
			next.add_scaled(mul_gen(n, *it), c);
		cur = std::move(next);
	}
	if (w.size() % 2 == 1)
		cur *= Rational(-1);
	return cur;
}

UElem Enveloping::antipode(const UElem &u) const
{
	return extend_linear(u, [&](const Mono &m) { return antipode(m); });
}

std::vector<Mono> Enveloping::monomials_up_to(int deg) const
{
	std::vector<Mono> out;
	Mono cur(ngens(), 0);
	auto rec = [&](auto &&self, std::size_t i, int left) -> void {
		if (i == ngens()) {
			out.push_back(cur);
			return;
		}
		for (int e = 0; e <= left; ++e) {
			cur[i] = e;
			self(self, i + 1, left - e);
		}
		cur[i] = 0;
	};
	rec(rec, 0, deg);
	return out;
}

std::string Enveloping::format(const Mono &m) const { return format_mono(m, g_.names()); }

std::string Enveloping::format(const UElem &u) const
{
	return format_lincomb<Mono>(u, [&](const Mono &m) { return format(m); });
}

} // namespace lhc
