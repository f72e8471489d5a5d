#pragma once

#include "lhc/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lhc {

using Mono = std::vector<int>;

template <class K> class LinComb
{
public:
	using key_type = K;
	using Map = std::map<K, Rational>;

	LinComb() = default;
	explicit LinComb(const K &k, const Rational &c = 1) { add(k, c); }

	void add(const K &k, const Rational &c)
	{
		if (is_zero(c))
			return;
		auto [it, fresh] = terms_.try_emplace(k, c);
		if (!fresh) {
			it->second += c;
			if (is_zero(it->second))
				terms_.erase(it);
		}
	}

	void add_scaled(const LinComb &o, const Rational &c)
	{
		if (is_zero(c))
			return;
		for (const auto &[k, v] : o.terms_)
			add(k, v * c);
	}

	LinComb &operator+=(const LinComb &o)
	{
		for (const auto &[k, v] : o.terms_)
			add(k, v);
		return *this;
	}
	LinComb &operator-=(const LinComb &o)
	{
		for (const auto &[k, v] : o.terms_)
			add(k, -v);
		return *this;
	}
	LinComb &operator*=(const Rational &c)
	{
		if (is_zero(c)) {
			terms_.clear();
			return *this;
		}
		for (auto &kv : terms_)
			kv.second *= c;
		return *this;
	}

	friend LinComb operator+(LinComb a, const LinComb &b) { return a += b; }
	friend LinComb operator-(LinComb a, const LinComb &b) { return a -= b; }
	friend LinComb operator*(LinComb a, const Rational &c) { return a *= c; }
	friend LinComb operator*(const Rational &c, LinComb a) { return a *= c; }
	LinComb operator-() const { return LinComb(*this) *= Rational(-1); }

	bool operator==(const LinComb &o) const { return terms_ == o.terms_; }
	bool operator!=(const LinComb &o) const { return !(*this == o); }

	Rational coeff(const K &k) const
	{
		auto it = terms_.find(k);
		return it == terms_.end() ? Rational(0) : it->second;
	}

	bool empty() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }
	auto begin() const { return terms_.begin(); }
	auto end() const { return terms_.end(); }
	const Map &terms() const { return terms_; }

private:
	Map terms_;
};

// Linear extension of a basis-level map.
template <class K, class Fn> auto extend_linear(const LinComb<K> &x, Fn &&f)
{
	using Out = decltype(f(std::declval<const K &>()));
	Out out;
	for (const auto &[k, c] : x)
		out.add_scaled(f(k), c);
	return out;
}

template <class A, class B>
LinComb<std::pair<A, B>> tensor(const LinComb<A> &a, const LinComb<B> &b)
{
	LinComb<std::pair<A, B>> out;
	for (const auto &[ka, ca] : a)
		for (const auto &[kb, cb] : b)
			out.add({ka, kb}, ca * cb);
	return out;
}

// Expands a tensor product of linear combinations into basis keys.
template <class T> LinComb<std::vector<T>> expand_tensor(const std::vector<LinComb<T>> &factors)
{
	LinComb<std::vector<T>> cur;
	cur.add({}, 1);
	for (const auto &f : factors) {
		LinComb<std::vector<T>> next;
		for (const auto &[k, c] : cur)
			for (const auto &[t, d] : f) {
				auto key = k;
				key.push_back(t);
				next.add(key, c * d);
			}
		cur = std::move(next);
	}
	return cur;
}

template <class K>
std::string format_lincomb(const LinComb<K> &x, const std::function<std::string(const K &)> &key)
{
	if (x.empty())
		return "0";
	std::string out;
	bool first = true;
	for (const auto &[k, c] : x) {
		std::string ks = key(k);
		Rational a = abs(c);
		if (!first)
			out += sgn(c) < 0 ? " - " : " + ";
		else if (sgn(c) < 0)
			out += "-";
		first = false;
		if (ks.empty() || ks == "1")
			out += to_string(a);
		else if (a == 1)
			out += ks;
		else
			out += to_string(a) + "*" + ks;
	}
	return out;
}

} // namespace lhc
