#include "lhc/expr.hpp"

#include <cctype>

namespace lhc {

namespace {

class Parser
{
public:
	Parser(const ExprAlgebra &alg, const std::string &s) : alg_(alg), s_(s) {}

	LinComb<Mono> run()
	{
		auto r = expr();
		skip();
		if (pos_ != s_.size())
			fail("unexpected '" + std::string(1, s_[pos_]) + "'");
		return r;
	}

private:
	const ExprAlgebra &alg_;
	const std::string &s_;
	std::size_t pos_ = 0;

	[[noreturn]] void fail(const std::string &msg) const
	{
		throw ExprError("expression \"" + s_ + "\" at column " + std::to_string(pos_ + 1) + ": " + msg);
	}

	void skip()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}

	bool eat(char c)
	{
		skip();
		if (pos_ < s_.size() && s_[pos_] == c) {
			++pos_;
			return true;
		}
		return false;
	}

	Mono unit() const { return Mono(alg_.names.size(), 0); }
	LinComb<Mono> scalar(const Rational &c) const
	{
		LinComb<Mono> r;
		r.add(unit(), c);
		return r;
	}

	LinComb<Mono> expr()
	{
		LinComb<Mono> acc;
		bool neg = eat('-');
		if (!neg)
			eat('+');
		for (;;) {
			auto t = term();
			acc.add_scaled(t, neg ? Rational(-1) : Rational(1));
			if (eat('+'))
				neg = false;
			else if (eat('-'))
				neg = true;
			else
				return acc;
		}
	}

	LinComb<Mono> term()
	{
		auto acc = factor();
		while (eat('*'))
			acc = alg_.mul(acc, factor());
		return acc;
	}

	int integer()
	{
		skip();
		bool neg = false;
		if (pos_ < s_.size() && s_[pos_] == '-') {
			neg = true;
			++pos_;
		}
		std::size_t start = pos_;
		while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
			++pos_;
		if (start == pos_)
			fail("expected integer exponent");
		int v = std::stoi(s_.substr(start, pos_ - start));
		return neg ? -v : v;
	}

	LinComb<Mono> power(const LinComb<Mono> &base, int e, std::size_t gen_index, bool is_gen)
	{
		if (e < 0) {
			if (!is_gen || !alg_.invertible || !alg_.invertible(gen_index))
				fail("negative exponent on non-invertible generator");
			Mono m = unit();
			m[gen_index] = e;
			return LinComb<Mono>(m);
		}
		auto r = scalar(1);
		for (int k = 0; k < e; ++k)
			r = alg_.mul(r, base);
		return r;
	}

	LinComb<Mono> factor()
	{
		skip();
		if (pos_ >= s_.size())
			fail("unexpected end of input");
		char c = s_[pos_];
		if (c == '(') {
			++pos_;
			auto inner = expr();
			if (!eat(')'))
				fail("expected ')'");
			if (eat('^'))
				return power(inner, integer(), 0, false);
			return inner;
		}
		if (std::isdigit(static_cast<unsigned char>(c))) {
			std::size_t start = pos_;
			while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
				++pos_;
			Rational v;
			try {
				v = parse_rational(s_.substr(start, pos_ - start));
			} catch (const std::invalid_argument &) {
				fail("bad rational literal");
			}
			return scalar(v);
		}
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
			std::size_t start = pos_;
			while (pos_ < s_.size() &&
			       (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
				++pos_;
			std::string name = s_.substr(start, pos_ - start);
			std::size_t idx = alg_.names.size();
			for (std::size_t i = 0; i < alg_.names.size(); ++i)
				if (alg_.names[i] == name)
					idx = i;
			if (idx == alg_.names.size())
				fail("unknown generator '" + name + "'");
			Mono m = unit();
			m[idx] = 1;
			LinComb<Mono> g(m);
			if (eat('^'))
				return power(g, integer(), idx, true);
			return g;
		}
		fail("unexpected '" + std::string(1, c) + "'");
	}
};

} // namespace

LinComb<Mono> parse_expr(const ExprAlgebra &alg, const std::string &text) { return Parser(alg, text).run(); }

} // namespace lhc
