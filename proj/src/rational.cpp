#include "lhc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lhc {

Rational parse_rational(const std::string &text)
{
	std::size_t b = 0, e = text.size();
	while (b < e && std::isspace(static_cast<unsigned char>(text[b])))
		++b;
	while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1])))
		--e;
	std::string s = text.substr(b, e - b);
	if (s.empty())
		throw std::invalid_argument("empty rational");
	std::size_t slash = s.find('/');
	auto valid_int = [](const std::string &t) {
		std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
		if (i == t.size())
			return false;
		for (; i < t.size(); ++i)
			if (!std::isdigit(static_cast<unsigned char>(t[i])))
				return false;
		return true;
	};
	std::string num = s.substr(0, slash);
	std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
	if (!num.empty() && num[0] == '+')
		num.erase(0, 1);
	if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
		throw std::invalid_argument("malformed rational '" + text + "'");
	mpz_class n(num, 10), d(den, 10);
	if (d == 0)
		throw std::invalid_argument("zero denominator in '" + text + "'");
	Rational r(n, d);
	r.canonicalize();
	return r;
}

std::string to_string(const Rational &r) { return r.get_str(10); }

std::size_t bit_size(const Rational &r)
{
	return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

} // namespace lhc
