#include "threept/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace threept {

namespace {

bool is_integer_literal(std::string_view s)
{
	if (s.empty())
		return false;
	size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
	if (i == s.size())
		return false;
	for (; i < s.size(); ++i)
		if (!std::isdigit(static_cast<unsigned char>(s[i])))
			return false;
	return true;
}

} // namespace

Scalar parse_scalar(std::string_view text)
{
	auto slash = text.find('/');
	std::string_view num = text.substr(0, slash);
	std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
	if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
		throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
	std::string n(num);
	if (n[0] == '+')
		n.erase(0, 1);
	mpz_class p(n), q{std::string(den)};
	if (q == 0)
		throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
	Scalar r(p, q);
	r.canonicalize();
	return r;
}

std::string to_string(const Scalar& s)
{
	Scalar c = s;
	c.canonicalize();
	return c.get_str();
}

Scalar falling(long x, int j)
{
	Scalar r = 1;
	for (int i = 0; i < j; ++i)
		r *= x - i;
	return r;
}

} // namespace threept
