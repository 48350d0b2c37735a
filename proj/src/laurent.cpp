#include "threept/laurent.hpp"

#include <sstream>

namespace threept {

LaurentPoly::LaurentPoly(const Scalar& c)
{
	add_term(0, c);
}

LaurentPoly LaurentPoly::monomial(int p, const Scalar& c)
{
	LaurentPoly r;
	r.add_term(p, c);
	return r;
}

LaurentPoly LaurentPoly::P()
{
	return monomial(2) + monomial(1, 4);
}

Scalar LaurentPoly::coeff(int p) const
{
	auto it = terms_.find(p);
	return it == terms_.end() ? Scalar(0) : it->second;
}

void LaurentPoly::add_term(int p, const Scalar& c)
{
	if (threept::is_zero(c))
		return;
	auto [it, inserted] = terms_.try_emplace(p, c);
	if (!inserted) {
		it->second += c;
		if (threept::is_zero(it->second))
			terms_.erase(it);
	}
}

LaurentPoly LaurentPoly::derivative() const
{
	LaurentPoly r;
	for (const auto& [p, c] : terms_)
		r.add_term(p - 1, c * p);
	return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
	for (const auto& [p, c] : o.terms_)
		add_term(p, c);
	return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Scalar& s)
{
	if (threept::is_zero(s)) {
		terms_.clear();
		return *this;
	}
	for (auto& [p, c] : terms_)
		c *= s;
	return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
	LaurentPoly r;
	for (const auto& [pa, ca] : a.terms_)
		for (const auto& [pb, cb] : b.terms_)
			r.add_term(pa + pb, ca * cb);
	return r;
}

std::string to_string(const LaurentPoly& poly, const std::string& var)
{
	if (poly.is_zero())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
		const auto& [p, c] = *it;
		if (first)
			os << (sgn(c) < 0 ? "-" : "");
		else
			os << (sgn(c) < 0 ? " - " : " + ");
		first = false;
		Scalar mag = abs(c);
		if (p == 0) {
			os << to_string(mag);
			continue;
		}
		if (mag != 1)
			os << to_string(mag) << "*";
		os << var;
		if (p != 1)
			os << "^" << p;
	}
	return os.str();
}

} // namespace threept
