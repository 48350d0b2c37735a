#pragma once

#include "threept/scalar.hpp"

#include <map>
#include <string>

namespace threept {

/// Sparse Laurent polynomial in one formal variable.
class LaurentPoly {
public:
	using Terms = std::map<int, Scalar>;

	LaurentPoly() = default;
	LaurentPoly(const Scalar& c); // NOLINT: constants embed

	static LaurentPoly monomial(int p, const Scalar& c = 1);
	/// P = z^2 + 4z.
	static LaurentPoly P();

	const Terms& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Scalar coeff(int p) const;
	void add_term(int p, const Scalar& c);

	LaurentPoly derivative() const;

	LaurentPoly& operator+=(const LaurentPoly& o);
	LaurentPoly& operator*=(const Scalar& s);
	friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
	friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b)
	{
		LaurentPoly nb = b;
		nb *= Scalar(-1);
		return a += nb;
	}
	friend LaurentPoly operator*(const Scalar& s, LaurentPoly a) { return a *= s; }
	friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
	friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
	Terms terms_;
};

/// Renders in the given variable, e.g. "z^2 + 4*z".
std::string to_string(const LaurentPoly& p, const std::string& var = "z");

} // namespace threept
