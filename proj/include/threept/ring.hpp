#pragma once

#include "threept/scalar.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>

namespace threept {

/// Basis monomial t^k u^w of the three-point ring, w in {0, 1}.
struct RKey {
	int k = 0;
	int w = 0;
	auto operator<=>(const RKey&) const = default;
};

/// Element of R = Q[t, t^-1, u | u^2 = t^2 + 4t] in the basis {t^k, t^k u}.
///
/// Stored sparsely; zero coefficients are never kept, so two elements are
/// equal exactly when their term maps are equal.
class RElem {
public:
	using Terms = std::map<RKey, Scalar>;

	RElem() = default;
	RElem(const Scalar& c); // NOLINT: scalars embed as constants

	static RElem monomial(int k, int w, const Scalar& c = 1);
	static RElem t(int k = 1) { return monomial(k, 0); }
	static RElem u() { return monomial(0, 1); }

	const Terms& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Scalar coeff(int k, int w) const;

	void add_term(const RKey& key, const Scalar& c);

	RElem& operator+=(const RElem& o);
	RElem& operator-=(const RElem& o);
	RElem& operator*=(const Scalar& s);

	friend RElem operator+(RElem a, const RElem& b) { return a += b; }
	friend RElem operator-(RElem a, const RElem& b) { return a -= b; }
	friend RElem operator-(RElem a) { return a *= Scalar(-1); }
	friend RElem operator*(RElem a, const Scalar& s) { return a *= s; }
	friend RElem operator*(const Scalar& s, RElem a) { return a *= s; }
	friend RElem operator*(const RElem& a, const RElem& b);
	friend bool operator==(const RElem& a, const RElem& b) { return a.terms_ == b.terms_; }

private:
	Terms terms_;
};

/// Ring product with u^2 rewritten to t^2 + 4t.
RElem mul(const RElem& a, const RElem& b);

RElem pow(const RElem& a, int n);

/// Renders e.g. "3/2*t^-1*u - 2"; "0" for the zero element.
std::string to_string(const RElem& f);

/// Inverse of to_string. Accepts sums of '*'-separated factors, each a
/// rational, "t", "t^k" or "u". Throws std::invalid_argument.
RElem parse_relem(std::string_view text);

/// The derivation coef * D with D = (t+2) d/du + u d/dt.
struct Derivation {
	RElem coef;
	friend bool operator==(const Derivation&, const Derivation&) = default;
};

RElem apply_derivation(const Derivation& d, const RElem& f);

/// [f D, g D] = (f D(g) - g D(f)) D.
Derivation bracket_der(const Derivation& d1, const Derivation& d2);

/// Ring automorphism given by the images of t, t^-1 and u.
///
/// Constructed only through the named elements of D3 and composition; the
/// constructor checks img_t * img_t_inv = 1 and img_u^2 = img_t^2 + 4 img_t.
class Automorphism {
public:
	static Automorphism identity();
	/// Conjugate of s -> 1 - s.
	static Automorphism psi();
	/// Conjugate of s -> 1 / (1 - s), of order three.
	static Automorphism tau2();

	/// (g * h)(f) = g(h(f)).
	friend Automorphism operator*(const Automorphism& g, const Automorphism& h);

	const RElem& img_t() const { return img_t_; }
	const RElem& img_t_inv() const { return img_t_inv_; }
	const RElem& img_u() const { return img_u_; }
	const std::string& label() const { return label_; }

	RElem apply(const RElem& f) const;

	/// Agreement on the generators t, t^-1, u, hence on all of R.
	bool same_map(const Automorphism& o) const;

private:
	Automorphism(RElem t, RElem t_inv, RElem u, std::string label);

	RElem img_t_, img_t_inv_, img_u_;
	std::string label_;
};

inline RElem apply_automorphism(const Automorphism& g, const RElem& f) { return g.apply(f); }

/// Generators of S = Q[s, s^-1, (s-1)^-1].
enum class SGen { s, s_inv, s_minus_1_inv };

/// Image of an S generator under the ring isomorphism S -> R.
RElem phi_image(SGen gen);

} // namespace threept
