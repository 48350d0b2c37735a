#pragma once

#include "threept/ring.hpp"

#include <array>
#include <string>
#include <string_view>

namespace threept {

/// Class in Omega_R / dR, coordinates on w0 = [t^-1 dt] and w1 = [t^-1 u dt].
struct OmegaClass {
	Scalar c0 = 0;
	Scalar c1 = 0;

	bool is_zero() const { return threept::is_zero(c0) && threept::is_zero(c1); }

	OmegaClass& operator+=(const OmegaClass& o)
	{
		c0 += o.c0;
		c1 += o.c1;
		return *this;
	}
	OmegaClass& operator-=(const OmegaClass& o)
	{
		c0 -= o.c0;
		c1 -= o.c1;
		return *this;
	}
	friend OmegaClass operator+(OmegaClass a, const OmegaClass& b) { return a += b; }
	friend OmegaClass operator-(OmegaClass a, const OmegaClass& b) { return a -= b; }
	friend OmegaClass operator-(const OmegaClass& a) { return {-a.c0, -a.c1}; }
	friend OmegaClass operator*(const Scalar& s, const OmegaClass& a) { return {s * a.c0, s * a.c1}; }
	friend bool operator==(const OmegaClass& a, const OmegaClass& b) { return a.c0 == b.c0 && a.c1 == b.c1; }
};

/// Renders as "2*w1", "-w0 + 1/2*w1" or "0".
std::string to_string(const OmegaClass& w);

/// Inverse of to_string; throws std::invalid_argument.
OmegaClass parse_omega(std::string_view text);

/// n!! with the extensions (-1)!! = 1 and (-3)!! = -1. Throws for n < -3.
Scalar double_factorial(int n);

/// mu_{k,l}, the w1 coordinate of [t^k d(t^l u)].
Scalar mu(int k, int l);

/// Class of f dg from the four closed basis formulas.
OmegaClass reduce(const RElem& f, const RElem& g);

/// Class of f dg by explicit rewriting with u du = (t+2) dt and exact forms.
/// Throws BudgetExceeded if the rewriting does not terminate in time.
OmegaClass reduce_oracle(const RElem& f, const RElem& g, std::size_t budget = 1'000'000);

/// Closed forms for the individual basis cases.
Scalar reduce_tk_dtl(int k, int l);       // w0 coordinate of t^k d(t^l)
Scalar reduce_tku_dtlu(int k, int l);     // w0 coordinate of t^k u d(t^l u)

/// Representatives t^-1 (x) t and t^-1 u (x) t.
RElem omega_rep_f(int which);
RElem omega_rep_g(int which);

/// Action of a derivation on Omega_R / dR, computed by applying d to both
/// tensor factors of the representative and reducing.
OmegaClass der_action(const Derivation& d, const OmegaClass& w);

/// The tabulated closed forms for t^k u^w D acting on w0 and w1. `sign` is
/// the sign in front of the (delta_{k,-1} + 4 delta_{k,-2}) w0 term of
/// t^k D(w1); the tabulated form carries +1, a rederivation -1.
OmegaClass der_action_table(int k, int w, int basis, int sign);

/// Matrix of an automorphism on Omega_R / dR: column j is g(w_j).
std::array<std::array<Scalar, 2>, 2> automorphism_matrix(const Automorphism& g);

/// Traces on the conjugacy class representatives id, psi, tau2.
std::array<Scalar, 3> d3_character();

} // namespace threept
