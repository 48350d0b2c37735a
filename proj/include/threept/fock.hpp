#pragma once

#include "threept/scalar.hpp"

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace threept {

/// Polynomial variable families: x_n and x1_n for the oscillators, y_n and
/// y1_n (n < 0) for the Heisenberg part.
enum class VarFamily { x, x1, y, y1 };

struct FockVar {
	VarFamily fam = VarFamily::x;
	int index = 0;
	auto operator<=>(const FockVar&) const = default;
};

/// Sorted list of (variable, positive exponent).
using Monomial = std::vector<std::pair<FockVar, int>>;

struct FockBasis {
	Monomial mono;
	int vcomp = 0;
	auto operator<=>(const FockBasis&) const = default;
};

/// Exact sparse vector of C[x] (x) C[y] (x) V.
class FockVector {
public:
	using Terms = std::map<FockBasis, Scalar>;

	FockVector() = default;

	/// |0> (x) v_vcomp.
	static FockVector vacuum(int vcomp = 0);
	static FockVector basis(Monomial mono, int vcomp, const Scalar& c = 1);

	const Terms& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }
	void add_term(const FockBasis& b, const Scalar& c);

	/// Variables occurring anywhere in the support.
	std::set<FockVar> variables() const;

	FockVector mul_var(const FockVar& v) const;
	FockVector diff_var(const FockVar& v) const;

	FockVector& operator+=(const FockVector& o);
	FockVector& operator-=(const FockVector& o);
	FockVector& operator*=(const Scalar& s);
	friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
	friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
	friend FockVector operator*(const Scalar& s, FockVector a) { return a *= s; }
	friend bool operator==(const FockVector&, const FockVector&) = default;

private:
	Terms terms_;
};

/// Renders e.g. "3/2*x_{-1}^2*y1_{-2} v0"; "0" for the zero vector.
std::string to_string(const FockVector& v);

/// Checks that y and y1 indices are strictly negative.
bool valid_fock_vector(const FockVector& v);

enum class ModeFamily { a, a_star, a1, a1_star, b, b1, one0, one1 };

struct OscillatorMode {
	ModeFamily fam = ModeFamily::a;
	int index = 0;
};

struct HeisenbergParams {
	Scalar B0 = 0;
	Scalar B1_00 = 0; // also B1_11
	Scalar B1_01 = 0;
	Scalar B1_10 = 0;
	Scalar kappa0 = 1;
	Scalar chi1 = 0;
};

/// Oscillator modes under normal ordering r in {0, 1}; one0 acts as 1.
/// Throws std::invalid_argument for b-family modes.
FockVector apply_oscillator(const OscillatorMode& mode, int r, const FockVector& v);

/// Heisenberg modes and the centrals one0 -> kappa0, one1 -> chi1.
/// Throws std::invalid_argument for a-family modes.
FockVector apply_heisenberg(const OscillatorMode& mode, const HeisenbergParams& p, const FockVector& v);

/// Dispatches to apply_oscillator or apply_heisenberg.
FockVector apply_mode_op(const OscillatorMode& mode, int r, const HeisenbergParams& p, const FockVector& v);

} // namespace threept
