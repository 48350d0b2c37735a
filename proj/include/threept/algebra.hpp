#pragma once

#include "threept/kahler.hpp"
#include "threept/ring.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>

namespace threept {

enum class Sl2 { e, f, h };

const char* sl2_name(Sl2 x);

/// Basis label x (x) t^k u^w of sl2 (x) R.
struct CurrentKey {
	Sl2 x = Sl2::e;
	int k = 0;
	int w = 0;
	auto operator<=>(const CurrentKey&) const = default;
};

/// Element of the current algebra (sl2 (x) R) + Omega_R / dR.
struct CurrentElem {
	std::map<CurrentKey, Scalar> terms;
	OmegaClass center;

	static CurrentElem basis(Sl2 x, int k, int w, const Scalar& c = 1);
	/// x (x) f for an arbitrary ring element f.
	static CurrentElem tensor(Sl2 x, const RElem& f);

	void add_term(const CurrentKey& key, const Scalar& c);
	bool is_zero() const { return terms.empty() && center.is_zero(); }

	CurrentElem& operator+=(const CurrentElem& o);
	CurrentElem& operator*=(const Scalar& s);
	friend CurrentElem operator+(CurrentElem a, const CurrentElem& b) { return a += b; }
	friend CurrentElem operator-(CurrentElem a, const CurrentElem& b)
	{
		CurrentElem nb = b;
		nb *= Scalar(-1);
		return a += nb;
	}
	friend CurrentElem operator*(const Scalar& s, CurrentElem a) { return a *= s; }
	friend bool operator==(const CurrentElem&, const CurrentElem&) = default;
};

/// Element f D of Der(R). The coefficient t^n u^w stands for d_n (w = 1) or
/// d1_n (w = 0).
struct WittElem {
	RElem coef;

	static WittElem d(int n, const Scalar& c = 1) { return {RElem::monomial(n, 1, c)}; }
	static WittElem d1(int n, const Scalar& c = 1) { return {RElem::monomial(n, 0, c)}; }
	/// dbar_m = -d_(m+1), dbar1_m = -d1_(m+1).
	static WittElem dbar(int m) { return d(m + 1, -1); }
	static WittElem dbar1(int m) { return d1(m + 1, -1); }

	bool is_zero() const { return coef.is_zero(); }
	friend WittElem operator+(const WittElem& a, const WittElem& b) { return {a.coef + b.coef}; }
	friend WittElem operator-(const WittElem& a, const WittElem& b) { return {a.coef - b.coef}; }
	friend WittElem operator*(const Scalar& s, const WittElem& a) { return {s * a.coef}; }
	friend bool operator==(const WittElem&, const WittElem&) = default;
};

struct VirasoroElem {
	WittElem witt;
	Scalar c1 = 0;
	Scalar c2 = 0;

	bool is_zero() const { return witt.is_zero() && threept::is_zero(c1) && threept::is_zero(c2); }
	friend bool operator==(const VirasoroElem&, const VirasoroElem&) = default;
};

struct GaugeElem {
	VirasoroElem vir;
	CurrentElem cur;

	static GaugeElem from(const WittElem& w) { return {{w, 0, 0}, {}}; }
	static GaugeElem from(const CurrentElem& c) { return {{}, c}; }

	bool is_zero() const { return vir.is_zero() && cur.is_zero(); }
	friend GaugeElem operator+(const GaugeElem& a, const GaugeElem& b);
	friend GaugeElem operator*(const Scalar& s, const GaugeElem& a);
	friend bool operator==(const GaugeElem&, const GaugeElem&) = default;
};

/// Invariant form scale * trace form: (e,f) = scale, (h,h) = 2 scale.
struct FormConfig {
	Scalar scale = 1;
};

/// How Der(R) acts on the Omega_R / dR part of the current algebra.
enum class CenterAction { trivial, derivation };

Scalar form_value(Sl2 x, Sl2 y, const FormConfig& form);

/// sl2 bracket as (coefficient, label); coefficient 0 when [x, y] = 0.
std::pair<Scalar, Sl2> sl2_bracket(Sl2 x, Sl2 y);

CurrentElem bracket_current(const CurrentElem& a, const CurrentElem& b, const FormConfig& form);

WittElem bracket_witt(const WittElem& a, const WittElem& b);

CurrentElem witt_on_current(const WittElem& d, const CurrentElem& a,
                            CenterAction center = CenterAction::trivial);

/// Closed forms for d_m, d1_m (wd = 1, 0) acting on x_n, x'_n (wx = 0, 1).
CurrentElem witt_on_current_closed(int m, int wd, Sl2 x, int n, int wx);

/// Virasoro central terms are left at zero.
GaugeElem bracket_gauge(const GaugeElem& a, const GaugeElem& b, const FormConfig& form,
                        CenterAction center = CenterAction::trivial);

GaugeElem jacobi_defect(const GaugeElem& a, const GaugeElem& b, const GaugeElem& c, const FormConfig& form,
                        CenterAction center = CenterAction::trivial);

/// Parses "e@t^2", "f'@t^-1", "d@3", "d1@-2", "dbar@0", "dbar1@1", "w0",
/// "w1", "c1", "c2". Throws std::invalid_argument.
GaugeElem parse_basis_label(std::string_view label);

std::string to_string(const CurrentElem& a);
std::string to_string(const WittElem& a);
std::string to_string(const GaugeElem& a);

} // namespace threept
