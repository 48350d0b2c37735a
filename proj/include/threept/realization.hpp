#pragma once

#include "threept/algebra.hpp"
#include "threept/fock.hpp"
#include "threept/laurent.hpp"

#include <string>
#include <vector>

namespace threept {

/// Free fields: alpha, alpha*, alpha1, alpha1* (oscillators), beta, beta1
/// (Heisenberg).
enum class Gen { alpha, alpha_star, alpha1, alpha1_star, beta, beta1 };

int gen_weight(Gen g);
const char* gen_name(Gen g);

struct Factor {
	Gen gen = Gen::alpha;
	int deriv = 0;
};

/// coef * prefactor(z) * :d^k1 F1(z) ... d^kn Fn(z):
struct Term {
	Scalar coef = 1;
	LaurentPoly prefactor = LaurentPoly(1);
	std::vector<Factor> factors;
};

/// Sum of normal-ordered products, read as a field of conformal weight
/// `weight`: E(z) = sum_m E_m z^(-m-weight).
struct FieldExpr {
	std::vector<Term> terms;
	int weight = 1;

	FieldExpr& operator+=(const FieldExpr& o);
};

std::string to_string(const FieldExpr& e);

struct RealizationParams {
	int r = 1;
	HeisenbergParams heis;
	Scalar nu = 0;
	Scalar zeta = 0;
	Scalar mu_v = 0;
	Scalar gamma1 = 0;
	Scalar gamma2 = 0;
	LaurentPoly gamma;
	FormConfig form;

	/// chi0 = kappa0 + 4 delta_{r,0}.
	Scalar chi0() const;

	/// r = 1, nu = -1/(2 kappa0), gamma = -P/(4 kappa0), gamma1 = -1/(4 kappa0),
	/// zeta = mu = gamma2 = chi1 = 0.
	static RealizationParams gauge(const Scalar& kappa0 = 1);

	/// The constraint set for the gauge action, with nu of either sign.
	bool satisfies_gauge_constraints() const;
};

enum class CurrentGen { e, f, h, e1, f1, h1 };

const char* current_gen_name(CurrentGen g);
Sl2 current_gen_sl2(CurrentGen g);
int current_gen_uflag(CurrentGen g);
CurrentGen current_gen(Sl2 x, int uflag);

FieldExpr tau(CurrentGen g, const RealizationParams& p);

/// tau(omega0) = chi0, tau(omega1) = 0.
Scalar tau_center(int which, const RealizationParams& p);

enum class WittGen { d, d1 };
FieldExpr pi_witt(WittGen g);

enum class VirGen { dbar, dbar1 };
FieldExpr pi_vir(VirGen g, const RealizationParams& p);

/// pi(c1) = -(delta_{r,0}/3 + (2/3) nu^2 kappa0^2 - 2 zeta^2 kappa0); pi(c2) = 0.
Scalar pi_center(int which, const RealizationParams& p);

/// Mode E_m applied to v. Throws BudgetExceeded if the normal-ordered sum
/// cannot be bounded or exceeds `budget` index tuples.
FockVector apply_mode(const FieldExpr& e, int m, const FockVector& v, const RealizationParams& p,
                      std::size_t budget = 5'000'000);

/// A_m (B_n v) - B_n (A_m v).
FockVector commutator_mode(const FieldExpr& a, const FieldExpr& b, int m, int n, const FockVector& v,
                           const RealizationParams& p);

/// Single-factor expression F or d^k F with its natural weight.
FieldExpr single(Gen g, int deriv = 0);

} // namespace threept
