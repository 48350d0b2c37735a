#include "threept/realization.hpp"

#include "threept/budget.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace threept {

int gen_weight(Gen g)
{
	switch (g) {
	case Gen::alpha_star:
	case Gen::alpha1_star:
		return 0;
	default:
		return 1;
	}
}

const char* gen_name(Gen g)
{
	switch (g) {
	case Gen::alpha:
		return "alpha";
	case Gen::alpha_star:
		return "alpha*";
	case Gen::alpha1:
		return "alpha1";
	case Gen::alpha1_star:
		return "alpha1*";
	case Gen::beta:
		return "beta";
	case Gen::beta1:
		return "beta1";
	}
	return "?";
}

FieldExpr& FieldExpr::operator+=(const FieldExpr& o)
{
	terms.insert(terms.end(), o.terms.begin(), o.terms.end());
	return *this;
}

std::string to_string(const FieldExpr& e)
{
	if (e.terms.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& t : e.terms) {
		os << (first ? "" : " + ");
		first = false;
		if (t.coef != 1)
			os << "(" << to_string(t.coef) << ")";
		if (!(t.prefactor == LaurentPoly(1)))
			os << "(" << to_string(t.prefactor, "z") << ")";
		os << ":";
		for (const auto& f : t.factors) {
			for (int i = 0; i < f.deriv; ++i)
				os << "d";
			os << gen_name(f.gen) << "(z)";
		}
		os << ":";
	}
	return os.str();
}

Scalar RealizationParams::chi0() const
{
	return heis.kappa0 + (r == 0 ? 4 : 0);
}

RealizationParams RealizationParams::gauge(const Scalar& kappa0)
{
	RealizationParams p;
	p.r = 1;
	p.heis.kappa0 = kappa0;
	p.heis.chi1 = 0;
	p.nu = Scalar(-1) / (2 * kappa0);
	p.zeta = 0;
	p.mu_v = 0;
	p.gamma1 = Scalar(-1) / (4 * kappa0);
	p.gamma2 = 0;
	p.gamma = (Scalar(-1) / (4 * kappa0)) * LaurentPoly::P();
	return p;
}

bool RealizationParams::satisfies_gauge_constraints() const
{
	const Scalar& k = heis.kappa0;
	return r == 1 && is_zero(heis.chi1) && nu * nu == Scalar(1) / (4 * k * k) && is_zero(zeta) && is_zero(mu_v) &&
	       is_zero(gamma2) && gamma1 == Scalar(-1) / (4 * k) && gamma == (Scalar(-1) / (4 * k)) * LaurentPoly::P();
}

const char* current_gen_name(CurrentGen g)
{
	switch (g) {
	case CurrentGen::e:
		return "e";
	case CurrentGen::f:
		return "f";
	case CurrentGen::h:
		return "h";
	case CurrentGen::e1:
		return "e1";
	case CurrentGen::f1:
		return "f1";
	case CurrentGen::h1:
		return "h1";
	}
	return "?";
}

Sl2 current_gen_sl2(CurrentGen g)
{
	switch (g) {
	case CurrentGen::e:
	case CurrentGen::e1:
		return Sl2::e;
	case CurrentGen::f:
	case CurrentGen::f1:
		return Sl2::f;
	default:
		return Sl2::h;
	}
}

int current_gen_uflag(CurrentGen g)
{
	return (g == CurrentGen::e1 || g == CurrentGen::f1 || g == CurrentGen::h1) ? 1 : 0;
}

CurrentGen current_gen(Sl2 x, int uflag)
{
	switch (x) {
	case Sl2::e:
		return uflag ? CurrentGen::e1 : CurrentGen::e;
	case Sl2::f:
		return uflag ? CurrentGen::f1 : CurrentGen::f;
	default:
		return uflag ? CurrentGen::h1 : CurrentGen::h;
	}
}

namespace {

Factor F(Gen g, int d = 0)
{
	return {g, d};
}

Term T(const Scalar& c, std::vector<Factor> fs, LaurentPoly pre = LaurentPoly(1))
{
	return {c, std::move(pre), std::move(fs)};
}

void push(FieldExpr& e, Term t)
{
	if (!is_zero(t.coef) && !t.prefactor.is_zero())
		e.terms.push_back(std::move(t));
}

} // namespace

FieldExpr single(Gen g, int deriv)
{
	FieldExpr e;
	e.weight = gen_weight(g) + deriv;
	e.terms.push_back(T(1, {F(g, deriv)}));
	return e;
}

FieldExpr tau(CurrentGen g, const RealizationParams& p)
{
	const LaurentPoly P = LaurentPoly::P();
	const Gen a = Gen::alpha, as = Gen::alpha_star, a1 = Gen::alpha1, a1s = Gen::alpha1_star;
	const Gen b = Gen::beta, b1 = Gen::beta1;
	FieldExpr e;
	e.weight = 1;
	switch (g) {
	case CurrentGen::f:
		push(e, T(-1, {F(a)}));
		break;
	case CurrentGen::f1:
		push(e, T(-1, {F(a1)}));
		break;
	case CurrentGen::h:
		push(e, T(2, {F(a), F(as)}));
		push(e, T(2, {F(a1), F(a1s)}));
		push(e, T(1, {F(b)}));
		break;
	case CurrentGen::h1:
		push(e, T(2, {F(a1), F(as)}));
		push(e, T(2, {F(a), F(a1s)}, P));
		push(e, T(1, {F(b1)}));
		break;
	case CurrentGen::e:
		push(e, T(1, {F(a), F(as), F(as)}));
		push(e, T(1, {F(a), F(a1s), F(a1s)}, P));
		push(e, T(2, {F(a1), F(as), F(a1s)}));
		push(e, T(1, {F(b), F(as)}));
		push(e, T(1, {F(b1), F(a1s)}));
		push(e, T(p.chi0(), {F(as, 1)}));
		break;
	case CurrentGen::e1:
		push(e, T(1, {F(a1), F(as), F(as)}));
		push(e, T(1, {F(a1), F(a1s), F(a1s)}, P));
		push(e, T(2, {F(a), F(as), F(a1s)}, P));
		push(e, T(1, {F(b1), F(as)}));
		push(e, T(1, {F(b), F(a1s)}, P));
		push(e, T(p.chi0(), {F(a1s, 1)}, P));
		push(e, T(p.chi0(), {F(a1s)}, LaurentPoly::monomial(1) + LaurentPoly(2)));
		break;
	}
	return e;
}

Scalar tau_center(int which, const RealizationParams& p)
{
	return which == 0 ? p.chi0() : Scalar(0);
}

FieldExpr pi_witt(WittGen g)
{
	const LaurentPoly P = LaurentPoly::P();
	const LaurentPoly dP = P.derivative();
	const Gen a = Gen::alpha, as = Gen::alpha_star, a1 = Gen::alpha1, a1s = Gen::alpha1_star;
	FieldExpr e;
	e.weight = 2;
	if (g == WittGen::d) {
		push(e, T(1, {F(a), F(as, 1)}, P));
		push(e, T(1, {F(a1), F(a1s, 1)}, P));
		push(e, T(Scalar(1, 2), {F(a1), F(a1s)}, dP));
	} else {
		push(e, T(1, {F(a1), F(as, 1)}));
		push(e, T(1, {F(a), F(a1s, 1)}, P));
		push(e, T(Scalar(1, 2), {F(a), F(a1s)}, dP));
	}
	return e;
}

FieldExpr pi_vir(VirGen g, const RealizationParams& p)
{
	const Gen b = Gen::beta, b1 = Gen::beta1;
	FieldExpr e;
	if (g == VirGen::dbar) {
		e = pi_witt(WittGen::d);
		push(e, T(1, {F(b), F(b)}, p.gamma));
		push(e, T(p.mu_v, {F(b, 1)}));
		push(e, T(p.gamma1, {F(b1), F(b1)}));
		push(e, T(p.gamma2, {F(b)}));
	} else {
		e = pi_witt(WittGen::d1);
		push(e, T(p.nu, {F(b), F(b1)}));
		push(e, T(p.zeta, {F(b1, 1)}));
	}
	return e;
}

Scalar pi_center(int which, const RealizationParams& p)
{
	if (which != 1)
		return 0;
	const Scalar& k = p.heis.kappa0;
	Scalar r0 = p.r == 0 ? Scalar(1, 3) : Scalar(0);
	return -(r0 + Scalar(2, 3) * p.nu * p.nu * k * k - 2 * p.zeta * p.zeta * k);
}

namespace {

OscillatorMode to_mode(Gen g, int i)
{
	switch (g) {
	case Gen::alpha:
		return {ModeFamily::a, i};
	case Gen::alpha_star:
		return {ModeFamily::a_star, i};
	case Gen::alpha1:
		return {ModeFamily::a1, i};
	case Gen::alpha1_star:
		return {ModeFamily::a1_star, i};
	case Gen::beta:
		return {ModeFamily::b, i};
	case Gen::beta1:
		return {ModeFamily::b1, i};
	}
	throw std::logic_error("to_mode");
}

bool is_oscillator(Gen g)
{
	return g == Gen::alpha || g == Gen::alpha_star || g == Gen::alpha1 || g == Gen::alpha1_star;
}

bool is_creation_type(Gen g)
{
	return g == Gen::alpha || g == Gen::alpha1;
}

bool is_plus(Gen g, int i, int r)
{
	if (is_oscillator(g)) {
		if (is_creation_type(g))
			return r == 1 || i < 0;
		return r == 0 && i <= 0;
	}
	return i < 0;
}

/// Plus-part index bound: nullopt = unbounded, else the largest plus index.
/// `possible` false when the factor has no plus part at all.
struct PlusRange {
	bool possible = true;
	std::optional<int> upper;
};

PlusRange plus_range(Gen g, int r)
{
	if (is_oscillator(g)) {
		if (is_creation_type(g))
			return r == 1 ? PlusRange{true, std::nullopt} : PlusRange{true, -1};
		return r == 0 ? PlusRange{true, 0} : PlusRange{false, 0};
	}
	return {true, -1};
}

/// Minus indices whose operator can act nonzero on a vector whose variables
/// lie in `vars`.
std::vector<int> minus_candidates(Gen g, int r, const std::set<FockVar>& vars)
{
	std::set<int> out;
	switch (g) {
	case Gen::alpha:
	case Gen::alpha1: {
		if (r == 1)
			break;
		VarFamily fam = g == Gen::alpha ? VarFamily::x : VarFamily::x1;
		for (const auto& v : vars)
			if (v.fam == fam && v.index >= 0)
				out.insert(v.index);
		break;
	}
	case Gen::alpha_star:
	case Gen::alpha1_star: {
		VarFamily fam = g == Gen::alpha_star ? VarFamily::x : VarFamily::x1;
		for (const auto& v : vars)
			if (v.fam == fam && !is_plus(g, -v.index, r))
				out.insert(-v.index);
		break;
	}
	case Gen::beta:
		out.insert(0);
		for (const auto& v : vars)
			if (v.fam == VarFamily::y)
				out.insert(-v.index);
		break;
	case Gen::beta1:
		out.insert(0);
		for (const auto& v : vars) {
			if (v.fam != VarFamily::y1)
				continue;
			for (int i : {-2 - v.index, -1 - v.index})
				if (i > 0)
					out.insert(i);
		}
		break;
	}
	return {out.begin(), out.end()};
}

class ModeApplier {
public:
	ModeApplier(const RealizationParams& p, std::size_t budget) : p_(p), steps_(budget, "apply_mode") {}

	void term(const Term& t, const Scalar& c, int N, const FockVector& v, const std::set<FockVar>& vars,
	          FockVector& out)
	{
		const std::size_t k = t.factors.size();
		if (k == 0) {
			if (N == 0)
				out += c * v;
			return;
		}
		for (unsigned mask = 0; mask < (1u << k); ++mask) {
			std::vector<std::size_t> plus, minus;
			bool feasible = true;
			int unbounded = 0;
			for (std::size_t j = 0; j < k; ++j) {
				if (mask & (1u << j)) {
					PlusRange pr = plus_range(t.factors[j].gen, p_.r);
					if (!pr.possible)
						feasible = false;
					if (!pr.upper)
						++unbounded;
					plus.push_back(j);
				} else {
					minus.push_back(j);
				}
			}
			if (!feasible)
				continue;
			if (unbounded > 0 && plus.size() > 1)
				throw BudgetExceeded("apply_mode: normal-ordered product with an unbounded creation factor "
				                     "and further creation factors is an infinite sum");
			std::vector<std::vector<int>> cands;
			bool empty = false;
			for (std::size_t j : minus) {
				cands.push_back(minus_candidates(t.factors[j].gen, p_.r, vars));
				if (cands.back().empty())
					empty = true;
			}
			if (empty)
				continue;
			std::vector<int> idx(k, 0);
			std::vector<std::size_t> pos(minus.size(), 0);
			while (true) {
				int sum_minus = 0;
				for (std::size_t a = 0; a < minus.size(); ++a) {
					idx[minus[a]] = cands[a][pos[a]];
					sum_minus += idx[minus[a]];
				}
				steps_.tick();
				FockVector vm = v;
				for (std::size_t a = 0; a < minus.size() && !vm.is_zero(); ++a)
					vm = apply_mode_op(to_mode(t.factors[minus[a]].gen, idx[minus[a]]), p_.r, p_.heis, vm);
				if (!vm.is_zero())
					plus_split(t, c, plus, 0, N - sum_minus, idx, vm, out);
				std::size_t a = 0;
				while (a < minus.size() && ++pos[a] == cands[a].size()) {
					pos[a] = 0;
					++a;
				}
				if (a == minus.size())
					break;
			}
		}
	}

private:
	void plus_split(const Term& t, const Scalar& c, const std::vector<std::size_t>& plus, std::size_t at,
	                int remaining, std::vector<int>& idx, const FockVector& vm, FockVector& out)
	{
		if (plus.empty()) {
			if (remaining == 0)
				emit(t, c, idx, vm, plus, out);
			return;
		}
		const std::size_t j = plus[at];
		PlusRange pr = plus_range(t.factors[j].gen, p_.r);
		if (at + 1 == plus.size()) {
			if (pr.upper && remaining > *pr.upper)
				return;
			idx[j] = remaining;
			emit(t, c, idx, vm, plus, out);
			return;
		}
		// every plus factor here is bounded above
		int rest_upper = 0;
		for (std::size_t b = at + 1; b < plus.size(); ++b)
			rest_upper += *plus_range(t.factors[plus[b]].gen, p_.r).upper;
		for (int i = remaining - rest_upper; i <= *pr.upper; ++i) {
			steps_.tick();
			idx[j] = i;
			plus_split(t, c, plus, at + 1, remaining - i, idx, vm, out);
		}
	}

	void emit(const Term& t, const Scalar& c, const std::vector<int>& idx, const FockVector& vm,
	          const std::vector<std::size_t>& plus, FockVector& out)
	{
		Scalar factor = c;
		for (std::size_t j = 0; j < t.factors.size(); ++j) {
			const Factor& f = t.factors[j];
			if (f.deriv > 0)
				factor *= falling(-idx[j] - gen_weight(f.gen), f.deriv);
		}
		if (is_zero(factor))
			return;
		FockVector r = vm;
		for (std::size_t j : plus) {
			r = apply_mode_op(to_mode(t.factors[j].gen, idx[j]), p_.r, p_.heis, r);
			if (r.is_zero())
				return;
		}
		out += factor * r;
	}

	const RealizationParams& p_;
	StepBudget steps_;
};

} // namespace

FockVector apply_mode(const FieldExpr& e, int m, const FockVector& v, const RealizationParams& p, std::size_t budget)
{
	FockVector out;
	if (v.is_zero())
		return out;
	const std::set<FockVar> vars = v.variables();
	ModeApplier applier(p, budget);
	for (const auto& t : e.terms) {
		int w0 = 0;
		for (const auto& f : t.factors)
			w0 += gen_weight(f.gen) + f.deriv;
		// coefficient of z^(-m-weight) in c z^q :...: picks product mode m + weight - w0 + q
		for (const auto& [q, pc] : t.prefactor.terms())
			applier.term(t, t.coef * pc, m + e.weight - w0 + q, v, vars, out);
	}
	return out;
}

FockVector commutator_mode(const FieldExpr& a, const FieldExpr& b, int m, int n, const FockVector& v,
                           const RealizationParams& p)
{
	return apply_mode(a, m, apply_mode(b, n, v, p), p) - apply_mode(b, n, apply_mode(a, m, v, p), p);
}

} // namespace threept
