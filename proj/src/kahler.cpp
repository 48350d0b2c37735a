#include "threept/kahler.hpp"

#include "threept/budget.hpp"

#include <iterator>
#include <map>
#include <sstream>
#include <stdexcept>

namespace threept {

std::string to_string(const OmegaClass& w)
{
	std::ostringstream os;
	bool first = true;
	auto emit = [&](const Scalar& c, const char* name) {
		if (is_zero(c))
			return;
		if (first)
			os << (sgn(c) < 0 ? "-" : "");
		else
			os << (sgn(c) < 0 ? " - " : " + ");
		first = false;
		Scalar mag = abs(c);
		if (mag != 1)
			os << to_string(mag) << "*";
		os << name;
	};
	emit(w.c0, "w0");
	emit(w.c1, "w1");
	return first ? "0" : os.str();
}

OmegaClass parse_omega(std::string_view text)
{
	OmegaClass r;
	std::string s;
	for (char c : text)
		if (c != ' ')
			s.push_back(c);
	if (s.empty())
		throw std::invalid_argument("empty differential class");
	if (s == "0")
		return r;
	size_t pos = 0;
	while (pos < s.size()) {
		Scalar sign = 1;
		if (s[pos] == '+' || s[pos] == '-') {
			sign = s[pos] == '-' ? -1 : 1;
			++pos;
		} else if (pos != 0) {
			throw std::invalid_argument("malformed differential class: '" + std::string(text) + "'");
		}
		size_t end = s.find_first_of("+-", pos);
		std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
		pos = end == std::string::npos ? s.size() : end;
		Scalar c = 1;
		auto star = term.rfind('*');
		std::string name = term;
		if (star != std::string::npos) {
			c = parse_scalar(term.substr(0, star));
			name = term.substr(star + 1);
		}
		if (name == "w0")
			r.c0 += sign * c;
		else if (name == "w1")
			r.c1 += sign * c;
		else
			throw std::invalid_argument("unknown basis class '" + name + "'");
	}
	return r;
}

Scalar double_factorial(int n)
{
	if (n < -3)
		throw std::invalid_argument("double_factorial: argument below -3");
	if (n == -3)
		return -1;
	if (n <= 1)
		return 1;
	Scalar r = 1;
	for (int i = n; i >= 2; i -= 2)
		r *= i;
	return r;
}

namespace {

// mu_{k,l} = k * g(k+l)
Scalar mu_g(int N)
{
	if (N + 1 < 0)
		return 0;
	Scalar r = double_factorial(2 * N - 1);
	mpz_class two_pow = 1;
	mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(N < 0 ? -N : N));
	if (N >= 0)
		r *= Scalar(two_pow);
	else
		r /= Scalar(two_pow);
	mpz_class fact = 1;
	for (int i = 2; i <= N + 1; ++i)
		fact *= i;
	r /= Scalar(fact);
	if ((N + 1) % 2 != 0)
		r = -r;
	return r;
}

} // namespace

Scalar mu(int k, int l)
{
	if (k == 0)
		return 0;
	return k * mu_g(k + l);
}

Scalar reduce_tk_dtl(int k, int l)
{
	return l == -k ? Scalar(-k) : Scalar(0);
}

Scalar reduce_tku_dtlu(int k, int l)
{
	Scalar r = 0;
	if (k + l == -2)
		r += l + 1;
	if (k + l == -1)
		r += 4 * l + 2;
	return r;
}

OmegaClass reduce(const RElem& f, const RElem& g)
{
	OmegaClass r;
	for (const auto& [kf, cf] : f.terms()) {
		for (const auto& [kg, cg] : g.terms()) {
			Scalar c = cf * cg;
			int k = kf.k, l = kg.k;
			if (kf.w == 0 && kg.w == 0)
				r.c0 += c * reduce_tk_dtl(k, l);
			else if (kf.w == 1 && kg.w == 1)
				r.c0 += c * reduce_tku_dtlu(k, l);
			else if (kf.w == 0)
				r.c1 += c * mu(k, l);
			else
				// t^k u d(t^l) = l t^(k+l-1) u dt = l (t^(k+l-1) d(t u) - t^(k+l) du)
				r.c1 += c * l * (mu(k + l - 1, 1) - mu(k + l, 0));
		}
	}
	return r;
}

OmegaClass reduce_oracle(const RElem& f, const RElem& g, std::size_t budget)
{
	StepBudget steps(budget, "reduce_oracle");
	// f dg = A dt + B du
	RElem A, B;
	for (const auto& [kg, cg] : g.terms()) {
		if (kg.w == 0) {
			A += f * RElem::monomial(kg.k - 1, 0, cg * kg.k);
		} else {
			B += f * RElem::monomial(kg.k, 0, cg);
			A += f * RElem::monomial(kg.k - 1, 1, cg * kg.k);
		}
	}
	// t^a u du = t^a (t+2) dt; t^a du = d(t^a u) - a t^(a-1) u dt
	for (const auto& [key, c] : B.terms()) {
		steps.tick();
		if (key.w == 1) {
			A.add_term({key.k + 1, 0}, c);
			A.add_term({key.k, 0}, 2 * c);
		} else {
			A.add_term({key.k - 1, 1}, -c * key.k);
		}
	}
	OmegaClass r;
	std::map<int, Scalar> udt;
	for (const auto& [key, c] : A.terms()) {
		if (key.w == 0) {
			// t^a dt is exact unless a = -1
			if (key.k == -1)
				r.c0 += c;
		} else {
			udt[key.k] += c;
		}
	}
	while (!udt.empty()) {
		steps.tick();
		auto hi = std::prev(udt.end());
		auto lo = udt.begin();
		if (hi->first >= 0) {
			int a = hi->first;
			Scalar c = hi->second;
			udt.erase(hi);
			Scalar factor(-(4 * a + 2), a + 2);
			factor.canonicalize();
			udt[a - 1] += c * factor;
		} else if (lo->first <= -2) {
			int a = lo->first;
			Scalar c = lo->second;
			udt.erase(lo);
			Scalar factor(-(a + 3), 4 * a + 6);
			factor.canonicalize();
			if (!is_zero(factor))
				udt[a + 1] += c * factor;
		} else {
			r.c1 += lo->second;
			udt.erase(lo);
		}
	}
	return r;
}

RElem omega_rep_f(int which)
{
	return RElem::monomial(-1, which == 0 ? 0 : 1);
}

RElem omega_rep_g(int)
{
	return RElem::t(1);
}

OmegaClass der_action(const Derivation& d, const OmegaClass& w)
{
	OmegaClass r;
	for (int j = 0; j < 2; ++j) {
		const Scalar& c = j == 0 ? w.c0 : w.c1;
		if (is_zero(c))
			continue;
		RElem f = omega_rep_f(j), g = omega_rep_g(j);
		r += c * (reduce(apply_derivation(d, f), g) + reduce(f, apply_derivation(d, g)));
	}
	return r;
}

OmegaClass der_action_table(int k, int w, int basis, int sign)
{
	auto delta = [](int a, int b) { return a == b ? Scalar(1) : Scalar(0); };
	if (w == 0 && basis == 0)
		return {0, mu(1, k - 2) + mu(-1, k)};
	if (w == 1 && basis == 0)
		return {};
	if (w == 0 && basis == 1)
		return {sign * (delta(k, -1) + 4 * delta(k, -2)), -(mu(k + 2, 1) + 2 * mu(k + 1, 1))};
	return {delta(k, -5) + 6 * delta(k, -4) + 8 * delta(k, -3), 2 * (mu(k, 1) + 4 * mu(k + 1, 1))};
}

std::array<std::array<Scalar, 2>, 2> automorphism_matrix(const Automorphism& g)
{
	std::array<std::array<Scalar, 2>, 2> m;
	for (int j = 0; j < 2; ++j) {
		OmegaClass img = reduce(g.apply(omega_rep_f(j)), g.apply(omega_rep_g(j)));
		m[0][j] = img.c0;
		m[1][j] = img.c1;
	}
	return m;
}

std::array<Scalar, 3> d3_character()
{
	std::array<Scalar, 3> out;
	const Automorphism reps[3] = {Automorphism::identity(), Automorphism::psi(), Automorphism::tau2()};
	for (int i = 0; i < 3; ++i) {
		auto m = automorphism_matrix(reps[i]);
		out[i] = m[0][0] + m[1][1];
	}
	return out;
}

} // namespace threept
