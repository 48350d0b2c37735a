#include "threept/formal_dist.hpp"

#include "threept/kahler.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace threept {

Scalar binomial(const Scalar& a, int n)
{
	if (n < 0)
		return 0;
	Scalar r = 1;
	for (int i = 0; i < n; ++i)
		r *= (a - i) / Scalar(i + 1);
	return r;
}

Scalar Coef::at(int p) const
{
	if (!is_series())
		return poly.coeff(p);
	// poly(w) * sum_n binom(h/2, n) 4^n w^-n
	Scalar r = 0;
	const Scalar h(half_power, 2);
	for (const auto& [a, c] : poly.terms()) {
		int n = a - p;
		if (n < 0)
			continue;
		mpz_class four_pow;
		mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(n));
		r += c * binomial(h, n) * Scalar(four_pow);
	}
	return r;
}

std::vector<RelationTerm> LocalRelation::central_terms() const
{
	std::vector<RelationTerm> out;
	for (const auto& t : terms)
		if (t.target.central)
			out.push_back(t);
	return out;
}

std::vector<RelationTerm> LocalRelation::field_terms() const
{
	std::vector<RelationTerm> out;
	for (const auto& t : terms)
		if (!t.target.central)
			out.push_back(t);
	return out;
}

WeightRegistry WeightRegistry::standard()
{
	WeightRegistry r;
	r.set("alpha", 1);
	r.set("alpha*", 0);
	r.set("alpha1", 1);
	r.set("alpha1*", 0);
	r.set("beta", 1);
	r.set("beta1", 1);
	r.set("x", 1);
	r.set("x'", 1);
	r.set("dbar", 2);
	r.set("dbar1", 2);
	return r;
}

int WeightRegistry::weight(const std::string& name) const
{
	auto it = weights_.find(name);
	if (it == weights_.end())
		throw std::invalid_argument("unregistered field '" + name + "'");
	return it->second;
}

std::vector<ModeTerm> mode_bracket(const LocalRelation& rel, int m, int n, const WeightRegistry& reg)
{
	const int da = reg.weight(rel.field_a);
	const int db = reg.weight(rel.field_b);
	const int M = m + da - 1;
	std::map<std::tuple<bool, std::string, int>, Scalar> acc;

	for (const auto& term : rel.terms) {
		const int dt = term.target.central ? 0 : reg.weight(term.target.name);
		const int d = term.target.deriv;
		// Res_z z^(M+q) d_w^j delta = falling(M+q, j) w^(M+q-j); then collect w^(-1)
		auto contribute = [&](int q, int p, const Scalar& c) {
			if (is_zero(c))
				return;
			int Mq = M + q;
			Scalar res = falling(Mq, term.j);
			if (is_zero(res))
				return;
			int k = n + db + p + Mq - term.j - dt - d;
			if (term.target.central) {
				if (k != 0)
					return;
				acc[{true, term.target.name, 0}] += c * res;
			} else {
				acc[{false, term.target.name, k}] += c * res * falling(-k - dt, d);
			}
		};
		if (term.coef.var == Var::z) {
			if (term.coef.is_series())
				throw std::logic_error("series coefficients in z are not supported");
			for (const auto& [q, c] : term.coef.poly.terms())
				contribute(q, 0, c);
		} else if (term.coef.is_series()) {
			if (!term.target.central)
				throw std::logic_error("series coefficients require a central target");
			int p = -(n + db + M - term.j);
			contribute(0, p, term.coef.at(p));
		} else {
			for (const auto& [p, c] : term.coef.poly.terms())
				contribute(0, p, c);
		}
	}

	std::vector<ModeTerm> out;
	for (const auto& [key, c] : acc) {
		if (is_zero(c))
			continue;
		out.push_back({std::get<1>(key), std::get<0>(key), std::get<2>(key), c});
	}
	return out;
}

namespace {

RelationTerm term(LaurentPoly poly, TargetRef target, int j, Var var = Var::w, int half_power = 0)
{
	return {{std::move(poly), var, half_power}, std::move(target), j};
}

std::map<std::string, LocalRelation> build_library()
{
	const LaurentPoly P = LaurentPoly::P();
	const LaurentPoly dP = P.derivative();
	const LaurentPoly one(1);
	const LaurentPoly w = LaurentPoly::monomial(1);
	auto F = [](const char* name, int deriv = 0) { return TargetRef::field(name, deriv); };
	auto C = [](const char* name) { return TargetRef::center(name); };
	std::map<std::string, LocalRelation> lib;

	lib["eezw"] = {"eezw", "dbar1", "dbar1",
	               {term(one, F("dbar", 1), 0), term(2 * one, F("dbar"), 1),
	                term(Scalar(-1) * P, C("c1"), 3), term(Scalar(-3, 2) * dP, C("c1"), 2)}};

	lib["ddzw"] = {"ddzw", "dbar", "dbar",
	               {term(P, F("dbar", 1), 0), term(dP, F("dbar"), 0), term(2 * P, F("dbar"), 1),
	                term(Scalar(-1) * (P * P), C("c1"), 3), term(Scalar(-3) * (dP * P), C("c1"), 2, Var::z),
	                term(Scalar(-6) * P, C("c1"), 1, Var::z), term(LaurentPoly(-12), C("c1"), 1)}};

	lib["dezw"] = {"dezw", "dbar", "dbar1",
	               {term(P, F("dbar1", 1), 0), term(2 * P, F("dbar1"), 1), term(Scalar(3, 2) * dP, F("dbar1"), 0),
	                term(3 * (w * (LaurentPoly(2) + w)), C("c2"), 2, Var::w, 1),
	                term(LaurentPoly::monomial(3), C("c2"), 3, Var::w, 3)}};

	const LaurentPoly w_plus_2 = w + LaurentPoly(2);
	lib["currentalgebra1"] = {"currentalgebra1", "dbar1", "x'",
	                          {term(P, F("x", 1), 0), term(P, F("x"), 1), term(w_plus_2, F("x"), 0)}};
	lib["currentalgebra2"] = {"currentalgebra2", "dbar1", "x", {term(one, F("x'", 1), 0), term(one, F("x'"), 1)}};
	lib["currentalgebra3"] = {"currentalgebra3", "dbar", "x'",
	                          {term(P, F("x'", 1), 0), term(P, F("x'"), 1), term(w_plus_2, F("x'"), 0)}};
	lib["currentalgebra4"] = {"currentalgebra4", "dbar", "x",
	                          {term(P, F("x", 1), 0), term(P, F("x"), 1), term(2 * w_plus_2, F("x"), 0)}};

	lib["bosonrelations.bb"] = {"bosonrelations.bb", "beta", "beta", {term(LaurentPoly(-2), C("one0"), 1)}};
	lib["bosonrelations.b1b1"] = {"bosonrelations.b1b1", "beta1", "beta1",
	                              {term(Scalar(-2) * P, C("one0"), 1), term(Scalar(-2) * w_plus_2, C("one0"), 0)}};
	lib["bosonrelations.bb1"] = {"bosonrelations.bb1", "beta", "beta1",
	                             {term(LaurentPoly::monomial(1, -1), C("one1"), 1, Var::w, 1)}};
	return lib;
}

} // namespace

const std::map<std::string, LocalRelation>& relation_library()
{
	static const std::map<std::string, LocalRelation> lib = build_library();
	return lib;
}

const LocalRelation& lookup_relation(const std::string& name)
{
	const auto& lib = relation_library();
	auto it = lib.find(name);
	if (it == lib.end())
		throw std::invalid_argument("unknown relation '" + name + "'");
	return it->second;
}

std::vector<Scalar> sqrt_series(int N)
{
	if (N < 0)
		throw std::invalid_argument("sqrt_series: negative order");
	std::vector<Scalar> out;
	for (int n = 0; n <= N; ++n) {
		if (n == 0) {
			out.emplace_back(1);
		} else if (n == 1) {
			out.emplace_back(1, 2);
		} else {
			mpz_class den = 1;
			for (int i = 2; i <= n; ++i)
				den *= i;
			den <<= n;
			Scalar c = double_factorial(2 * n - 3) / Scalar(den);
			out.push_back(n % 2 == 0 ? Scalar(-c) : c);
		}
	}
	return out;
}

std::string to_string(const RelationTerm& t)
{
	std::ostringstream os;
	const char* v = t.coef.var == Var::z ? "z" : "w";
	os << "(" << to_string(t.coef.poly, v) << ")";
	if (t.coef.is_series())
		os << "*(1+4/w)^(" << t.coef.half_power << "/2)";
	os << " * ";
	if (t.target.central) {
		os << t.target.name;
	} else {
		for (int i = 0; i < t.target.deriv; ++i)
			os << "d_w ";
		os << t.target.name << "(w)";
	}
	os << " * ";
	if (t.j > 0)
		os << "d_w^" << t.j << " ";
	os << "delta(z/w)";
	return os.str();
}

} // namespace threept
