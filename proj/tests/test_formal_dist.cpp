#include "threept/formal_dist.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace threept;

namespace {

const std::map<std::string, int> kWeights = {{"alpha", 1}, {"alpha*", 0}, {"alpha1", 1}, {"alpha1*", 0},
                                             {"beta", 1},  {"beta1", 1},  {"x", 1},      {"x'", 1},
                                             {"dbar", 2},  {"dbar1", 2}};

Scalar binom(const Scalar& a, int n)
{
	Scalar r = 1;
	for (int i = 0; i < n; ++i)
		r = r * (a - i) / (i + 1);
	return r;
}

Scalar fall(long x, int j)
{
	Scalar r = 1;
	for (int i = 0; i < j; ++i)
		r *= x - i;
	return r;
}

// Brute-force residue extraction: [A_m, B_n] = Res_z Res_w z^(m+wA-1) w^(n+wB-1) [A(z), B(w)],
// with delta(z/w) = sum_i z^(-i-1) w^i and every series written out term by term.
std::map<std::pair<std::string, int>, Scalar> oracle(const LocalRelation& rel, int m, int n)
{
	std::map<std::pair<std::string, int>, Scalar> out;
	const int wa = kWeights.at(rel.field_a), wb = kWeights.at(rel.field_b);
	for (const auto& term : rel.terms) {
		// expand the coefficient into (z power, w power, value)
		std::vector<std::tuple<int, int, Scalar>> pieces;
		for (const auto& [p, c] : term.coef.poly.terms()) {
			if (term.coef.half_power == 0) {
				if (term.coef.var == Var::z)
					pieces.emplace_back(p, 0, c);
				else
					pieces.emplace_back(0, p, c);
				continue;
			}
			for (int s = 0; s <= 60; ++s)
				pieces.emplace_back(0, p - s, c * binom(Scalar(term.coef.half_power, 2), s) * Scalar(mpz_class(1) << (2 * s)));
		}
		const int j = term.j;
		for (const auto& [qz, qw, c] : pieces) {
			for (int i = -60; i <= 60; ++i) {
				if (m + wa - 1 + qz - i - 1 != -1)
					continue;
				const Scalar dc = fall(i, j); // d_w^j w^i
				const int wpow = n + wb - 1 + qw + i - j;
				if (term.target.central) {
					if (wpow == -1)
						out[{term.target.name, 0}] += c * dc;
					continue;
				}
				const int wt = kWeights.at(term.target.name), d = term.target.deriv;
				for (int k = -60; k <= 60; ++k)
					if (wpow - k - wt - d == -1)
						out[{term.target.name, k}] += c * dc * fall(-k - wt, d);
			}
		}
	}
	for (auto it = out.begin(); it != out.end();)
		it = is_zero(it->second) ? out.erase(it) : std::next(it);
	return out;
}

std::map<std::pair<std::string, int>, Scalar> as_map(const std::vector<ModeTerm>& ts)
{
	std::map<std::pair<std::string, int>, Scalar> out;
	for (const auto& t : ts)
		out[{t.target, t.central ? 0 : t.index}] += t.coef;
	return out;
}

} // namespace

TEST(Laurent, Basics)
{
	LaurentPoly p = LaurentPoly::P();
	EXPECT_EQ(to_string(p), "z^2 + 4*z");
	EXPECT_EQ(p.derivative(), LaurentPoly::monomial(1, 2) + LaurentPoly(4));
	EXPECT_EQ(p * LaurentPoly::monomial(-1), LaurentPoly::monomial(1) + LaurentPoly(4));
	EXPECT_EQ(p.coeff(2), 1);
	EXPECT_EQ(p.coeff(0), 0);
	EXPECT_TRUE((p - p).is_zero());
	EXPECT_EQ(LaurentPoly::monomial(-2, 3).derivative(), LaurentPoly::monomial(-3, -6));
}

TEST(FormalDist, BinomialAndSqrt)
{
	EXPECT_EQ(sqrt_series(0), std::vector<Scalar>{1});
	EXPECT_EQ(sqrt_series(1), (std::vector<Scalar>{1, Scalar(1, 2)}));
	EXPECT_EQ(sqrt_series(3), (std::vector<Scalar>{1, Scalar(1, 2), Scalar(-1, 8), Scalar(1, 16)}));
	auto s = sqrt_series(10);
	for (int n = 0; n <= 10; ++n)
		EXPECT_EQ(s[n], binom(Scalar(1, 2), n));
	EXPECT_EQ(binomial(5, 2), 10);
	EXPECT_EQ(binomial(Scalar(-1), 3), -1);
}

TEST(FormalDist, Library)
{
	const auto& lib = relation_library();
	for (const char* name : {"eezw", "ddzw", "dezw", "currentalgebra1", "currentalgebra2", "currentalgebra3",
	                         "currentalgebra4", "bosonrelations.bb", "bosonrelations.b1b1", "bosonrelations.bb1"})
		EXPECT_TRUE(lib.count(name)) << name;
	const auto& dd = lookup_relation("ddzw");
	EXPECT_EQ(dd.field_terms().size(), 3u);
	EXPECT_EQ(dd.central_terms().size(), 4u);
	EXPECT_TRUE(lookup_relation("currentalgebra4").central_terms().empty());
	const auto& bb = lookup_relation("bosonrelations.bb");
	ASSERT_EQ(bb.terms.size(), 1u);
	EXPECT_TRUE(bb.terms[0].target.central);
	EXPECT_EQ(bb.terms[0].target.name, "one0");
	EXPECT_EQ(bb.terms[0].j, 1);
	EXPECT_EQ(bb.terms[0].coef.at(0), -2);
	EXPECT_THROW(lookup_relation("nope"), std::invalid_argument);
}

TEST(FormalDist, ModeBracketExamples)
{
	const auto reg = WeightRegistry::standard();
	auto bb = mode_bracket(lookup_relation("bosonrelations.bb"), 1, -1, reg);
	ASSERT_EQ(bb.size(), 1u);
	EXPECT_EQ(bb[0].target, "one0");
	EXPECT_EQ(bb[0].coef, -2);
	EXPECT_TRUE(mode_bracket(lookup_relation("bosonrelations.bb"), 1, 0, reg).empty());
	auto ca2 = mode_bracket(lookup_relation("currentalgebra2"), 0, 1, reg);
	ASSERT_EQ(ca2.size(), 1u);
	EXPECT_EQ(ca2[0].target, "x'");
	EXPECT_EQ(ca2[0].index, 1);
	EXPECT_EQ(ca2[0].coef, -1);
	EXPECT_THROW(reg.weight("gamma"), std::invalid_argument);
}

TEST(FormalDist, ModeBracketMatchesResidueOracle)
{
	const auto reg = WeightRegistry::standard();
	for (const auto& [name, rel] : relation_library())
		for (int m = -4; m <= 4; ++m)
			for (int n = -4; n <= 4; ++n)
				EXPECT_EQ(as_map(mode_bracket(rel, m, n, reg)), oracle(rel, m, n)) << name << " " << m << "," << n;
}

TEST(FormalDist, HeisenbergModeFormulas)
{
	const auto reg = WeightRegistry::standard();
	for (int m = -6; m <= 6; ++m)
		for (int n = -6; n <= 6; ++n) {
			auto v = as_map(mode_bracket(lookup_relation("bosonrelations.b1b1"), m, n, reg));
			Scalar want = 0;
			if (m + n == -2)
				want += 2 * (n + 1);
			if (m + n == -1)
				want += 2 * (4 * n + 2);
			EXPECT_EQ((v[{"one0", 0}]), want);
		}
}

TEST(FormalDist, VirasoroRelationsAntisymmetricInFieldPart)
{
	const auto reg = WeightRegistry::standard();
	for (const char* name : {"eezw", "ddzw"})
		for (int m = -3; m <= 3; ++m)
			for (int n = -3; n <= 3; ++n) {
				std::map<std::pair<std::string, int>, Scalar> a, b;
				for (const auto& t : mode_bracket(lookup_relation(name), m, n, reg))
					if (!t.central)
						a[{t.target, t.index}] += t.coef;
				for (const auto& t : mode_bracket(lookup_relation(name), n, m, reg))
					if (!t.central)
						b[{t.target, t.index}] -= t.coef;
				EXPECT_EQ(a, b) << name << " " << m << "," << n;
			}
}
