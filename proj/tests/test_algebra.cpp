#include "threept/algebra.hpp"

#include <gtest/gtest.h>

using namespace threept;

namespace {

const FormConfig kTrace{};

CurrentElem C(Sl2 x, int k, int w = 0, const Scalar& c = 1)
{
	return CurrentElem::basis(x, k, w, c);
}

CurrentElem omega(const Scalar& c0, const Scalar& c1)
{
	CurrentElem c;
	c.center = {c0, c1};
	return c;
}

// Oracle for d acting on x (x) f: x (x) d(f).
CurrentElem derivation_oracle(const WittElem& d, Sl2 x, const RElem& f)
{
	return CurrentElem::tensor(x, apply_derivation({d.coef}, f));
}

} // namespace

TEST(Algebra, Sl2)
{
	EXPECT_EQ(sl2_bracket(Sl2::e, Sl2::f), std::make_pair(Scalar(1), Sl2::h));
	EXPECT_EQ(sl2_bracket(Sl2::h, Sl2::e), std::make_pair(Scalar(2), Sl2::e));
	EXPECT_EQ(sl2_bracket(Sl2::h, Sl2::f), std::make_pair(Scalar(-2), Sl2::f));
	EXPECT_EQ(sl2_bracket(Sl2::e, Sl2::e).first, 0);
	EXPECT_EQ(form_value(Sl2::e, Sl2::f, kTrace), 1);
	EXPECT_EQ(form_value(Sl2::h, Sl2::h, kTrace), 2);
	EXPECT_EQ(form_value(Sl2::h, Sl2::h, FormConfig{4}), 8);
	EXPECT_EQ(form_value(Sl2::e, Sl2::h, kTrace), 0);
}

TEST(Algebra, CurrentBracketExamples)
{
	EXPECT_EQ(bracket_current(C(Sl2::e, 1), C(Sl2::f, -1), kTrace), C(Sl2::h, 0) + omega(-1, 0));
	EXPECT_EQ(bracket_current(C(Sl2::e, 1), C(Sl2::f, -1), FormConfig{4}), C(Sl2::h, 0) + omega(-4, 0));
	EXPECT_TRUE(bracket_current(C(Sl2::e, 0), C(Sl2::e, 0, 1), kTrace).is_zero());
	EXPECT_EQ(bracket_current(C(Sl2::h, 1), C(Sl2::h, -1), kTrace), omega(-2, 0));
	EXPECT_EQ(bracket_current(C(Sl2::e, 2), C(Sl2::f, -1, 1), kTrace), C(Sl2::h, 1, 1) + omega(0, 2));
	// u * u = t^2 + 4t
	EXPECT_EQ(bracket_current(C(Sl2::e, 0, 1), C(Sl2::f, 0, 1), kTrace), C(Sl2::h, 2) + C(Sl2::h, 1, 0, 4));
	// central elements are central
	EXPECT_TRUE(bracket_current(omega(1, 3), C(Sl2::e, 2), kTrace).is_zero());
}

TEST(Algebra, CurrentBracketAntisymmetric)
{
	for (Sl2 x : {Sl2::e, Sl2::f, Sl2::h})
		for (Sl2 y : {Sl2::e, Sl2::f, Sl2::h})
			for (int k = -3; k <= 3; ++k)
				for (int l = -3; l <= 3; ++l)
					for (int w = 0; w < 4; ++w) {
						CurrentElem a = C(x, k, w & 1), b = C(y, l, w >> 1);
						EXPECT_EQ(bracket_current(a, b, kTrace), Scalar(-1) * bracket_current(b, a, kTrace));
					}
}

TEST(Algebra, WittBracket)
{
	EXPECT_EQ(bracket_witt(WittElem::d1(0), WittElem::d1(1)), WittElem::d(0));
	EXPECT_EQ(bracket_witt(WittElem::d1(0), WittElem::d(0)), WittElem::d1(1) + Scalar(2) * WittElem::d1(0));
	EXPECT_TRUE(bracket_witt(WittElem::d(0), WittElem::d(0)).is_zero());
	EXPECT_EQ(WittElem::dbar(2), WittElem::d(3, -1));
	EXPECT_EQ(WittElem::dbar1(-1), WittElem::d1(0, -1));
}

TEST(Algebra, WittOnCurrentExamples)
{
	EXPECT_EQ(witt_on_current(WittElem::d1(2), C(Sl2::e, 3)), C(Sl2::e, 4, 1, 3));
	EXPECT_EQ(witt_on_current(WittElem::d(1), C(Sl2::h, 2)), C(Sl2::h, 4, 0, 2) + C(Sl2::h, 3, 0, 8));
	EXPECT_EQ(witt_on_current(WittElem::d1(0), C(Sl2::f, 0, 1)), C(Sl2::f, 1) + C(Sl2::f, 0, 0, 2));
	EXPECT_TRUE(witt_on_current(WittElem::d(3), omega(1, 1)).is_zero());
}

TEST(Algebra, WittOnCurrentMatchesDerivationOracle)
{
	for (int m = -4; m <= 4; ++m)
		for (int n = -4; n <= 4; ++n)
			for (int wd = 0; wd < 2; ++wd)
				for (int wx = 0; wx < 2; ++wx) {
					WittElem d = wd ? WittElem::d(m) : WittElem::d1(m);
					CurrentElem got = witt_on_current(d, C(Sl2::f, n, wx));
					EXPECT_EQ(got, derivation_oracle(d, Sl2::f, RElem::monomial(n, wx)));
					EXPECT_EQ(got, witt_on_current_closed(m, wd, Sl2::f, n, wx));
				}
}

TEST(Algebra, DerivationCenterActionVanishes)
{
	for (int m = -3; m <= 3; ++m)
		for (int w = 0; w < 2; ++w)
			EXPECT_TRUE(witt_on_current(w ? WittElem::d(m) : WittElem::d1(m), omega(1, 1), CenterAction::derivation)
			                .is_zero());
}

TEST(Algebra, GaugeBracket)
{
	GaugeElem db1 = GaugeElem::from(WittElem::dbar1(0));
	EXPECT_EQ(bracket_gauge(db1, GaugeElem::from(C(Sl2::e, 1)), kTrace), GaugeElem::from(C(Sl2::e, 1, 1, -1)));
	GaugeElem z = GaugeElem::from(omega(1, 0));
	EXPECT_TRUE(bracket_gauge(z, GaugeElem::from(C(Sl2::h, 3)), kTrace).is_zero());
	EXPECT_TRUE(bracket_gauge(z, GaugeElem::from(WittElem::d(2)), kTrace).is_zero());
	GaugeElem d10 = GaugeElem::from(WittElem::d1(0));
	GaugeElem inner = bracket_gauge(d10, GaugeElem::from(C(Sl2::e, 0)), kTrace);
	EXPECT_TRUE(inner.is_zero());
	EXPECT_TRUE(bracket_gauge(d10, inner, kTrace).is_zero());
	// [current, witt] = -[witt, current]
	GaugeElem a = GaugeElem::from(C(Sl2::f, -2, 1)), d = GaugeElem::from(WittElem::d(1));
	EXPECT_EQ(bracket_gauge(a, d, kTrace), Scalar(-1) * bracket_gauge(d, a, kTrace));
}

TEST(Algebra, JacobiExamples)
{
	auto g = [](Sl2 x, int k, int w = 0) { return GaugeElem::from(C(x, k, w)); };
	EXPECT_TRUE(jacobi_defect(g(Sl2::e, 0), g(Sl2::f, 0), g(Sl2::h, 0), kTrace).is_zero());
	EXPECT_TRUE(jacobi_defect(g(Sl2::e, 2), g(Sl2::f, -2), g(Sl2::h, 0), kTrace).is_zero());
	EXPECT_TRUE(jacobi_defect(GaugeElem::from(WittElem::d1(1)), g(Sl2::e, 0), g(Sl2::f, 0), kTrace).is_zero());
	EXPECT_TRUE(jacobi_defect(GaugeElem::from(WittElem::d(-2)), g(Sl2::e, 3, 1), g(Sl2::f, -1, 1), kTrace).is_zero());
	EXPECT_TRUE(jacobi_defect(GaugeElem::from(WittElem::d(-2)), GaugeElem::from(WittElem::d1(3)), g(Sl2::h, 1, 1),
	                          kTrace)
	                .is_zero());
}

TEST(Algebra, BasisLabels)
{
	EXPECT_EQ(parse_basis_label("e@t^2"), GaugeElem::from(C(Sl2::e, 2)));
	EXPECT_EQ(parse_basis_label("f'@t^-1"), GaugeElem::from(C(Sl2::f, -1, 1)));
	EXPECT_EQ(parse_basis_label("h@1"), GaugeElem::from(C(Sl2::h, 0)));
	EXPECT_EQ(parse_basis_label("d1@3"), GaugeElem::from(WittElem::d1(3)));
	EXPECT_EQ(parse_basis_label("d@-2"), GaugeElem::from(WittElem::d(-2)));
	EXPECT_EQ(parse_basis_label("dbar@0"), GaugeElem::from(WittElem::dbar(0)));
	EXPECT_EQ(parse_basis_label("w1"), GaugeElem::from(omega(0, 1)));
	EXPECT_EQ(parse_basis_label("c2").vir.c2, 1);
	EXPECT_THROW(parse_basis_label("g@t"), std::invalid_argument);
	EXPECT_THROW(parse_basis_label("e@t^x"), std::invalid_argument);
	EXPECT_THROW(parse_basis_label("d@"), std::invalid_argument);
}
