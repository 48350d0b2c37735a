#include "threept/fock.hpp"

#include <gtest/gtest.h>

using namespace threept;

namespace {

FockVector X(int n, int vcomp = 0)
{
	return FockVector::basis({{{VarFamily::x, n}, 1}}, vcomp);
}

FockVector op(ModeFamily f, int n, int r, const FockVector& v)
{
	return apply_oscillator({f, n}, r, v);
}

} // namespace

TEST(Fock, VectorBasics)
{
	FockVector v = FockVector::basis({{{VarFamily::x, -1}, 2}, {{VarFamily::y1, -2}, 1}}, 0, Scalar(3, 2));
	EXPECT_EQ(to_string(v), "3/2*x_{-1}^2*y1_{-2}*v0");
	EXPECT_EQ(v.mul_var({VarFamily::x, -1}).diff_var({VarFamily::x, -1}), Scalar(3) * v);
	EXPECT_TRUE(v.diff_var({VarFamily::x, 4}).is_zero());
	EXPECT_TRUE((v - v).is_zero());
	EXPECT_TRUE(valid_fock_vector(v));
	EXPECT_FALSE(valid_fock_vector(FockVector::basis({{{VarFamily::y, 0}, 1}}, 0)));
	EXPECT_THROW(FockVector::basis({}, 2), std::invalid_argument);
	EXPECT_EQ(to_string(FockVector{}), "0");
}

TEST(Fock, OscillatorExamples)
{
	const FockVector vac = FockVector::vacuum(0);
	EXPECT_TRUE(op(ModeFamily::a, 0, 0, vac).is_zero());
	EXPECT_EQ(op(ModeFamily::a_star, 0, 0, vac), X(0));
	EXPECT_EQ(op(ModeFamily::a, 5, 1, vac), X(5));
	EXPECT_EQ(op(ModeFamily::a, 1, 0, X(1)), vac);
	EXPECT_TRUE(op(ModeFamily::a_star, 3, 1, vac).is_zero());
	EXPECT_EQ(op(ModeFamily::a_star, 3, 1, X(-3)), Scalar(-1) * vac);
	EXPECT_EQ(op(ModeFamily::one0, 0, 0, X(2)), X(2));
	EXPECT_THROW(op(ModeFamily::b, 0, 0, vac), std::invalid_argument);
}

TEST(Fock, CanonicalCommutators)
{
	// [a_m, a*_n] = delta_{m+n,0} on a few monomials, both orderings
	const std::vector<FockVector> vs = {FockVector::vacuum(1), X(0) + X(-2, 1),
	                                    FockVector::basis({{{VarFamily::x, 2}, 2}, {{VarFamily::x1, -1}, 1}}, 0)};
	for (int r = 0; r < 2; ++r)
		for (int m = -3; m <= 3; ++m)
			for (int n = -3; n <= 3; ++n)
				for (const auto& v : vs) {
					FockVector c = op(ModeFamily::a, m, r, op(ModeFamily::a_star, n, r, v)) -
					               op(ModeFamily::a_star, n, r, op(ModeFamily::a, m, r, v));
					EXPECT_EQ(c, Scalar(m + n == 0 ? 1 : 0) * v);
					FockVector z = op(ModeFamily::a1, m, r, op(ModeFamily::a_star, n, r, v)) -
					               op(ModeFamily::a_star, n, r, op(ModeFamily::a1, m, r, v));
					EXPECT_TRUE(z.is_zero());
				}
}

TEST(Fock, HeisenbergExamples)
{
	HeisenbergParams p;
	p.kappa0 = 3;
	p.B0 = Scalar(1, 3);
	p.B1_00 = 2;
	p.B1_01 = 5;
	p.B1_10 = 7;
	const FockVector vac0 = FockVector::vacuum(0), vac1 = FockVector::vacuum(1);
	auto Y = [](VarFamily f, int n) { return FockVector::basis({{{f, n}, 1}}, 0); };
	EXPECT_EQ(apply_heisenberg({ModeFamily::b, -1}, p, vac0), Y(VarFamily::y, -1));
	EXPECT_EQ(apply_heisenberg({ModeFamily::b, 2}, p, Y(VarFamily::y, -2)), Scalar(-4) * p.kappa0 * vac0);
	EXPECT_EQ(apply_heisenberg({ModeFamily::b, 0}, p, vac0), p.B0 * vac0);
	EXPECT_EQ(apply_heisenberg({ModeFamily::b1, 0}, p, vac0), p.B1_00 * vac0 + p.B1_01 * vac1);
	EXPECT_EQ(apply_heisenberg({ModeFamily::b1, 0}, p, vac1), p.B1_10 * vac0 + p.B1_00 * vac1);
	EXPECT_EQ(apply_heisenberg({ModeFamily::b1, 1}, p, Y(VarFamily::y1, -3)), Scalar(-4) * p.kappa0 * vac0);
	EXPECT_EQ(apply_heisenberg({ModeFamily::one0, 0}, p, vac1), p.kappa0 * vac1);
	EXPECT_TRUE(apply_heisenberg({ModeFamily::one1, 0}, p, vac1).is_zero());
	EXPECT_THROW(apply_heisenberg({ModeFamily::a, 0}, p, vac0), std::invalid_argument);
}

TEST(Fock, HeisenbergCommutators)
{
	HeisenbergParams p;
	p.kappa0 = Scalar(-2, 5);
	p.B1_01 = 1;
	const FockVector vac = FockVector::vacuum(0);
	auto comm = [&](ModeFamily f, int m, ModeFamily g, int n, const FockVector& v) {
		return apply_heisenberg({f, m}, p, apply_heisenberg({g, n}, p, v)) -
		       apply_heisenberg({g, n}, p, apply_heisenberg({f, m}, p, v));
	};
	EXPECT_EQ(comm(ModeFamily::b, 1, ModeFamily::b, -1, vac), Scalar(-2) * p.kappa0 * vac);
	EXPECT_EQ(comm(ModeFamily::b1, 0, ModeFamily::b1, -1, vac), Scalar(-4) * p.kappa0 * vac);
	for (int m = -3; m <= 3; ++m)
		for (int n = -3; n <= 3; ++n)
			EXPECT_TRUE(comm(ModeFamily::b1, m, ModeFamily::b, n, vac + FockVector::vacuum(1)).is_zero());
}
