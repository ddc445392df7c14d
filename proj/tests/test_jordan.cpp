#include <random>

#include "gtest/gtest.h"
#include "hw/fusion.hpp"
#include "hw/jordan.hpp"
#include "hw/parse.hpp"

using namespace hw;

namespace {

FieldSpec const Q = FieldSpec::rationals();
FieldSpec const GF3 = FieldSpec::prime_field(3);
FieldSpec const GF5 = FieldSpec::prime_field(5);

Scalar g3(std::int64_t n, std::int64_t d = 1) { return Scalar::fraction(n, d, GF3); }

} // namespace

TEST(Char3, SigmaAnnihilates)
{
	EXPECT_TRUE(char3_sigma_annihilation_check(GF3, 10));
	EXPECT_THROW(char3_sigma_annihilation_check(Q, 3), std::invalid_argument);
	EXPECT_THROW(char3_sigma_annihilation_check(GF5, 3), std::invalid_argument);
	EXPECT_TRUE(mul(Element::s(2, GF3), parse_element("a(0) + s(1)", GF3)).is_zero());
}

TEST(Char3, WProducts)
{
	Axis const ax{0};
	auto w12 = char3_w_products(1, 2, GF3);
	EXPECT_EQ(w12.ww, u_vec(1, ax, GF3) * g3(2) - u_vec(3, ax, GF3) * g3(2));
	EXPECT_TRUE(w12.holds());
	auto w22 = char3_w_products(2, 2, GF3);
	EXPECT_EQ(w22.ww, u_vec(4, ax, GF3));
	EXPECT_TRUE(w22.holds());
	EXPECT_TRUE(char3_w_products(3, 1, GF3).vw.is_zero());
	for (std::int64_t i = 1; i <= 10; ++i)
		for (std::int64_t j = 1; j <= 10; ++j)
			EXPECT_TRUE(char3_w_products(i, j, GF3).holds()) << i << "," << j;
	EXPECT_THROW(char3_w_products(1, 1, Q), std::invalid_argument);
}

TEST(Char3, APartProductRule)
{
	EXPECT_TRUE(a_part_product_check(parse_element("a(0) + 2*a(3)", GF3), Element::a(1, GF3)));
	EXPECT_THROW(a_part_product_check(Element::s(1, GF3), Element::a(0, GF3)),
	             std::invalid_argument);
	EXPECT_THROW(a_part_product_check(Element::a(0, Q), Element::a(1, Q)),
	             std::invalid_argument);

	std::mt19937_64 rng(303);
	for (int t = 0; t < 200; ++t)
	{
		auto x = a_part(random_element(GF3, rng, 10));
		auto y = a_part(random_element(GF3, rng, 10));
		EXPECT_TRUE(a_part_product_check(x, y));
		// squaring: a(x^2) = weight(x) x
		EXPECT_EQ(a_part(mul(x, x)), x * weight(x));
	}
}

TEST(Char3, FusionTable)
{
	auto law = hw_law(GF3);
	auto one = g3(1), zero = g3(0), half = g3(1, 2);
	using V = std::vector<Scalar>;
	EXPECT_EQ(law.cell(one, one), V{one});
	EXPECT_EQ(law.cell(one, half), V{half});
	EXPECT_EQ(law.cell(zero, half), V{half});
	EXPECT_EQ(law.cell(half, half), V{zero});
	EXPECT_EQ(law.cell(one, zero), V{});
	EXPECT_EQ(law.cell(zero, zero), V{});
	EXPECT_TRUE(verify_axis(Axis{0}, law, 8).passed());
	EXPECT_TRUE(verify_axis(Axis{3}, law, 6).passed());
}

TEST(Jordan, HoldsInCharacteristicThree)
{
	std::mt19937_64 rng(1);
	for (int t = 0; t < 200; ++t)
	{
		auto x = random_element(GF3, rng, 10);
		auto y = random_element(GF3, rng, 10);
		EXPECT_TRUE(jordan_identity_check(x, y)) << x.to_string() << " ; " << y.to_string();
	}
}

TEST(Jordan, FailsOutsideCharacteristicThree)
{
	// x = a(0) + a(1), y = a(2)
	for (auto f : {Q, GF5, FieldSpec::prime_field(7)})
	{
		auto x = Element::a(0, f) + Element::a(1, f);
		EXPECT_FALSE(jordan_identity_check(x, Element::a(2, f))) << f.to_string();
	}
	// axes alone always satisfy it
	EXPECT_TRUE(jordan_identity_check(Element::a(0, Q), Element::a(5, Q)));
}

TEST(Random, Reproducible)
{
	std::mt19937_64 r1(9), r2(9);
	for (int t = 0; t < 20; ++t)
		EXPECT_EQ(random_element(Q, r1, 8), random_element(Q, r2, 8));
	std::mt19937_64 r3(4);
	for (int t = 0; t < 200; ++t)
	{
		auto x = random_element(GF5, r3, 6, 3);
		for (auto const &[b, c] : x.terms())
		{
			if (b.tag == BasisIndex::Tag::A)
				EXPECT_LE(std::abs(b.index), 3);
			else
				EXPECT_TRUE(b.index >= 1 && b.index <= 3);
		}
		EXPECT_LE(x.terms().size(), 6u);
	}
}

TEST(Baric, SmallExample)
{
	// A = <e, f> with omega = (1, 0), I = <z>, sigma(e, f) = z
	BaricAlgebraSpec spec{Q, 2, 1, {Scalar::one(Q), Scalar::zero(Q)}, {}};
	auto z = [] { return std::vector<Scalar>{Scalar::zero(Q)}; };
	spec.sigma_form = {{z(), {Scalar::one(Q)}}, {{Scalar::one(Q)}, z()}};
	BaricAlgebra b(spec);
	auto ef = b.mul(b.basis(0), b.basis(1));
	// ef = (0*e + 1*f)/2 + z
	EXPECT_EQ(ef, (std::vector<Scalar>{Scalar::zero(Q), Scalar::fraction(1, 2, Q), Scalar::one(Q)}));
	EXPECT_EQ(b.mul(b.basis(0), b.basis(0)), b.basis(0));
	EXPECT_TRUE(b.mul(b.basis(1), b.basis(1)) == b.zero());
	EXPECT_TRUE(b.mul(b.basis(2), b.basis(0)) == b.zero());
	EXPECT_TRUE(b.commutative());
	EXPECT_TRUE(b.ideal_annihilates());
	EXPECT_TRUE(b.a_products_in_I());
	EXPECT_TRUE(b.weight_multiplicative());
}

TEST(Baric, ShapeErrors)
{
	BaricAlgebraSpec spec{Q, 2, 1, {Scalar::one(Q)}, {}};
	EXPECT_THROW(BaricAlgebra{spec}, std::invalid_argument);
	spec.omega.push_back(Scalar::one(Q));
	EXPECT_THROW(BaricAlgebra{spec}, std::invalid_argument);
	auto z = std::vector<Scalar>{Scalar::zero(Q)};
	auto o = std::vector<Scalar>{Scalar::one(Q)};
	spec.sigma_form = {{z, o}, {z, z}};
	EXPECT_THROW(BaricAlgebra{spec}, std::invalid_argument);
	spec.sigma_form = {{z, o}, {o, z}};
	EXPECT_NO_THROW(BaricAlgebra{spec});
}

TEST(Baric, RandomSpecsAreJordan)
{
	std::mt19937_64 rng(12);
	for (auto f : {Q, GF5, GF3})
		for (std::size_t dA : {1u, 2u, 3u})
			for (std::size_t dI : {0u, 1u, 3u})
			{
				BaricAlgebra b(random_baric_spec(f, dA, dI, rng));
				EXPECT_TRUE(b.commutative());
				EXPECT_TRUE(b.ideal_annihilates());
				EXPECT_TRUE(b.a_products_in_I());
				EXPECT_TRUE(b.weight_multiplicative());
				for (int t = 0; t < 20; ++t)
					EXPECT_TRUE(b.jordan_identity(b.random_vector(rng), b.random_vector(rng)));
			}
}

TEST(Baric, HwWindowMatchesProduct)
{
	auto model = hw_char3_window(GF3, 3, 6);
	EXPECT_EQ(model.algebra.dim(), 7u + 6u);
	std::mt19937_64 rng(6);
	for (int t = 0; t < 100; ++t)
	{
		auto x = random_element(GF3, rng, 6, 3);
		auto y = random_element(GF3, rng, 6, 3);
		auto xv = model.to_vector(x), yv = model.to_vector(y);
		EXPECT_EQ(model.to_element(xv), x);
		EXPECT_EQ(model.to_element(model.algebra.mul(xv, yv)), mul(x, y));
		EXPECT_EQ(model.algebra.weight(xv), weight(x));
	}
	EXPECT_THROW(model.to_vector(Element::a(4, GF3)), std::out_of_range);
	EXPECT_THROW(hw_char3_window(GF3, 3, 5), std::invalid_argument);
	EXPECT_THROW(hw_char3_window(Q, 1, 2), std::invalid_argument);
}
