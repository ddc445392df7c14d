#include <random>

#include "gtest/gtest.h"
#include "hw/element.hpp"
#include "hw/jordan.hpp"
#include "hw/parse.hpp"
#include "oracle.hpp"

using namespace hw;

namespace {

FieldSpec const Q = FieldSpec::rationals();
FieldSpec const GF3 = FieldSpec::prime_field(3);

Scalar fr(std::int64_t n, std::int64_t d, FieldSpec f = Q) { return Scalar::fraction(n, d, f); }

std::vector<FieldSpec> fields()
{
	return {Q, FieldSpec::prime_field(3), FieldSpec::prime_field(5), FieldSpec::prime_field(7)};
}

} // namespace

TEST(BasisIndex, OrderAndValidation)
{
	EXPECT_LT(BasisIndex::a(100), BasisIndex::s(1));
	EXPECT_LT(BasisIndex::a(-3), BasisIndex::a(2));
	EXPECT_LT(BasisIndex::s(1), BasisIndex::s(2));
	EXPECT_THROW(BasisIndex::s(0), std::invalid_argument);
	EXPECT_THROW(BasisIndex::s(-2), std::invalid_argument);
	EXPECT_TRUE(Element::s(0, Q).is_zero());
}

TEST(Element, NormalizationStripsZeros)
{
	auto x = Element::a(3, Q) - Element::a(3, Q);
	EXPECT_TRUE(x.is_zero());
	EXPECT_EQ(x, Element(Q));
	Element y(Q);
	y.add_term(BasisIndex::a(1), Scalar::zero(Q));
	EXPECT_TRUE(y.is_zero());
	EXPECT_THROW(Element::a(0, Q) + Element::a(0, GF3), FieldMismatch);
}

TEST(BasisProduct, Examples)
{
	EXPECT_EQ(basis_product(BasisIndex::a(0), BasisIndex::a(0), Q), Element::a(0, Q));

	Element a0a1(Q);
	a0a1.add_term(BasisIndex::a(0), fr(1, 2));
	a0a1.add_term(BasisIndex::a(1), fr(1, 2));
	a0a1.add_term(BasisIndex::s(1), fr(1, 1));
	EXPECT_EQ(basis_product(BasisIndex::a(0), BasisIndex::a(1), Q), a0a1);

	Element s1s1(Q);
	s1s1.add_term(BasisIndex::s(1), fr(3, 2));
	s1s1.add_term(BasisIndex::s(2), fr(-3, 8));
	EXPECT_EQ(basis_product(BasisIndex::s(1), BasisIndex::s(1), Q), s1s1);
}

TEST(Mul, Examples)
{
	EXPECT_TRUE(mul(Element::a(0, Q) + Element::a(1, Q), Element(Q)).is_zero());

	Element expected(Q);
	expected.add_term(BasisIndex::a(2), fr(-3, 4));
	expected.add_term(BasisIndex::a(-1), fr(3, 8));
	expected.add_term(BasisIndex::a(5), fr(3, 8));
	expected.add_term(BasisIndex::s(3), fr(3, 2));
	EXPECT_EQ(mul(Element::a(2, Q), Element::s(3, Q)), expected);

	EXPECT_TRUE(mul(Element::a(2, GF3), Element::s(3, GF3)).is_zero());
	EXPECT_THROW(mul(Element::a(0, Q), Element::a(0, GF3)), FieldMismatch);
}

TEST(Mul, MatchesOracleOnBasisWindow)
{
	for (auto f : fields())
		for (long i = -6; i <= 6; ++i)
			for (long j = -6; j <= 6; ++j)
			{
				EXPECT_EQ(mul(Element::a(i, f), Element::a(j, f)),
				          oracle::to_element(oracle::mul(oracle::a(i), oracle::a(j)), f));
				if (j >= 1)
				{
					EXPECT_EQ(mul(Element::a(i, f), Element::s(j, f)),
					          oracle::to_element(oracle::mul(oracle::a(i), oracle::s(j)), f));
					if (i >= 1)
						EXPECT_EQ(mul(Element::s(i, f), Element::s(j, f)),
						          oracle::to_element(oracle::mul(oracle::s(i), oracle::s(j)), f));
				}
			}
}

TEST(Weight, Examples)
{
	EXPECT_TRUE(weight(Element::a(5, Q)).is_one());
	EXPECT_TRUE(weight(Element::s(3, Q)).is_zero());
	EXPECT_TRUE(weight(parse_element("2*a(0) - a(1) + 4*s(2)", Q)).is_one());
}

TEST(Frobenius, Examples)
{
	EXPECT_TRUE(frobenius(Element::a(3, Q), Element::a(7, Q)).is_one());
	EXPECT_TRUE(frobenius(Element::s(1, Q), Element::a(0, Q)).is_zero());
	EXPECT_EQ(frobenius(parse_element("2*a(0) - a(1)", Q), parse_element("3*a(5)", Q)),
	          Scalar::embed(3, Q));
	for (std::int64_t i = -10; i <= 10; ++i)
		EXPECT_TRUE(frobenius(Element::a(i, Q), Element::a(i, Q)).is_one());
}

TEST(Parts, Projection)
{
	auto x = parse_element("a(0) + 2*s(1)", Q);
	EXPECT_EQ(a_part(x), Element::a(0, Q));
	EXPECT_EQ(sigma_part(x), Element::s(1, Q) * Scalar::embed(2, Q));
	EXPECT_TRUE(a_part(Element::s(5, Q)).is_zero());
}

TEST(Idempotent, Examples)
{
	EXPECT_TRUE(is_idempotent(Element::a(7, Q)));
	EXPECT_TRUE(is_idempotent(Element(Q)));
	auto x = Element::a(0, Q) + Element::a(1, Q);
	EXPECT_FALSE(is_idempotent(x));
	// (a0 + a1)^2 = 2a0 + 2a1 + 2s1
	EXPECT_EQ(mul(x, x), parse_element("2*a(0) + 2*a(1) + 2*s(1)", Q));
}

TEST(Properties, CommutativeAndWeightMultiplicative)
{
	std::mt19937_64 rng(2024);
	for (auto f : fields())
		for (int t = 0; t < 100; ++t)
		{
			auto x = random_element(f, rng, 12);
			auto y = random_element(f, rng, 12);
			auto z = random_element(f, rng, 6);
			auto xy = mul(x, y);
			EXPECT_EQ(xy, mul(y, x));
			EXPECT_EQ(weight(xy), weight(x) * weight(y));
			EXPECT_EQ(frobenius(xy, z), frobenius(x, mul(y, z)));
			EXPECT_EQ(a_part(x) + sigma_part(x), x);
		}
}

TEST(Properties, NonAssociativeOutsideCharacteristic3)
{
	for (auto f : {Q, FieldSpec::prime_field(5), FieldSpec::prime_field(7)})
	{
		auto a0 = Element::a(0, f), a1 = Element::a(1, f), a2 = Element::a(2, f);
		auto lhs = mul(mul(a0, a1), a2);
		auto rhs = mul(a0, mul(a1, a2));
		EXPECT_NE(lhs, rhs);
		auto o0 = oracle::a(0), o1 = oracle::a(1), o2 = oracle::a(2);
		EXPECT_EQ(lhs, oracle::to_element(oracle::mul(oracle::mul(o0, o1), o2), f));
		EXPECT_EQ(rhs, oracle::to_element(oracle::mul(o0, oracle::mul(o1, o2)), f));
	}
}

TEST(Properties, CharacteristicThreeProductSeesOnlyAParts)
{
	std::mt19937_64 rng(3);
	for (int t = 0; t < 100; ++t)
	{
		auto x = random_element(GF3, rng, 10);
		auto y = random_element(GF3, rng, 10);
		EXPECT_EQ(mul(x, y), mul(a_part(x), a_part(y)));
	}
}

TEST(Render, CanonicalText)
{
	EXPECT_EQ(mul(Element::a(0, Q), Element::a(1, Q)).to_string(),
	          "1/2*a(0) + 1/2*a(1) + s(1)");
	EXPECT_EQ(parse_element("-3/8*s(2) - a(-1)", Q).to_string(), "-a(-1) - 3/8*s(2)");
	EXPECT_EQ(Element(Q).to_string(), "0");
	EXPECT_EQ(parse_element("-3/8*s(2)", FieldSpec::prime_field(5)).to_string(),
	          "4*s(2) (mod 5)");
}
