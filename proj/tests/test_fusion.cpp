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

Scalar fr(std::int64_t n, std::int64_t d, FieldSpec f = Q) { return Scalar::fraction(n, d, f); }

std::vector<Scalar> set(std::initializer_list<Scalar> xs) { return xs; }

} // namespace

TEST(FusionLaw, MonsterTable)
{
	auto law = monster_law(fr(2, 1), fr(1, 2));
	EXPECT_EQ(law.cell(fr(2, 1), fr(2, 1)), set({fr(1, 1), fr(0, 1)}));
	EXPECT_EQ(law.cell(fr(1, 2), fr(1, 2)), set({fr(1, 1), fr(0, 1), fr(2, 1)}));
	EXPECT_TRUE(law.cell(fr(1, 1), fr(0, 1)).empty());
	EXPECT_EQ(law.cell(fr(2, 1), fr(1, 2)), set({fr(1, 2)}));
	EXPECT_TRUE(law.is_symmetric());
	EXPECT_THROW(monster_law(fr(1, 1), fr(1, 2)), std::invalid_argument);
	EXPECT_THROW(monster_law(fr(0, 1), fr(1, 2)), std::invalid_argument);
	EXPECT_THROW(monster_law(fr(2, 1), fr(2, 1)), std::invalid_argument);
	// 2 = 1/2 in characteristic 3
	EXPECT_THROW(monster_law(fr(2, 1, GF3), fr(1, 2, GF3)), std::invalid_argument);
}

TEST(FusionLaw, HwTables)
{
	auto law = hw_law(Q);
	EXPECT_EQ(law.cell(fr(2, 1), fr(2, 1)), set({fr(0, 1)}));
	EXPECT_EQ(law.cell(fr(1, 2), fr(1, 2)), set({fr(0, 1), fr(2, 1)}));
	EXPECT_TRUE(law.cell(fr(1, 1), fr(0, 1)).empty());
	EXPECT_TRUE(law.is_symmetric());

	auto law3 = hw_law(GF3);
	EXPECT_EQ(law3.spectrum().size(), 3u);
	EXPECT_TRUE(law3.cell(fr(0, 1, GF3), fr(0, 1, GF3)).empty());
	EXPECT_EQ(law3.cell(fr(1, 2, GF3), fr(1, 2, GF3)), set({fr(0, 1, GF3)}));
	EXPECT_TRUE(law3.is_symmetric());

	EXPECT_THROW(FusionLaw("bad", {fr(0, 1), fr(2, 1)}), std::invalid_argument);
	EXPECT_THROW(FusionLaw("bad", {fr(1, 1), fr(1, 1)}), std::invalid_argument);
}

TEST(FusionPair, Examples)
{
	Axis const ax{0};
	auto law = hw_law(Q);
	auto u = [&](std::int64_t j) { return u_vec(j, ax, Q); };
	auto v = [&](std::int64_t j) { return v_vec(j, ax, Q); };
	auto w = [&](std::int64_t j) { return w_vec(j, ax, Q); };

	auto r1 = fuse_pair(u(1), fr(0, 1), u(2), fr(0, 1), ax, law);
	EXPECT_TRUE(r1.ok);
	EXPECT_EQ(r1.product, combination(u, 1, 2) * fr(3, 1));
	EXPECT_TRUE(r1.decomposition.v.empty() && r1.decomposition.w.empty());

	auto r2 = fuse_pair(v(1), fr(2, 1), v(1), fr(2, 1), ax, law);
	EXPECT_TRUE(r2.ok);
	EXPECT_EQ(r2.product, u(1) * fr(4, 1) - u(2));
	EXPECT_EQ(r2.decomposition.u, (EigenDecomposition::Coeffs{{1, fr(4, 1)}, {2, fr(-1, 1)}}));

	auto r3 = fuse_pair(w(1), fr(1, 2), w(2), fr(1, 2), ax, law);
	EXPECT_TRUE(r3.ok);
	EXPECT_FALSE(r3.decomposition.has_one());
	EXPECT_TRUE(r3.decomposition.w.empty());
}

TEST(FusionPair, PreconditionErrorsNameTheInput)
{
	auto law = hw_law(Q);
	try
	{
		fuse_pair(Element::a(1, Q), fr(0, 1), u_vec(1, Axis{0}, Q), fr(0, 1), Axis{0}, law);
		FAIL() << "expected precondition error";
	}
	catch (std::invalid_argument const &e)
	{
		EXPECT_NE(std::string(e.what()).find("first"), std::string::npos);
	}
	try
	{
		fuse_pair(u_vec(1, Axis{0}, Q), fr(0, 1), w_vec(1, Axis{0}, Q), fr(2, 1), Axis{0}, law);
		FAIL() << "expected precondition error";
	}
	catch (std::invalid_argument const &e)
	{
		EXPECT_NE(std::string(e.what()).find("second"), std::string::npos);
	}
}

TEST(FusionPair, ViolationIsReported)
{
	// a law that forbids everything except 1*1
	FusionLaw strict("strict", {fr(1, 1), fr(0, 1), fr(2, 1), fr(1, 2)});
	strict.set(fr(1, 1), fr(1, 1), {fr(1, 1)});
	auto r = fuse_pair(v_vec(1, Axis{0}, Q), fr(2, 1), v_vec(2, Axis{0}, Q), fr(2, 1), Axis{0},
	                   strict);
	EXPECT_FALSE(r.ok);
	EXPECT_EQ(r.offending, set({fr(0, 1)}));

	auto report = verify_axis(Axis{0}, strict, 2);
	EXPECT_FALSE(report.passed());
	EXPECT_GT(report.failures(), 0u);
	for (auto const &e : report.entries)
		if (!e.ok)
			EXPECT_NE(e.detail.find("u:"), std::string::npos);
}

TEST(VerifyAxis, Examples)
{
	auto r1 = verify_axis(Axis{0}, hw_law(Q), 8);
	EXPECT_TRUE(r1.passed());
	EXPECT_EQ(r1.entries.size(), 25u * 26u / 2u);
	EXPECT_EQ(r1.one_eigenspace_dim, 1u);

	EXPECT_TRUE(verify_axis(Axis{5}, hw_law(GF5), 8).passed());
	EXPECT_TRUE(verify_axis(Axis{0}, monster_law(fr(2, 1), fr(1, 2)), 8).passed());
	EXPECT_TRUE(verify_axis(Axis{-2}, hw_law(GF3), 6).passed());
}

TEST(VerifyAxis, StrictnessSeparation)
{
	for (auto f : {Q, GF5, FieldSpec::prime_field(7)})
	{
		auto two = fr(2, 1, f), half = fr(1, 2, f);
		auto law = monster_law(two, half);
		law.set(two, two, {Scalar::zero(f)});
		EXPECT_TRUE(verify_axis(Axis{0}, law, 6).passed());
	}
}

TEST(ProductRules, CSigmaAndUV)
{
	for (auto f : {Q, GF5, FieldSpec::prime_field(7), GF3})
	{
		Axis const ax{0};
		auto c = [&](std::int64_t j) { return c_vec(j, ax, f); };
		auto s = [&](std::int64_t j) { return Element::s(j, f); };
		auto u = [&](std::int64_t j) { return u_vec(j, ax, f); };
		auto v = [&](std::int64_t j) { return v_vec(j, ax, f); };
		for (std::int64_t i = 1; i <= 10; ++i)
			for (std::int64_t j = 1; j <= 10; ++j)
			{
				EXPECT_EQ(mul(c(i), c(j)), combination(s, i, j) * fr(2, 1, f));
				EXPECT_EQ(mul(c(i), s(j)), combination(c, i, j) * fr(3, 8, f));
				EXPECT_EQ(mul(c(i), s(j)), mul(c(j), s(i)));
				EXPECT_EQ(mul(s(i), s(j)), combination(s, i, j) * fr(-3, 8, f));
				EXPECT_EQ(mul(u(i), u(j)), combination(u, i, j) * fr(3, 1, f));
				EXPECT_EQ(mul(u(i), v(j)), combination(v, i, j) * fr(-3, 1, f));
				EXPECT_EQ(mul(v(i), v(j)), -combination(u, i, j));
				EXPECT_EQ(combination(u, i, j),
				          combination(c, i, j) * fr(3, 1, f) + combination(s, i, j) * fr(4, 1, f));
			}
	}
}

TEST(Gradings, TauAndTheta)
{
	Axis const ax{0};
	for (std::int64_t i = 1; i <= 6; ++i)
		for (std::int64_t j = 1; j <= 6; ++j)
		{
			auto uu = decompose(mul(u_vec(i, ax, Q), u_vec(j, ax, Q)), ax);
			auto uv = decompose(mul(u_vec(i, ax, Q), v_vec(j, ax, Q)), ax);
			auto vv = decompose(mul(v_vec(i, ax, Q), v_vec(j, ax, Q)), ax);
			auto uw = decompose(mul(u_vec(i, ax, Q), w_vec(j, ax, Q)), ax);
			auto vw = decompose(mul(v_vec(i, ax, Q), w_vec(j, ax, Q)), ax);
			auto ww = decompose(mul(w_vec(i, ax, Q), w_vec(j, ax, Q)), ax);
			// tau: even x even and odd x odd are even, even x odd is odd
			for (auto const *d : {&uu, &uv, &vv, &ww})
				EXPECT_TRUE(d->w.empty() && !d->has_one());
			for (auto const *d : {&uw, &vw})
				EXPECT_TRUE(d->u.empty() && d->v.empty() && !d->has_one());
			// theta inside V
			EXPECT_TRUE(uu.v.empty());
			EXPECT_TRUE(uv.u.empty());
			EXPECT_TRUE(vv.v.empty());
		}
}

TEST(FusionPair, RandomEigenCombinationsSmoke)
{
	std::mt19937_64 rng(5);
	for (auto f : {Q, GF5})
	{
		auto law = hw_law(f);
		auto ev = PartEigenvalues::of(f);
		Axis const ax{1};
		auto combo = [&](Element (*vec)(std::int64_t, Axis, FieldSpec)) {
			Element x(f);
			for (int t = 0; t < 4; ++t)
				x.add_scaled(vec(1 + std::int64_t(rng() % 8), ax, f), random_scalar(f, rng));
			return x;
		};
		for (int t = 0; t < 20; ++t)
		{
			EXPECT_TRUE(check_fusion_pair(combo(u_vec), ev.u, combo(w_vec), ev.w, ax, law));
			EXPECT_TRUE(check_fusion_pair(combo(v_vec), ev.v, combo(v_vec), ev.v, ax, law));
			EXPECT_TRUE(check_fusion_pair(combo(w_vec), ev.w, combo(w_vec), ev.w, ax, law));
		}
	}
}
