#include "hw/jordan.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "hw/spectral.hpp"

namespace hw {

void require_char3(FieldSpec f, char const *what)
{
	if (f.characteristic() != 3)
		throw std::invalid_argument(std::string(what) +
		                            " requires characteristic 3, got " + f.to_string());
}

bool char3_sigma_annihilation_check(FieldSpec f, std::int64_t window)
{
	require_char3(f, "char3_sigma_annihilation_check");
	for (std::int64_t j = 1; j <= window; ++j)
	{
		auto s = BasisIndex::s(j);
		for (std::int64_t i = -window; i <= window; ++i)
			if (!basis_product(s, BasisIndex::a(i), f).is_zero())
				return false;
		for (std::int64_t k = 1; k <= window; ++k)
			if (!basis_product(s, BasisIndex::s(k), f).is_zero())
				return false;
	}
	return true;
}

WProducts char3_w_products(std::int64_t i, std::int64_t j, FieldSpec f)
{
	require_char3(f, "char3_w_products");
	Axis const axis{0};
	auto half = Scalar::fraction(1, 2, f);
	Element expected(f);
	if (i != j)
		expected.add_scaled(u_vec(std::abs(i - j), axis, f), half);
	expected.add_scaled(u_vec(i + j, axis, f), -half);
	return {mul(w_vec(i, axis, f), w_vec(j, axis, f)), std::move(expected),
	        mul(v_vec(i, axis, f), w_vec(j, axis, f))};
}

bool a_part_product_check(Element const &x, Element const &y)
{
	require_char3(x.field(), "a_part_product_check");
	if (!sigma_part(x).is_zero() || !sigma_part(y).is_zero())
		throw std::invalid_argument("a_part_product_check: inputs must have no sigma part");
	auto half = Scalar::fraction(1, 2, x.field());
	auto expected = x * (weight(y) * half) + y * (weight(x) * half);
	return a_part(mul(x, y)) == expected;
}

bool jordan_identity_check(Element const &x, Element const &y)
{
	auto x2 = mul(x, x);
	return mul(x, mul(y, x2)) == mul(mul(x, y), x2);
}

Scalar random_scalar(FieldSpec f, std::mt19937_64 &rng)
{
	static constexpr std::int64_t dens[] = {1, 2, 4};
	auto n = std::int64_t(rng() % 10);
	n = n < 5 ? n - 5 : n - 4; // -5..-1, 1..5
	auto d = dens[rng() % 3];
	return Scalar::fraction(n, d, f);
}

Element random_element(FieldSpec f, std::mt19937_64 &rng, std::size_t max_support,
                       std::int64_t index_range)
{
	Element x(f);
	if (max_support == 0)
		return x;
	auto terms = 1 + rng() % max_support;
	auto span = std::uint64_t(2 * index_range + 1);
	for (std::uint64_t t = 0; t < terms; ++t)
	{
		BasisIndex b = (rng() % 3 == 0)
		                   ? BasisIndex::s(1 + std::int64_t(rng() % std::uint64_t(index_range)))
		                   : BasisIndex::a(std::int64_t(rng() % span) - index_range);
		x.add_term(b, random_scalar(f, rng));
	}
	return x;
}

BaricAlgebraSpec random_baric_spec(FieldSpec f, std::size_t dim_A, std::size_t dim_I,
                                   std::mt19937_64 &rng)
{
	BaricAlgebraSpec spec{f, dim_A, dim_I, {}, {}};
	for (std::size_t i = 0; i < dim_A; ++i)
		spec.omega.push_back(random_scalar(f, rng));
	spec.sigma_form.assign(dim_A, std::vector<std::vector<Scalar>>(dim_A));
	for (std::size_t i = 0; i < dim_A; ++i)
		for (std::size_t k = i; k < dim_A; ++k)
		{
			std::vector<Scalar> v;
			for (std::size_t r = 0; r < dim_I; ++r)
				v.push_back(rng() % 4 == 0 ? Scalar::zero(f) : random_scalar(f, rng));
			spec.sigma_form[i][k] = v;
			spec.sigma_form[k][i] = v;
		}
	return spec;
}

BaricAlgebra::BaricAlgebra(BaricAlgebraSpec spec) : spec_(std::move(spec))
{
	auto const f = spec_.field;
	auto const nA = spec_.dim_A, nI = spec_.dim_I, n = nA + nI;
	if (nA == 0)
		throw std::invalid_argument("BaricAlgebra: dim_A must be positive");
	if (spec_.omega.size() != nA)
		throw std::invalid_argument("BaricAlgebra: omega must have length dim_A");
	if (spec_.sigma_form.size() != nA)
		throw std::invalid_argument("BaricAlgebra: sigma_form must be dim_A x dim_A");
	for (auto const &row : spec_.sigma_form)
	{
		if (row.size() != nA)
			throw std::invalid_argument("BaricAlgebra: sigma_form must be dim_A x dim_A");
		for (auto const &v : row)
			if (v.size() != nI)
				throw std::invalid_argument("BaricAlgebra: sigma_form entries must have length dim_I");
	}
	for (std::size_t i = 0; i < nA; ++i)
		for (std::size_t k = 0; k < i; ++k)
			if (spec_.sigma_form[i][k] != spec_.sigma_form[k][i])
				throw std::invalid_argument("BaricAlgebra: sigma_form is not symmetric");

	auto half = Scalar::fraction(1, 2, f);
	table_.assign(n, std::vector<Vector>(n, zero()));
	for (std::size_t i = 0; i < nA; ++i)
		for (std::size_t k = 0; k < nA; ++k)
		{
			auto &e = table_[i][k];
			e[i] += half * spec_.omega[k];
			e[k] += half * spec_.omega[i];
			for (std::size_t r = 0; r < nI; ++r)
				e[nA + r] += spec_.sigma_form[i][k][r];
		}
}

BaricAlgebra::Vector BaricAlgebra::zero() const
{
	return Vector(dim(), Scalar::zero(field()));
}

BaricAlgebra::Vector BaricAlgebra::basis(std::size_t k) const
{
	auto v = zero();
	v.at(k) = Scalar::one(field());
	return v;
}

BaricAlgebra::Vector BaricAlgebra::mul(Vector const &x, Vector const &y) const
{
	auto out = zero();
	for (std::size_t p = 0; p < dim(); ++p)
	{
		if (x[p].is_zero())
			continue;
		for (std::size_t q = 0; q < dim(); ++q)
		{
			if (y[q].is_zero())
				continue;
			auto c = x[p] * y[q];
			auto const &e = table_[p][q];
			for (std::size_t r = 0; r < dim(); ++r)
				if (!e[r].is_zero())
					out[r] += c * e[r];
		}
	}
	return out;
}

Scalar BaricAlgebra::weight(Vector const &x) const
{
	auto w = Scalar::zero(field());
	for (std::size_t i = 0; i < dim_A(); ++i)
		w += spec_.omega[i] * x[i];
	return w;
}

BaricAlgebra::Vector BaricAlgebra::random_vector(std::mt19937_64 &rng) const
{
	auto v = zero();
	for (auto &x : v)
		if (rng() % 3 != 0)
			x = random_scalar(field(), rng);
	return v;
}

bool BaricAlgebra::ideal_annihilates() const
{
	for (std::size_t p = 0; p < dim(); ++p)
		for (std::size_t q = dim_A(); q < dim(); ++q)
		{
			auto z = zero();
			if (mul(basis(p), basis(q)) != z || mul(basis(q), basis(p)) != z)
				return false;
		}
	return true;
}

bool BaricAlgebra::a_products_in_I() const
{
	auto half = Scalar::fraction(1, 2, field());
	for (std::size_t i = 0; i < dim_A(); ++i)
		for (std::size_t k = 0; k < dim_A(); ++k)
		{
			auto a = basis(i), b = basis(k);
			auto r = mul(a, b);
			auto wa = weight(a), wb = weight(b);
			for (std::size_t t = 0; t < dim(); ++t)
				r[t] -= half * (wb * a[t] + wa * b[t]);
			for (std::size_t t = 0; t < dim_A(); ++t)
				if (!r[t].is_zero())
					return false;
		}
	return true;
}

bool BaricAlgebra::weight_multiplicative() const
{
	for (std::size_t p = 0; p < dim(); ++p)
		for (std::size_t q = 0; q < dim(); ++q)
		{
			auto x = basis(p), y = basis(q);
			if (!(weight(mul(x, y)) == weight(x) * weight(y)))
				return false;
		}
	return true;
}

bool BaricAlgebra::commutative() const
{
	for (std::size_t p = 0; p < dim(); ++p)
		for (std::size_t q = 0; q < p; ++q)
			if (table_[p][q] != table_[q][p])
				return false;
	return true;
}

bool BaricAlgebra::jordan_identity(Vector const &x, Vector const &y) const
{
	auto x2 = mul(x, x);
	return mul(x, mul(y, x2)) == mul(mul(x, y), x2);
}

BaricAlgebra::Vector HwWindowModel::to_vector(Element const &x) const
{
	auto v = algebra.zero();
	for (auto const &[b, c] : x.terms())
	{
		auto it = std::find(coordinates.begin(), coordinates.end(), b);
		if (it == coordinates.end())
			throw std::out_of_range("element " + x.to_string() + " leaves the window");
		v[std::size_t(it - coordinates.begin())] = c;
	}
	return v;
}

Element HwWindowModel::to_element(BaricAlgebra::Vector const &v) const
{
	Element x(algebra.field());
	for (std::size_t k = 0; k < v.size(); ++k)
		x.add_term(coordinates[k], v[k]);
	return x;
}

HwWindowModel hw_char3_window(FieldSpec f, std::int64_t a_range, std::int64_t s_range)
{
	require_char3(f, "hw_char3_window");
	if (a_range < 0 || s_range < 2 * a_range)
		throw std::invalid_argument("hw_char3_window: need s_range >= 2 * a_range");
	std::vector<BasisIndex> coords;
	for (std::int64_t i = -a_range; i <= a_range; ++i)
		coords.push_back(BasisIndex::a(i));
	for (std::int64_t j = 1; j <= s_range; ++j)
		coords.push_back(BasisIndex::s(j));

	auto const nA = std::size_t(2 * a_range + 1), nI = std::size_t(s_range);
	BaricAlgebraSpec spec{f, nA, nI, std::vector<Scalar>(nA, Scalar::one(f)), {}};
	spec.sigma_form.assign(nA, std::vector<std::vector<Scalar>>(
	                               nA, std::vector<Scalar>(nI, Scalar::zero(f))));
	for (std::size_t i = 0; i < nA; ++i)
		for (std::size_t k = 0; k < nA; ++k)
		{
			auto d = i > k ? i - k : k - i;
			if (d != 0)
				spec.sigma_form[i][k][d - 1] = Scalar::one(f);
		}
	return {BaricAlgebra(std::move(spec)), std::move(coords)};
}

} // namespace hw
