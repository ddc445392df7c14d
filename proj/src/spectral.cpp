#include "hw/spectral.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>

namespace hw {

namespace {

void require_positive(std::int64_t j, char const *what)
{
	if (j < 1)
		throw std::invalid_argument(std::string(what) + ": index must be >= 1, got " +
		                            std::to_string(j));
}

Scalar sc(std::int64_t n, FieldSpec f) { return Scalar::embed(n, f); }

void add_coeff(EigenDecomposition::Coeffs &m, std::int64_t j, Scalar const &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = m.try_emplace(j, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second.is_zero())
			m.erase(it);
	}
}

Element expand(EigenDecomposition::Coeffs const &m, FieldSpec f, Axis axis,
               Element (*vec)(std::int64_t, Axis, FieldSpec))
{
	Element r(f);
	for (auto const &[j, c] : m)
		r.add_scaled(vec(j, axis, f), c);
	return r;
}

} // namespace

Element c_vec(std::int64_t j, Axis axis, FieldSpec f)
{
	require_positive(j, "c_vec");
	Element r(f);
	r.add_term(BasisIndex::a(axis.k), sc(2, f));
	r.add_term(BasisIndex::a(axis.k - j), sc(-1, f));
	r.add_term(BasisIndex::a(axis.k + j), sc(-1, f));
	return r;
}

Element u_vec(std::int64_t j, Axis axis, FieldSpec f)
{
	require_positive(j, "u_vec");
	Element r(f);
	r.add_term(BasisIndex::a(axis.k), sc(6, f));
	r.add_term(BasisIndex::a(axis.k - j), sc(-3, f));
	r.add_term(BasisIndex::a(axis.k + j), sc(-3, f));
	r.add_term(BasisIndex::s(j), sc(4, f));
	return r;
}

Element v_vec(std::int64_t j, Axis axis, FieldSpec f)
{
	require_positive(j, "v_vec");
	Element r(f);
	r.add_term(BasisIndex::a(axis.k), sc(2, f));
	r.add_term(BasisIndex::a(axis.k - j), sc(-1, f));
	r.add_term(BasisIndex::a(axis.k + j), sc(-1, f));
	r.add_term(BasisIndex::s(j), sc(-4, f));
	return r;
}

Element w_vec(std::int64_t j, Axis axis, FieldSpec f)
{
	require_positive(j, "w_vec");
	Element r(f);
	r.add_term(BasisIndex::a(axis.k - j), sc(1, f));
	r.add_term(BasisIndex::a(axis.k + j), sc(-1, f));
	return r;
}

Element combination(std::function<Element(std::int64_t)> const &family,
                    std::int64_t i, std::int64_t j)
{
	require_positive(i, "combination");
	require_positive(j, "combination");
	auto r = family(i) * sc(-2, family(i).field());
	auto f = r.field();
	r.add_scaled(family(j), sc(-2, f));
	if (i != j)
		r += family(std::abs(i - j));
	r += family(i + j);
	return r;
}

DenseMatrix ad_matrix_4(std::int64_t j, FieldSpec f)
{
	require_positive(j, "ad_matrix_4");
	std::array<BasisIndex, 4> const basis{BasisIndex::a(0), BasisIndex::a(-j),
	                                      BasisIndex::a(j), BasisIndex::s(j)};
	auto const a = Element::a(0, f);
	DenseMatrix m(f, 4, 4);
	for (std::size_t r = 0; r < 4; ++r)
	{
		auto image = mul(a, Element::basis(basis[r], f));
		for (std::size_t c = 0; c < 4; ++c)
			m(r, c) = image.coeff(basis[c]);
		// U is ad-invariant: nothing may fall outside the four coordinates
		if (image.support_size() > 4)
			throw std::logic_error("ad_matrix_4: image escapes U");
	}
	return m;
}

Polynomial char_poly_ad4(std::int64_t j, FieldSpec f)
{
	return characteristic_polynomial(ad_matrix_4(j, f));
}

Polynomial expected_char_poly(FieldSpec f)
{
	auto root = [&](Scalar r) { return Polynomial{-r, Scalar::one(f)}; };
	auto p = poly_mul(root(sc(1, f)), root(sc(0, f)));
	p = poly_mul(p, root(sc(2, f)));
	return poly_mul(p, root(Scalar::fraction(1, 2, f)));
}

PartEigenvalues PartEigenvalues::of(FieldSpec f)
{
	return {sc(1, f), sc(0, f), sc(2, f), Scalar::fraction(1, 2, f)};
}

Element EigenDecomposition::one_part() const
{
	Element r(field);
	r.add_term(BasisIndex::a(axis.k), one_coeff);
	return r;
}

Element EigenDecomposition::u_part() const { return expand(u, field, axis, u_vec); }
Element EigenDecomposition::v_part() const { return expand(v, field, axis, v_vec); }
Element EigenDecomposition::w_part() const { return expand(w, field, axis, w_vec); }

Element EigenDecomposition::reassemble() const
{
	return one_part() + u_part() + v_part() + w_part();
}

EigenDecomposition decompose(Element const &x, Axis axis)
{
	auto const f = x.field();
	auto const half = Scalar::fraction(1, 2, f);
	auto const quarter = Scalar::fraction(1, 4, f);
	auto const sixteenth = Scalar::fraction(1, 16, f);

	EigenDecomposition d{f, axis, Scalar::zero(f), {}, {}, {}};
	EigenDecomposition::Coeffs c, s;

	// a(k-j) = a - c_j/2 + w_j/2 and a(k+j) = a - c_j/2 - w_j/2
	for (auto const &[b, coeff] : x.terms())
	{
		if (b.is_sigma())
		{
			add_coeff(s, b.index, coeff);
			continue;
		}
		auto offset = b.index - axis.k;
		d.one_coeff += coeff;
		if (offset == 0)
			continue;
		auto j = std::abs(offset);
		add_coeff(c, j, -(coeff * half));
		add_coeff(d.w, j, offset < 0 ? coeff * half : -(coeff * half));
	}

	// c_j = (u_j + v_j)/4 and s_j = (u_j - 3 v_j)/16
	for (auto const &[j, coeff] : c)
	{
		add_coeff(d.u, j, coeff * quarter);
		add_coeff(d.v, j, coeff * quarter);
	}
	for (auto const &[j, coeff] : s)
	{
		add_coeff(d.u, j, coeff * sixteenth);
		add_coeff(d.v, j, -(coeff * sixteenth * sc(3, f)));
	}
	return d;
}

bool eigen_check(Element const &x, Axis axis, Scalar const &lam)
{
	return mul(axis.vector(x.field()), x) == x * lam;
}

} // namespace hw
