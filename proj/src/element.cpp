#include "hw/element.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace hw {

BasisIndex BasisIndex::s(std::int64_t j)
{
	if (j <= 0)
		throw std::invalid_argument("s(" + std::to_string(j) +
		                            ") is not a basis vector (need j >= 1)");
	return {Tag::S, j};
}

std::string BasisIndex::to_string() const
{
	return (is_axis() ? "a(" : "s(") + std::to_string(index) + ")";
}

Element::Element(FieldSpec field, BasisIndex b, Scalar coeff) : field_(field)
{
	add_term(b, coeff);
}

Element Element::basis(BasisIndex b, FieldSpec f)
{
	return Element(f, b, Scalar::one(f));
}

Element Element::a(std::int64_t i, FieldSpec f)
{
	return basis(BasisIndex::a(i), f);
}

Element Element::s(std::int64_t j, FieldSpec f)
{
	if (j == 0)
		return Element(f);
	return basis(BasisIndex::s(j), f);
}

Scalar Element::coeff(BasisIndex b) const
{
	auto it = terms_.find(b);
	return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Element::add_term(BasisIndex b, Scalar const &c)
{
	if (!(c.field() == field_))
		throw FieldMismatch("coefficient field does not match element field");
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(b, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

void Element::add_scaled(Element const &x, Scalar const &c)
{
	require_same_field(x);
	if (c.is_zero())
		return;
	for (auto const &[b, v] : x.terms_)
		add_term(b, v * c);
}

void Element::require_same_field(Element const &o) const
{
	if (!(field_ == o.field_))
		throw FieldMismatch("element field mismatch: " + field_.to_string() +
		                    " vs " + o.field_.to_string());
}

Element &Element::operator+=(Element const &o)
{
	require_same_field(o);
	for (auto const &[b, v] : o.terms_)
		add_term(b, v);
	return *this;
}

Element &Element::operator-=(Element const &o)
{
	require_same_field(o);
	for (auto const &[b, v] : o.terms_)
		add_term(b, -v);
	return *this;
}

Element &Element::operator*=(Scalar const &c)
{
	if (!(c.field() == field_))
		throw FieldMismatch("scalar field does not match element field");
	if (c.is_zero())
	{
		terms_.clear();
		return *this;
	}
	for (auto &[b, v] : terms_)
		v *= c;
	return *this;
}

Element Element::operator-() const
{
	Element r = *this;
	for (auto &[b, v] : r.terms_)
		v = -v;
	return r;
}

std::string Element::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	bool first = true;
	for (auto const &[b, v] : terms_)
	{
		std::string coeff;
		bool negative = false;
		if (field_.is_rational())
		{
			negative = sgn(v.rational()) < 0;
			coeff = negative ? (-v).value_string() : v.value_string();
		}
		else
			coeff = v.value_string();

		if (first)
			out += negative ? "-" : "";
		else
			out += negative ? " - " : " + ";
		if (coeff != "1")
			out += coeff + "*";
		out += b.to_string();
		first = false;
	}
	if (!field_.is_rational())
		out += " (mod " + std::to_string(field_.characteristic()) + ")";
	return out;
}

std::ostream &operator<<(std::ostream &os, Element const &x)
{
	return os << x.to_string();
}

namespace {

// Structure constants of the product rules, embedded once per call.
struct ProductConstants
{
	explicit ProductConstants(FieldSpec f)
	    : half(Scalar::fraction(1, 2, f)), three_quarters(Scalar::fraction(3, 4, f)),
	      three_eighths(Scalar::fraction(3, 8, f)),
	      three_halves(Scalar::fraction(3, 2, f))
	{
	}

	Scalar half, three_quarters, three_eighths, three_halves;
};

void add_sigma(Element &out, std::int64_t j, Scalar const &c)
{
	if (j != 0)
		out.add_term(BasisIndex::s(j), c);
}

// out += coeff * (x * y)
void accumulate_product(Element &out, BasisIndex x, BasisIndex y,
                        Scalar const &coeff, ProductConstants const &k)
{
	if (x.is_sigma() && y.is_axis())
		std::swap(x, y);

	if (x.is_axis() && y.is_axis())
	{
		auto h = coeff * k.half;
		out.add_term(x, h);
		out.add_term(y, h);
		add_sigma(out, std::abs(x.index - y.index), coeff);
	}
	else if (x.is_axis())
	{
		auto i = x.index, j = y.index;
		auto e = coeff * k.three_eighths;
		out.add_term(x, -(coeff * k.three_quarters));
		out.add_term(BasisIndex::a(i - j), e);
		out.add_term(BasisIndex::a(i + j), e);
		out.add_term(y, coeff * k.three_halves);
	}
	else
	{
		auto i = x.index, j = y.index;
		auto q = coeff * k.three_quarters;
		auto e = -(coeff * k.three_eighths);
		out.add_term(x, q);
		out.add_term(y, q);
		add_sigma(out, std::abs(i - j), e);
		add_sigma(out, i + j, e);
	}
}

} // namespace

Element basis_product(BasisIndex x, BasisIndex y, FieldSpec field)
{
	Element out(field);
	accumulate_product(out, x, y, Scalar::one(field), ProductConstants(field));
	return out;
}

Element mul(Element const &x, Element const &y)
{
	if (!(x.field() == y.field()))
		throw FieldMismatch("mul: element field mismatch");
	Element out(x.field());
	if (x.is_zero() || y.is_zero())
		return out;
	ProductConstants const k(x.field());
	for (auto const &[bx, cx] : x.terms())
		for (auto const &[by, cy] : y.terms())
			accumulate_product(out, bx, by, cx * cy, k);
	return out;
}

Scalar weight(Element const &x)
{
	auto w = Scalar::zero(x.field());
	for (auto const &[b, v] : x.terms())
		if (b.is_axis())
			w += v;
	return w;
}

Scalar frobenius(Element const &x, Element const &y)
{
	if (!(x.field() == y.field()))
		throw FieldMismatch("frobenius: element field mismatch");
	return weight(x) * weight(y);
}

Element a_part(Element const &x)
{
	Element r(x.field());
	for (auto const &[b, v] : x.terms())
		if (b.is_axis())
			r.add_term(b, v);
	return r;
}

Element sigma_part(Element const &x)
{
	Element r(x.field());
	for (auto const &[b, v] : x.terms())
		if (b.is_sigma())
			r.add_term(b, v);
	return r;
}

bool is_idempotent(Element const &x)
{
	return mul(x, x) == x;
}

} // namespace hw
