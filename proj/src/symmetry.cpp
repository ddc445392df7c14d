#include "hw/symmetry.hpp"

#include <stdexcept>

namespace hw {

namespace {

void add_coeff(VElement::Coeffs &m, std::int64_t j, Scalar const &x)
{
	if (x.is_zero())
		return;
	auto [it, inserted] = m.try_emplace(j, x);
	if (!inserted)
	{
		it->second += x;
		if (it->second.is_zero())
			m.erase(it);
	}
}

Scalar frac(std::int64_t n, std::int64_t d, FieldSpec f)
{
	return Scalar::fraction(n, d, f);
}

} // namespace

DihedralElement DihedralElement::inverse() const
{
	// reflections are involutions
	return flip ? *this : translate(-translation);
}

DihedralElement compose(DihedralElement g, DihedralElement h)
{
	return {g.flip ? g.translation - h.translation : g.translation + h.translation,
	        g.flip != h.flip};
}

Element apply_dihedral(DihedralElement g, Element const &x)
{
	Element r(x.field());
	for (auto const &[b, v] : x.terms())
		r.add_term(b.is_axis() ? BasisIndex::a(g.act(b.index)) : b, v);
	return r;
}

AutomorphismCheck check_automorphism(ElementMap const &g, ElementPairs const &pairs)
{
	AutomorphismCheck out;
	for (std::size_t i = 0; i < pairs.size(); ++i)
	{
		auto const &[x, y] = pairs[i];
		++out.pairs_checked;
		if (!(g(mul(x, y)) == mul(g(x), g(y))))
		{
			out.first_failure = i;
			break;
		}
	}
	return out;
}

ElementPairs basis_pairs(FieldSpec f, std::int64_t window)
{
	std::vector<Element> basis;
	for (std::int64_t i = -window; i <= window; ++i)
		basis.push_back(Element::a(i, f));
	for (std::int64_t j = 1; j <= window; ++j)
		basis.push_back(Element::s(j, f));
	ElementPairs out;
	for (std::size_t i = 0; i < basis.size(); ++i)
		for (std::size_t j = i; j < basis.size(); ++j)
			out.emplace_back(basis[i], basis[j]);
	return out;
}

bool tau_fixed_subalgebra_check(Element const &x)
{
	return apply_dihedral(DihedralElement::tau(), x) == x;
}

VElement VElement::c_basis(std::int64_t j, FieldSpec f)
{
	VElement r(f);
	r.add_c(j, Scalar::one(f));
	return r;
}

VElement VElement::s_basis(std::int64_t j, FieldSpec f)
{
	VElement r(f);
	r.add_s(j, Scalar::one(f));
	return r;
}

void VElement::add_c(std::int64_t j, Scalar const &x)
{
	if (j < 1)
		throw std::invalid_argument("VElement: c index must be >= 1");
	add_coeff(c, j, x);
}

void VElement::add_s(std::int64_t j, Scalar const &x)
{
	if (j < 1)
		throw std::invalid_argument("VElement: s index must be >= 1");
	add_coeff(s, j, x);
}

VElement VElement::from_element(Element const &x)
{
	auto d = decompose(x, Axis{0});
	if (d.has_one() || !d.w.empty())
		throw std::invalid_argument("element " + x.to_string() +
		                            " does not lie in V (axis or w component)");
	return from_uv(d.u, d.v, x.field());
}

Element VElement::to_element() const
{
	Element r(field);
	for (auto const &[j, x] : c)
		r.add_scaled(c_vec(j, Axis{0}, field), x);
	for (auto const &[j, x] : s)
		r.add_term(BasisIndex::s(j), x);
	return r;
}

VElement VElement::from_uv(Coeffs const &u, Coeffs const &v, FieldSpec f)
{
	// u_j = 3c_j + 4s_j, v_j = c_j - 4s_j
	VElement r(f);
	auto three = Scalar::embed(3, f), four = Scalar::embed(4, f);
	for (auto const &[j, x] : u)
	{
		r.add_c(j, three * x);
		r.add_s(j, four * x);
	}
	for (auto const &[j, x] : v)
	{
		r.add_c(j, x);
		r.add_s(j, -(four * x));
	}
	return r;
}

std::pair<VElement::Coeffs, VElement::Coeffs> VElement::to_uv() const
{
	// c_j = (u_j + v_j)/4, s_j = (u_j - 3v_j)/16
	Coeffs u, v;
	auto quarter = frac(1, 4, field), sixteenth = frac(1, 16, field),
	     three_sixteenths = frac(3, 16, field);
	for (auto const &[j, x] : c)
	{
		add_coeff(u, j, quarter * x);
		add_coeff(v, j, quarter * x);
	}
	for (auto const &[j, x] : s)
	{
		add_coeff(u, j, sixteenth * x);
		add_coeff(v, j, -(three_sixteenths * x));
	}
	return {u, v};
}

VElement v_mul(VElement const &x, VElement const &y)
{
	return VElement::from_element(mul(x.to_element(), y.to_element()));
}

VElement v_rho(VElement const &x)
{
	VElement r = x;
	for (auto &[j, v] : r.c)
		v = -v;
	return r;
}

VElement v_theta(VElement const &x)
{
	auto [u, v] = x.to_uv();
	for (auto &[j, val] : v)
		val = -val;
	return VElement::from_uv(u, v, x.field);
}

VElement v_psi(VElement const &x)
{
	auto const f = x.field;
	auto half = frac(1, 2, f), two = Scalar::embed(2, f), three_eighths = frac(3, 8, f);
	VElement r(f);
	for (auto const &[j, v] : x.c)
	{
		r.add_c(j, half * v);
		r.add_s(j, -(two * v));
	}
	for (auto const &[j, v] : x.s)
	{
		r.add_c(j, -(three_eighths * v));
		r.add_s(j, -(half * v));
	}
	return r;
}

namespace {

std::vector<VElement> v_basis(FieldSpec f, std::int64_t window)
{
	std::vector<VElement> out;
	for (std::int64_t j = 1; j <= window; ++j)
	{
		out.push_back(VElement::c_basis(j, f));
		out.push_back(VElement::s_basis(j, f));
	}
	return out;
}

} // namespace

bool v_map_multiplicative(VMap const &g, FieldSpec f, std::int64_t window)
{
	auto basis = v_basis(f, window);
	for (std::size_t i = 0; i < basis.size(); ++i)
		for (std::size_t j = i; j < basis.size(); ++j)
			if (!(g(v_mul(basis[i], basis[j])) == v_mul(g(basis[i]), g(basis[j]))))
				return false;
	return true;
}

std::optional<int> v_map_order(VMap const &g, FieldSpec f, std::int64_t window,
                               int max_order)
{
	auto basis = v_basis(f, window);
	auto current = basis;
	for (int n = 1; n <= max_order; ++n)
	{
		for (auto &x : current)
			x = g(x);
		if (current == basis)
			return n;
	}
	return std::nullopt;
}

std::vector<ExtensionProbe> probe_extension(std::string const &name, VMap const &g,
                                            FieldSpec f, std::int64_t window)
{
	std::vector<ExtensionProbe> out;
	for (int sign : {1, -1})
	{
		// linear extension: a(0) fixed, w_j -> sign*w_j, V via g
		ElementMap ext = [&, sign](Element const &x) {
			auto d = decompose(x, Axis{0});
			Element r = d.one_part();
			r.add_scaled(d.w_part(), Scalar::embed(sign, f));
			VElement v = VElement::from_uv(d.u, d.v, f);
			r += g(v).to_element();
			return r;
		};
		auto pairs = basis_pairs(f, window);
		auto check = check_automorphism(ext, pairs);
		ExtensionProbe p{name, sign, check.holds(), {}};
		if (!check.holds())
		{
			auto const &[x, y] = pairs[*check.first_failure];
			p.witness = x.to_string() + " * " + y.to_string();
		}
		out.push_back(std::move(p));
	}
	return out;
}

} // namespace hw
