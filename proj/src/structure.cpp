#include "hw/structure.hpp"

#include <stdexcept>

#include "hw/linalg.hpp"

namespace hw {

Element Span::reduce(Element x) const
{
	if (!(x.field() == field_))
		throw FieldMismatch("Span::reduce: field mismatch");
	// Eliminating a row only introduces indices above its pivot, and never
	// another pivot, so one ascending pass over the pivots suffices.
	auto it = rows_.begin();
	while (it != rows_.end() && !x.is_zero())
	{
		auto c = x.coeff(it->first);
		if (!c.is_zero())
			x.add_scaled(it->second, -c);
		++it;
	}
	return x;
}

bool Span::insert(Element const &x)
{
	auto r = reduce(x);
	if (r.is_zero())
		return false;
	auto pivot = r.terms().begin()->first;
	r *= r.terms().begin()->second.inverse();
	for (auto &[p, row] : rows_)
	{
		auto c = row.coeff(pivot);
		if (!c.is_zero())
			row.add_scaled(r, -c);
	}
	rows_.emplace(pivot, std::move(r));
	return true;
}

std::vector<Element> Span::rows() const
{
	std::vector<Element> out;
	out.reserve(rows_.size());
	for (auto const &[p, row] : rows_)
		out.push_back(row);
	return out;
}

bool in_J(Element const &x)
{
	return weight(x).is_zero();
}

namespace {

ClosureState seed(std::vector<Element> const &generators)
{
	if (generators.empty())
		throw std::invalid_argument("closure: need at least one generator");
	auto f = generators.front().field();
	ClosureState st{Span(f), {}, 0, false, {}};
	for (auto const &g : generators)
		if (st.span.insert(g))
			st.generators.push_back(g);
	st.dimensions.push_back(st.span.dimension());
	return st;
}

} // namespace

ClosureState subalgebra_closure(std::vector<Element> const &generators,
                                std::size_t max_sweeps, SweepObserver const &on_sweep)
{
	auto st = seed(generators);
	// products among old generators were taken in earlier sweeps
	std::size_t frontier = 0;
	while (st.generation < max_sweeps)
	{
		auto const count = st.generators.size();
		for (std::size_t j = frontier; j < count; ++j)
			for (std::size_t i = 0; i <= j; ++i)
			{
				auto p = mul(st.generators[i], st.generators[j]);
				if (st.span.insert(p))
					st.generators.push_back(std::move(p));
			}
		++st.generation;
		st.dimensions.push_back(st.span.dimension());
		frontier = count;
		st.stable = st.generators.size() == count;
		if (on_sweep)
			on_sweep(st);
		if (st.stable)
			break;
	}
	return st;
}

ClosureState ideal_closure(std::vector<Element> const &generators,
                           std::int64_t window, std::size_t max_sweeps,
                           SweepObserver const &on_sweep)
{
	if (window < 1)
		throw std::invalid_argument("ideal_closure: window must be >= 1");
	auto st = seed(generators);
	auto const f = st.span.field();

	std::vector<Element> multipliers;
	for (std::int64_t i = -window; i <= window; ++i)
		multipliers.push_back(Element::a(i, f));
	for (std::int64_t j = 1; j <= window; ++j)
		multipliers.push_back(Element::s(j, f));

	std::size_t frontier = 0;
	while (st.generation < max_sweeps)
	{
		auto const count = st.generators.size();
		for (std::size_t i = frontier; i < count; ++i)
			for (auto const &m : multipliers)
			{
				auto p = mul(m, st.generators[i]);
				if (st.span.insert(p))
					st.generators.push_back(std::move(p));
			}
		++st.generation;
		st.dimensions.push_back(st.span.dimension());
		frontier = count;
		st.stable = st.generators.size() == count;
		if (on_sweep)
			on_sweep(st);
		if (st.stable)
			break;
	}
	return st;
}

bool frobenius_radical_check(FieldSpec f, std::int64_t window)
{
	if (window < 1)
		throw std::invalid_argument("frobenius_radical_check: window must be >= 1");
	std::vector<Element> basis;
	for (std::int64_t i = -window; i <= window; ++i)
		basis.push_back(Element::a(i, f));
	for (std::int64_t j = 1; j <= window; ++j)
		basis.push_back(Element::s(j, f));

	std::vector<Element> j_spanning;
	for (std::int64_t i = -window; i <= window; ++i)
		if (i != 0)
			j_spanning.push_back(Element::a(i, f) - Element::a(0, f));
	for (std::int64_t j = 1; j <= window; ++j)
		j_spanning.push_back(Element::s(j, f));

	for (auto const &x : j_spanning)
		for (auto const &y : basis)
			if (!frobenius(x, y).is_zero())
				return false;

	auto a0 = Element::a(0, f);
	if (!frobenius(a0, a0).is_one())
		return false;

	// Gram matrix on the window: its kernel is the radical restricted there
	auto const n = basis.size();
	DenseMatrix gram(f, n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t k = 0; k < n; ++k)
			gram(i, k) = frobenius(basis[i], basis[k]);
	auto kernel = null_space(gram);
	if (kernel.size() != n - 1)
		return false;
	Span j_span(f);
	for (auto const &x : j_spanning)
		j_span.insert(x);
	if (j_span.dimension() != n - 1)
		return false;
	for (auto const &v : kernel)
	{
		Element x(f);
		for (std::size_t i = 0; i < n; ++i)
			x.add_scaled(basis[i], v[i]);
		if (!in_J(x) || !j_span.contains(x))
			return false;
	}
	return true;
}

} // namespace hw
