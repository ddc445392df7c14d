#include "hw/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hw {

DenseMatrix multiply(DenseMatrix const &a, DenseMatrix const &b)
{
	if (a.cols != b.rows)
		throw std::invalid_argument("multiply: shape mismatch");
	DenseMatrix r(a.field, a.rows, b.cols);
	for (std::size_t i = 0; i < a.rows; ++i)
		for (std::size_t k = 0; k < a.cols; ++k)
		{
			if (a(i, k).is_zero())
				continue;
			for (std::size_t j = 0; j < b.cols; ++j)
				r(i, j) += a(i, k) * b(k, j);
		}
	return r;
}

DenseMatrix identity(FieldSpec f, std::size_t n)
{
	DenseMatrix r(f, n, n);
	for (std::size_t i = 0; i < n; ++i)
		r(i, i) = Scalar::one(f);
	return r;
}

std::vector<std::size_t> row_reduce(DenseMatrix &m)
{
	std::vector<std::size_t> pivots;
	std::size_t row = 0;
	for (std::size_t col = 0; col < m.cols && row < m.rows; ++col)
	{
		std::size_t p = row;
		while (p < m.rows && m(p, col).is_zero())
			++p;
		if (p == m.rows)
			continue;
		for (std::size_t j = 0; j < m.cols; ++j)
			std::swap(m(p, j), m(row, j));
		auto inv = m(row, col).inverse();
		for (std::size_t j = 0; j < m.cols; ++j)
			m(row, j) *= inv;
		for (std::size_t i = 0; i < m.rows; ++i)
		{
			if (i == row || m(i, col).is_zero())
				continue;
			auto f = m(i, col);
			for (std::size_t j = 0; j < m.cols; ++j)
				m(i, j) -= f * m(row, j);
		}
		pivots.push_back(col);
		++row;
	}
	return pivots;
}

std::size_t rank(DenseMatrix m)
{
	return row_reduce(m).size();
}

std::vector<std::vector<Scalar>> null_space(DenseMatrix m)
{
	auto pivots = row_reduce(m);
	std::vector<bool> is_pivot(m.cols, false);
	for (auto c : pivots)
		is_pivot[c] = true;

	std::vector<std::vector<Scalar>> basis;
	for (std::size_t free = 0; free < m.cols; ++free)
	{
		if (is_pivot[free])
			continue;
		std::vector<Scalar> v(m.cols, Scalar::zero(m.field));
		v[free] = Scalar::one(m.field);
		for (std::size_t r = 0; r < pivots.size(); ++r)
			v[pivots[r]] = -m(r, free);
		basis.push_back(std::move(v));
	}
	return basis;
}

Polynomial poly_mul(Polynomial const &a, Polynomial const &b)
{
	if (a.empty() || b.empty())
		return {};
	auto f = a.front().field();
	Polynomial r(a.size() + b.size() - 1, Scalar::zero(f));
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < b.size(); ++j)
			r[i + j] += a[i] * b[j];
	return r;
}

Scalar poly_eval(Polynomial const &p, Scalar const &x)
{
	auto acc = Scalar::zero(x.field());
	for (auto it = p.rbegin(); it != p.rend(); ++it)
		acc = acc * x + *it;
	return acc;
}

Polynomial characteristic_polynomial(DenseMatrix const &m)
{
	if (m.rows != m.cols)
		throw std::invalid_argument("characteristic_polynomial: non-square");
	auto const n = m.rows;
	auto const f = m.field;

	// entry (i,j) of x*I - m as a polynomial
	auto entry = [&](std::size_t i, std::size_t j) {
		Polynomial p{-m(i, j)};
		if (i == j)
			p.push_back(Scalar::one(f));
		return p;
	};

	Polynomial det(n + 1, Scalar::zero(f));
	std::vector<std::size_t> perm(n);
	std::iota(perm.begin(), perm.end(), 0);
	do
	{
		std::size_t inversions = 0;
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = i + 1; j < n; ++j)
				if (perm[i] > perm[j])
					++inversions;
		Polynomial term{Scalar::one(f)};
		for (std::size_t i = 0; i < n; ++i)
			term = poly_mul(term, entry(i, perm[i]));
		auto sign = (inversions % 2) ? -Scalar::one(f) : Scalar::one(f);
		for (std::size_t k = 0; k < term.size(); ++k)
			det[k] += sign * term[k];
	} while (std::next_permutation(perm.begin(), perm.end()));
	return det;
}

} // namespace hw
