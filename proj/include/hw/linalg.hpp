#pragma once

#include <vector>

#include "hw/scalar.hpp"

namespace hw {

/// Dense row-major matrix over a single field. Small sizes only.
struct DenseMatrix
{
	FieldSpec field;
	std::size_t rows = 0, cols = 0;
	std::vector<Scalar> data;

	DenseMatrix(FieldSpec f, std::size_t r, std::size_t c)
	    : field(f), rows(r), cols(c), data(r * c, Scalar::zero(f))
	{
	}

	Scalar &operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
	Scalar const &operator()(std::size_t i, std::size_t j) const
	{
		return data[i * cols + j];
	}

	friend bool operator==(DenseMatrix const &, DenseMatrix const &) = default;
};

DenseMatrix multiply(DenseMatrix const &a, DenseMatrix const &b);
DenseMatrix identity(FieldSpec f, std::size_t n);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(DenseMatrix &m);

std::size_t rank(DenseMatrix m);

/// Basis of { x : m x = 0 }.
std::vector<std::vector<Scalar>> null_space(DenseMatrix m);

/// Coefficients c_0..c_n of a polynomial, lowest degree first.
using Polynomial = std::vector<Scalar>;

Polynomial poly_mul(Polynomial const &a, Polynomial const &b);
Scalar poly_eval(Polynomial const &p, Scalar const &x);
/// det(x*I - m) by permutation expansion; m must be square and small.
Polynomial characteristic_polynomial(DenseMatrix const &m);

} // namespace hw
