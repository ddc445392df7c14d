#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "hw/element.hpp"
#include "hw/linalg.hpp"

namespace hw {

/// The axis a(k). Every construction for a(0) is transported to a(k) by the
/// translation i -> i + k.
struct Axis
{
	std::int64_t k = 0;

	Element vector(FieldSpec f) const { return Element::a(k, f); }
	friend bool operator==(Axis, Axis) = default;
};

// Eigenvectors of ad_a relative to an axis. All require j >= 1.
Element c_vec(std::int64_t j, Axis axis, FieldSpec f); // 2a - a(k-j) - a(k+j)
Element u_vec(std::int64_t j, Axis axis, FieldSpec f); // 6a - 3(a(k-j)+a(k+j)) + 4s(j)
Element v_vec(std::int64_t j, Axis axis, FieldSpec f); // 2a - (a(k-j)+a(k+j)) - 4s(j)
Element w_vec(std::int64_t j, Axis axis, FieldSpec f); // a(k-j) - a(k+j)

/// x_{i,j} = -2x_i - 2x_j + x_{|i-j|} + x_{i+j}, with x_0 = 0.
/// `family` is only called with positive indices.
Element combination(std::function<Element(std::int64_t)> const &family,
                    std::int64_t i, std::int64_t j);

/// Matrix of ad_{a(0)} on the ordered basis (a, a(-j), a(j), s(j)); row r
/// holds the coordinates of a * basis[r]. Built from mul.
DenseMatrix ad_matrix_4(std::int64_t j, FieldSpec f);

/// Characteristic polynomial of ad_matrix_4, lowest degree first.
Polynomial char_poly_ad4(std::int64_t j, FieldSpec f);

/// (x - 1) x (x - 2) (x - 1/2), lowest degree first.
Polynomial expected_char_poly(FieldSpec f);

/// Eigenvalue attached to each part: 1 for the axis, 0 for u, 2 for v and
/// 1/2 for w. In characteristic 3 the v and w labels coincide (2 = 1/2).
struct PartEigenvalues
{
	Scalar one, u, v, w;
	static PartEigenvalues of(FieldSpec f);
};

/// An element written as one_coeff*a + sum u_j + sum v_j + sum w_j relative
/// to an axis.
struct EigenDecomposition
{
	using Coeffs = std::map<std::int64_t, Scalar>;

	FieldSpec field;
	Axis axis;
	Scalar one_coeff;
	Coeffs u, v, w;

	Element one_part() const;
	Element u_part() const;
	Element v_part() const;
	Element w_part() const;
	Element reassemble() const;

	bool has_one() const { return !one_coeff.is_zero(); }
};

/// Exact change of basis: pairs a(k-j), a(k+j) into c_j and w_j, then
/// converts (c_j, s_j) into (u_j, v_j).
EigenDecomposition decompose(Element const &x, Axis axis);

/// a(k) * x == lam * x
bool eigen_check(Element const &x, Axis axis, Scalar const &lam);

} // namespace hw
