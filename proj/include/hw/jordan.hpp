#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hw/element.hpp"
#include "hw/linalg.hpp"

namespace hw {

/// Throws std::invalid_argument unless f has characteristic 3.
void require_char3(FieldSpec f, char const *what);

/// s(j) * b == 0 for j <= window and every basis vector b with index in
/// [-window, window] (axes) or [1, window] (sigmas). Characteristic 3 only.
bool char3_sigma_annihilation_check(FieldSpec f, std::int64_t window);

struct WProducts
{
	Element ww;       // w_i * w_j
	Element expected; // u_{|i-j|}/2 - u_{i+j}/2 with u_0 = 0
	Element vw;       // v_i * w_j, expected zero

	bool holds() const { return ww == expected && vw.is_zero(); }
};

/// Products of w_i with w_j and v_i with w_j at axis 0. Characteristic 3 only.
WProducts char3_w_products(std::int64_t i, std::int64_t j, FieldSpec f);

/// a(xy) == weight(y)/2 x + weight(x)/2 y for x, y without sigma part.
/// Characteristic 3 only; throws std::invalid_argument on sigma parts.
bool a_part_product_check(Element const &x, Element const &y);

/// x(y x^2) == (xy) x^2
bool jordan_identity_check(Element const &x, Element const &y);

/// Random element with a-indices in [-index_range, index_range], s-indices
/// in [1, index_range], at most max_support terms and small coefficients.
/// Uses only raw engine output so streams are reproducible across platforms.
Element random_element(FieldSpec f, std::mt19937_64 &rng, std::size_t max_support,
                       std::int64_t index_range = 8);

/// Random small nonzero-ish scalar: n/d with |n| <= 5, 1 <= d <= 4.
Scalar random_scalar(FieldSpec f, std::mt19937_64 &rng);

/// Data for the construction B = A + I with I B = 0 and
/// ab = (omega(b) a + omega(a) b)/2 + sigma(a, b) on A.
struct BaricAlgebraSpec
{
	FieldSpec field;
	std::size_t dim_A = 1;
	std::size_t dim_I = 0;
	std::vector<Scalar> omega;                             // length dim_A
	std::vector<std::vector<std::vector<Scalar>>> sigma_form; // [dim_A][dim_A][dim_I]
};

BaricAlgebraSpec random_baric_spec(FieldSpec f, std::size_t dim_A, std::size_t dim_I,
                                   std::mt19937_64 &rng);

/// A finite-dimensional commutative algebra stored as a dense table of
/// structure constants. Coordinates 0..dim_A-1 span A, the rest span I.
class BaricAlgebra
{
public:
	using Vector = std::vector<Scalar>;

	/// Throws std::invalid_argument on shape errors or an asymmetric sigma_form.
	explicit BaricAlgebra(BaricAlgebraSpec spec);

	FieldSpec const &field() const { return spec_.field; }
	std::size_t dim() const { return spec_.dim_A + spec_.dim_I; }
	std::size_t dim_A() const { return spec_.dim_A; }
	std::size_t dim_I() const { return spec_.dim_I; }

	Vector basis(std::size_t k) const;
	Vector zero() const;
	Vector mul(Vector const &x, Vector const &y) const;
	/// omega extended by zero on I.
	Scalar weight(Vector const &x) const;
	Vector random_vector(std::mt19937_64 &rng) const;

	/// I B = 0 on basis vectors.
	bool ideal_annihilates() const;
	/// ab - (omega(b) a + omega(a) b)/2 lies in I for basis a, b of A.
	bool a_products_in_I() const;
	/// omega(xy) = omega(x) omega(y) on basis pairs.
	bool weight_multiplicative() const;
	bool commutative() const;
	bool jordan_identity(Vector const &x, Vector const &y) const;

private:
	BaricAlgebraSpec spec_;
	// product of basis vectors p and q
	std::vector<std::vector<Vector>> table_;
};

/// HW over GF(3) restricted to a(i), |i| <= a_range, and s(j), j <= s_range,
/// realised through BaricAlgebra with omega = weight and
/// sigma(a_i, a_k) = s(|i-k|). Requires s_range >= 2 * a_range.
struct HwWindowModel
{
	BaricAlgebra algebra;
	std::vector<BasisIndex> coordinates;

	BaricAlgebra::Vector to_vector(Element const &x) const;
	Element to_element(BaricAlgebra::Vector const &v) const;
};

HwWindowModel hw_char3_window(FieldSpec f, std::int64_t a_range, std::int64_t s_range);

} // namespace hw
