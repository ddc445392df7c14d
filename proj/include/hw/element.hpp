#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "hw/scalar.hpp"

namespace hw {

/// A basis vector of HW: an axis a(i) for any integer i, or s(j) for j >= 1.
struct BasisIndex
{
	enum class Tag : std::uint8_t { A = 0, S = 1 };

	Tag tag;
	std::int64_t index;

	static BasisIndex a(std::int64_t i) { return {Tag::A, i}; }
	/// s(0) does not exist as a basis vector; throws std::invalid_argument.
	static BasisIndex s(std::int64_t j);

	bool is_axis() const { return tag == Tag::A; }
	bool is_sigma() const { return tag == Tag::S; }

	std::string to_string() const;

	// A-before-S, then ascending index.
	friend auto operator<=>(BasisIndex const &, BasisIndex const &) = default;
};

/// A finitely supported vector of HW over a fixed field.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// vectors.
class Element
{
public:
	using Terms = std::map<BasisIndex, Scalar>;

	explicit Element(FieldSpec field) : field_(field) {}
	Element(FieldSpec field, BasisIndex b, Scalar coeff);

	static Element basis(BasisIndex b, FieldSpec f);
	static Element a(std::int64_t i, FieldSpec f);
	/// s(0) is the zero vector.
	static Element s(std::int64_t j, FieldSpec f);

	FieldSpec const &field() const { return field_; }
	Terms const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t support_size() const { return terms_.size(); }

	/// Coefficient of b (zero when absent).
	Scalar coeff(BasisIndex b) const;

	/// this += c * b
	void add_term(BasisIndex b, Scalar const &c);
	void add_scaled(Element const &x, Scalar const &c);

	Element &operator+=(Element const &o);
	Element &operator-=(Element const &o);
	Element &operator*=(Scalar const &c);

	friend Element operator+(Element a, Element const &b) { return a += b; }
	friend Element operator-(Element a, Element const &b) { return a -= b; }
	friend Element operator*(Element a, Scalar const &c) { return a *= c; }
	friend Element operator*(Scalar const &c, Element a) { return a *= c; }
	Element operator-() const;

	friend bool operator==(Element const &, Element const &) = default;

	/// `1/2*a(0) + 1/2*a(1) + s(1)`; over GF(p) residues followed by
	/// ` (mod p)`; the zero vector is `0`.
	std::string to_string() const;

private:
	void require_same_field(Element const &o) const;

	FieldSpec field_;
	Terms terms_;
};

std::ostream &operator<<(std::ostream &os, Element const &x);

/// Product of two basis vectors.
Element basis_product(BasisIndex x, BasisIndex y, FieldSpec field);

/// The bilinear product of HW; throws FieldMismatch on mixed fields.
Element mul(Element const &x, Element const &y);

/// The weight homomorphism: sum of the a-coefficients.
Scalar weight(Element const &x);

/// The Frobenius form weight(x) * weight(y).
Scalar frobenius(Element const &x, Element const &y);

Element a_part(Element const &x);
Element sigma_part(Element const &x);

bool is_idempotent(Element const &x);

} // namespace hw
