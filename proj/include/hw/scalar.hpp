#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace hw {

/// Raised when two values from different fields meet in one operation.
class FieldMismatch : public std::invalid_argument
{
public:
	using std::invalid_argument::invalid_argument;
};

/// The ground field: either the rationals or a prime field GF(p) with p odd.
///
/// Construction validates the prime, so every FieldSpec in circulation has
/// characteristic 0 or an odd prime below 2^32.
class FieldSpec
{
public:
	enum class Kind { Rationals, PrimeField };

	static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
	static FieldSpec prime_field(std::int64_t p);

	/// Accepts `q` or `gf:p`.
	static FieldSpec parse(std::string_view text);

	Kind kind() const { return kind_; }
	bool is_rational() const { return kind_ == Kind::Rationals; }
	std::uint64_t characteristic() const { return prime_; }
	std::string to_string() const;

	friend bool operator==(FieldSpec const &, FieldSpec const &) = default;

private:
	FieldSpec(Kind k, std::uint64_t p) : kind_(k), prime_(p) {}

	Kind kind_;
	std::uint64_t prime_;
};

/// An exact field element in canonical form: a reduced fraction with positive
/// denominator, or the least nonnegative residue mod p.
class Scalar
{
public:
	/// Zero of the rationals.
	Scalar() : field_(FieldSpec::rationals()), value_(mpq_class(0)) {}

	static Scalar zero(FieldSpec f) { return embed(0, f); }
	static Scalar one(FieldSpec f) { return embed(1, f); }
	static Scalar embed(std::int64_t n, FieldSpec f);
	static Scalar embed(mpz_class const &n, FieldSpec f);
	/// num/den embedded into f; throws std::domain_error if den maps to zero.
	static Scalar fraction(std::int64_t num, std::int64_t den, FieldSpec f);
	static Scalar fraction(mpz_class const &num, mpz_class const &den,
	                       FieldSpec f);

	FieldSpec const &field() const { return field_; }
	bool is_zero() const;
	bool is_one() const;

	/// Valid only over the rationals.
	mpq_class const &rational() const { return std::get<mpq_class>(value_); }
	/// Valid only over GF(p).
	std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

	Scalar inverse() const;

	Scalar &operator+=(Scalar const &o);
	Scalar &operator-=(Scalar const &o);
	Scalar &operator*=(Scalar const &o);
	Scalar &operator/=(Scalar const &o);

	friend Scalar operator+(Scalar a, Scalar const &b) { return a += b; }
	friend Scalar operator-(Scalar a, Scalar const &b) { return a -= b; }
	friend Scalar operator*(Scalar a, Scalar const &b) { return a *= b; }
	friend Scalar operator/(Scalar a, Scalar const &b) { return a /= b; }
	Scalar operator-() const;

	friend bool operator==(Scalar const &a, Scalar const &b);

	/// `-3/8`, `5`, or `2 mod 5`.
	std::string to_string() const;
	/// Bare value without the modulus suffix: `-3/8` or `2`.
	std::string value_string() const;

private:
	Scalar(FieldSpec f, mpq_class q) : field_(f), value_(std::move(q)) {}
	Scalar(FieldSpec f, std::uint64_t r) : field_(f), value_(r) {}

	void require_same_field(Scalar const &o) const;

	FieldSpec field_;
	std::variant<mpq_class, std::uint64_t> value_;
};

/// x / y with an explicit error on y == 0.
Scalar scalar_div(Scalar const &x, Scalar const &y);

std::ostream &operator<<(std::ostream &os, Scalar const &s);

} // namespace hw
