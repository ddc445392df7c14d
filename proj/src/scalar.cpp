#include "hw/scalar.hpp"

#include <charconv>
#include <ostream>

namespace hw {

namespace {

bool is_prime(std::uint64_t n)
{
	if (n < 2)
		return false;
	for (std::uint64_t d = 2; d * d <= n; ++d)
		if (n % d == 0)
			return false;
	return true;
}

std::uint64_t reduce_mpz(mpz_class const &n, std::uint64_t p)
{
	mpz_class r;
	mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
	return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
	std::uint64_t result = 1;
	base %= p;
	while (exp)
	{
		if (exp & 1)
			result = result * base % p;
		base = base * base % p;
		exp >>= 1;
	}
	return result;
}

} // namespace

FieldSpec FieldSpec::prime_field(std::int64_t p)
{
	if (p == 2)
		throw std::invalid_argument("characteristic 2 is not supported");
	if (p < 2 || p >= (std::int64_t(1) << 32) || !is_prime(std::uint64_t(p)))
		throw std::invalid_argument("gf:" + std::to_string(p) +
		                            " is not an odd prime below 2^32");
	return FieldSpec(Kind::PrimeField, std::uint64_t(p));
}

FieldSpec FieldSpec::parse(std::string_view text)
{
	if (text == "q" || text == "Q")
		return rationals();
	if (text.starts_with("gf:"))
	{
		auto digits = text.substr(3);
		std::int64_t p = 0;
		auto [ptr, ec] =
		    std::from_chars(digits.data(), digits.data() + digits.size(), p);
		if (ec != std::errc() || ptr != digits.data() + digits.size() ||
		    digits.empty())
			throw std::invalid_argument("malformed field '" +
			                            std::string(text) + "'");
		return prime_field(p);
	}
	throw std::invalid_argument("unknown field '" + std::string(text) +
	                            "' (expected q or gf:p)");
}

std::string FieldSpec::to_string() const
{
	return is_rational() ? "q" : "gf:" + std::to_string(prime_);
}

Scalar Scalar::embed(std::int64_t n, FieldSpec f)
{
	if (f.is_rational())
		return Scalar(f, mpq_class(mpz_class(static_cast<long>(n))));
	auto p = static_cast<std::int64_t>(f.characteristic());
	auto r = n % p;
	if (r < 0)
		r += p;
	return Scalar(f, static_cast<std::uint64_t>(r));
}

Scalar Scalar::embed(mpz_class const &n, FieldSpec f)
{
	if (f.is_rational())
		return Scalar(f, mpq_class(n));
	return Scalar(f, reduce_mpz(n, f.characteristic()));
}

Scalar Scalar::fraction(std::int64_t num, std::int64_t den, FieldSpec f)
{
	return fraction(mpz_class(static_cast<long>(num)),
	                mpz_class(static_cast<long>(den)), f);
}

Scalar Scalar::fraction(mpz_class const &num, mpz_class const &den, FieldSpec f)
{
	return scalar_div(embed(num, f), embed(den, f));
}

bool Scalar::is_zero() const
{
	if (field_.is_rational())
		return sgn(rational()) == 0;
	return residue() == 0;
}

bool Scalar::is_one() const
{
	if (field_.is_rational())
		return rational() == 1;
	return residue() == 1;
}

void Scalar::require_same_field(Scalar const &o) const
{
	if (!(field_ == o.field_))
		throw FieldMismatch("scalar field mismatch: " + field_.to_string() +
		                    " vs " + o.field_.to_string());
}

Scalar Scalar::inverse() const
{
	if (is_zero())
		throw std::domain_error("division by zero");
	if (field_.is_rational())
		return Scalar(field_, mpq_class(1) / rational());
	auto p = field_.characteristic();
	return Scalar(field_, pow_mod(residue(), p - 2, p));
}

Scalar &Scalar::operator+=(Scalar const &o)
{
	require_same_field(o);
	if (field_.is_rational())
		std::get<mpq_class>(value_) += o.rational();
	else
	{
		auto &r = std::get<std::uint64_t>(value_);
		r = (r + o.residue()) % field_.characteristic();
	}
	return *this;
}

Scalar &Scalar::operator-=(Scalar const &o)
{
	require_same_field(o);
	if (field_.is_rational())
		std::get<mpq_class>(value_) -= o.rational();
	else
	{
		auto p = field_.characteristic();
		auto &r = std::get<std::uint64_t>(value_);
		r = (r + p - o.residue()) % p;
	}
	return *this;
}

Scalar &Scalar::operator*=(Scalar const &o)
{
	require_same_field(o);
	if (field_.is_rational())
		std::get<mpq_class>(value_) *= o.rational();
	else
	{
		auto &r = std::get<std::uint64_t>(value_);
		r = r * o.residue() % field_.characteristic();
	}
	return *this;
}

Scalar &Scalar::operator/=(Scalar const &o)
{
	require_same_field(o);
	return *this *= o.inverse();
}

Scalar Scalar::operator-() const
{
	if (field_.is_rational())
		return Scalar(field_, mpq_class(-rational()));
	auto p = field_.characteristic();
	return Scalar(field_, (p - residue()) % p);
}

bool operator==(Scalar const &a, Scalar const &b)
{
	return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::value_string() const
{
	if (field_.is_rational())
		return rational().get_str();
	return std::to_string(residue());
}

std::string Scalar::to_string() const
{
	if (field_.is_rational())
		return value_string();
	return value_string() + " mod " + std::to_string(field_.characteristic());
}

Scalar scalar_div(Scalar const &x, Scalar const &y)
{
	return x / y;
}

std::ostream &operator<<(std::ostream &os, Scalar const &s)
{
	return os << s.to_string();
}

} // namespace hw
