#include "hw/parse.hpp"

#include <cctype>
#include <optional>

namespace hw {

namespace {

// A parsed subexpression is either a bare number or an element.
struct Value
{
	std::optional<Scalar> number;
	std::optional<Element> element;
};

class Parser
{
public:
	Parser(std::string_view text, FieldSpec f) : text_(text), field_(f) {}

	Element parse()
	{
		auto v = expr();
		skip_modulus_suffix();
		skip_space();
		if (pos_ != text_.size())
			fail("unexpected '" + std::string(1, text_[pos_]) + "'");
		if (v.number)
		{
			if (v.number->is_zero())
				return Element(field_);
			fail_at(0, "expression is a bare scalar, not an element");
		}
		return *v.element;
	}

private:
	[[noreturn]] void fail(std::string const &msg) const { throw ParseError(pos_, msg); }
	[[noreturn]] void fail_at(std::size_t at, std::string const &msg) const
	{
		throw ParseError(at, msg);
	}

	void skip_space()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	bool peek(char c)
	{
		skip_space();
		return pos_ < text_.size() && text_[pos_] == c;
	}

	bool accept(char c)
	{
		if (!peek(c))
			return false;
		++pos_;
		return true;
	}

	void expect(char c)
	{
		if (!accept(c))
			fail(std::string("expected '") + c + "'");
	}

	mpz_class integer(bool allow_sign)
	{
		skip_space();
		if (allow_sign && pos_ < text_.size() && text_[pos_] == '+')
			++pos_;
		auto start = pos_;
		if (allow_sign && pos_ < text_.size() && text_[pos_] == '-')
			++pos_;
		auto digits = pos_;
		while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
			++pos_;
		if (pos_ == digits)
			fail("expected an integer");
		return mpz_class(std::string(text_.substr(start, pos_ - start)));
	}

	std::int64_t index_value()
	{
		auto start = pos_;
		auto n = integer(true);
		if (!n.fits_slong_p())
			fail_at(start, "index out of range");
		return n.get_si();
	}

	Value add(Value a, Value b, bool subtract, std::size_t at)
	{
		if (a.number && b.number)
			return {subtract ? *a.number - *b.number : *a.number + *b.number, {}};
		auto as_element = [&](Value const &v) {
			if (v.element)
				return *v.element;
			if (v.number->is_zero())
				return Element(field_);
			fail_at(at, "cannot add a bare scalar to an element");
		};
		auto x = as_element(a), y = as_element(b);
		return {{}, subtract ? x - y : x + y};
	}

	Value multiply(Value a, Value b)
	{
		if (a.number && b.number)
			return {*a.number * *b.number, {}};
		if (a.number)
			return {{}, *b.element * *a.number};
		if (b.number)
			return {{}, *a.element * *b.number};
		return {{}, mul(*a.element, *b.element)};
	}

	Value expr()
	{
		auto v = term();
		for (;;)
		{
			skip_space();
			auto at = pos_;
			if (accept('+'))
				v = add(std::move(v), term(), false, at);
			else if (accept('-'))
				v = add(std::move(v), term(), true, at);
			else
				return v;
		}
	}

	Value term()
	{
		auto v = factor();
		while (accept('*'))
			v = multiply(std::move(v), factor());
		return v;
	}

	Value factor()
	{
		skip_space();
		if (pos_ >= text_.size())
			fail("unexpected end of input");
		char c = text_[pos_];
		if (c == '-')
		{
			++pos_;
			auto v = factor();
			if (v.number)
				return {-*v.number, {}};
			return {{}, -*v.element};
		}
		if (c == '+')
		{
			++pos_;
			return factor();
		}
		if (c == '(')
		{
			++pos_;
			auto v = expr();
			expect(')');
			return v;
		}
		if (std::isdigit(static_cast<unsigned char>(c)))
			return {number(), {}};
		if (c == 'a' || c == 's')
			return {{}, basis()};
		fail("unexpected '" + std::string(1, c) + "'");
	}

	Scalar number()
	{
		auto num = integer(false);
		// '/' only ever follows a number as a fraction bar
		if (!accept('/'))
			return Scalar::embed(num, field_);
		skip_space();
		auto at = pos_;
		auto den = integer(false);
		if (den == 0)
			fail_at(at, "division by zero");
		auto d = Scalar::embed(den, field_);
		if (d.is_zero())
			fail_at(at, "denominator " + den.get_str() + " is zero in " + field_.to_string());
		return Scalar::embed(num, field_) / d;
	}

	Element basis()
	{
		char kind = text_[pos_++];
		expect('(');
		skip_space();
		auto idx_at = pos_;
		auto i = index_value();
		expect(')');
		if (kind == 'a')
			return Element::a(i, field_);
		if (i == 0)
			fail_at(idx_at, "sigma_0 is identically zero");
		if (i < 0)
			fail_at(idx_at, "s(" + std::to_string(i) + "): sigma index must be positive");
		return Element::s(i, field_);
	}

	void skip_modulus_suffix()
	{
		skip_space();
		auto rest = text_.substr(pos_);
		if (!rest.starts_with("(mod"))
			return;
		auto at = pos_;
		pos_ += 4;
		auto p = integer(false);
		expect(')');
		if (field_.is_rational() || p != mpz_class(std::to_string(field_.characteristic())))
			fail_at(at, "modulus suffix does not match field " + field_.to_string());
	}

	std::string_view text_;
	FieldSpec field_;
	std::size_t pos_ = 0;
};

} // namespace

Element parse_element(std::string_view text, FieldSpec field)
{
	return Parser(text, field).parse();
}

} // namespace hw
