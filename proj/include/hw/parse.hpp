#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hw/element.hpp"

namespace hw {

/// Syntax or semantic error in an element expression, with the byte offset
/// at which it was detected.
class ParseError : public std::runtime_error
{
public:
	ParseError(std::size_t offset, std::string const &message)
	    : std::runtime_error("at offset " + std::to_string(offset) + ": " + message),
	      offset_(offset)
	{
	}

	std::size_t offset() const { return offset_; }

private:
	std::size_t offset_;
};

/// Parses an element expression:
///
///     expr   := term (('+' | '-') term)*
///     term   := factor ('*' factor)*
///     factor := ('+' | '-') factor | number ['/' number]
///             | 'a(' integer ')' | 's(' positive ')' | '(' expr ')'
///
/// `*` between two elements is the algebra product; between a number and an
/// element it is scaling. A trailing `(mod p)` (as printed for prime fields)
/// is accepted when p matches the field.
Element parse_element(std::string_view text, FieldSpec field);

} // namespace hw
