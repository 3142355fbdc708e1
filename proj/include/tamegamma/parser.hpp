#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "tamegamma/algebra.hpp"

namespace tamegamma {

/// Syntax or semantic error in polynomial text, with a 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& detail() const { return detail_; }

private:
    std::string detail_;
    std::size_t line_;
    std::size_t column_;
};

using ParsedPolynomial = std::variant<SparsePolynomial, FamilyPolynomial>;

/// Parses polynomial text over Q(i) in z1..zn and optionally t.
///
/// Grammar (whitespace-insensitive, `#` starts a comment running to the end
/// of the line):
///
///     expr    := [+|-] term { (+|-) term }
///     term    := factor { (*|/) factor }      divisors must be nonzero constants
///     factor  := primary [ ^ exponent ]
///     primary := integer | i | zK | t | ( expr )
///
/// Any occurrence of `t` makes the result a FamilyPolynomial. When `n` is
/// omitted it is the largest variable index that occurs (at least 1).
ParsedPolynomial parse_polynomial(std::string_view text, std::optional<std::size_t> n = std::nullopt);

/// Convenience wrappers used by tests and tools; they throw ParseError when
/// the text has the other shape.
SparsePolynomial parse_sparse(std::string_view text, std::optional<std::size_t> n = std::nullopt);
FamilyPolynomial parse_family(std::string_view text, std::optional<std::size_t> n = std::nullopt);

}  // namespace tamegamma
