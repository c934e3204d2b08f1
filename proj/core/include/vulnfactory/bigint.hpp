#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace vulnfactory {

/// Unbounded signed integer. Every counter, index and census value in the
/// library is carried in this type so nothing wraps.
using BigInt = boost::multiprecision::cpp_int;

/// Plain decimal, no sign for non-negative values, no padding.
[[nodiscard]] std::string to_decimal(const BigInt& value);

/// Strict parse of a non-empty run of ASCII digits. Leading zeros are
/// accepted ("007" == 7). Throws DomainError on anything else.
[[nodiscard]] BigInt parse_decimal(std::string_view text);

/// True when `text` is one or more ASCII digits.
[[nodiscard]] bool is_decimal(std::string_view text) noexcept;

/// Number of decimal digits of |value| ("0" has one digit).
[[nodiscard]] std::size_t decimal_digits(const BigInt& value);

struct ScientificForm {
    double mantissa = 0.0;  // in [1, 10) for non-zero values
    std::size_t exponent = 0;
};

/// Decimal scientific form of a non-negative integer, mantissa taken from
/// the leading 17 significant digits.
[[nodiscard]] ScientificForm scientific(const BigInt& value);

}  // namespace vulnfactory
