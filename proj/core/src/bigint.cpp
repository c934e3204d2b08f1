#include "vulnfactory/bigint.hpp"

#include <algorithm>
#include <cstdlib>

#include "vulnfactory/errors.hpp"

namespace vulnfactory {

std::string to_decimal(const BigInt& value) { return value.str(); }

bool is_decimal(std::string_view text) noexcept {
    return !text.empty() &&
           std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
}

BigInt parse_decimal(std::string_view text) {
    if (!is_decimal(text)) {
        throw DomainError("not a decimal integer: '" + std::string(text) + "'");
    }
    return BigInt(std::string(text));
}

std::size_t decimal_digits(const BigInt& value) {
    const BigInt magnitude = abs(value);
    return magnitude.str().size();
}

ScientificForm scientific(const BigInt& value) {
    if (value < 0) {
        throw DomainError("scientific form requires a non-negative value");
    }
    const std::string digits = value.str();
    if (digits == "0") {
        return {};
    }
    const std::size_t keep = std::min<std::size_t>(digits.size(), 17);
    std::string head = digits.substr(0, 1) + "." + digits.substr(1, keep - 1);
    return {std::strtod(head.c_str(), nullptr), digits.size() - 1};
}

}  // namespace vulnfactory
