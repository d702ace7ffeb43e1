#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linemul/errors.hpp"

namespace linemul {

using BigInt = boost::multiprecision::cpp_int;

// Radix in [2, 16]; single characters 0-9a-f denote digits.
class Base {
public:
    static constexpr int kMin = 2;
    static constexpr int kMax = 16;

    explicit Base(int value);

    int value() const noexcept { return value_; }

    friend bool operator==(Base, Base) = default;

private:
    int value_;
};

// A non-negative factor as digits in a base, most-significant first.
// Normalized: no leading zeros, zero is exactly [0], never empty.
struct DigitString {
    std::vector<int> digits;
    Base base;

    std::size_t size() const noexcept { return digits.size(); }
    bool is_zero() const noexcept { return digits.size() == 1 && digits[0] == 0; }

    friend bool operator==(const DigitString&, const DigitString&) = default;
};

// Text format: [0-9a-fA-F]+, interpreted per base. Leading/trailing
// whitespace is trimmed, leading zeros are stripped.
DigitString parse_digits(std::string_view text, Base base);

// Inverse of parse_digits; lowercase letters for digits >= 10.
std::string format_digits(const DigitString& d);

// Exact positional value, any length.
BigInt to_value(const DigitString& d);

} // namespace linemul
