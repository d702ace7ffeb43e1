#include "linemul/digits.hpp"

#include <cctype>

namespace linemul {

Base::Base(int value) : value_(value) {
    if (value < kMin || value > kMax)
        throw InvalidBase("base " + std::to_string(value) + " outside [" +
                          std::to_string(kMin) + ", " + std::to_string(kMax) + "]");
}

namespace {

int digit_of(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

char char_of(int d) {
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

DigitString parse_digits(std::string_view text, Base base) {
    text = trim(text);
    if (text.empty()) throw EmptyInput("no digits given");

    std::vector<int> digits;
    digits.reserve(text.size());
    for (char c : text) {
        int d = digit_of(c);
        if (d < 0 || d >= base.value())
            throw InvalidDigit("character '" + std::string(1, c) + "' is not a base-" +
                               std::to_string(base.value()) + " digit");
        digits.push_back(d);
    }

    std::size_t first = 0;
    while (first + 1 < digits.size() && digits[first] == 0) ++first;
    digits.erase(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(first));
    return DigitString{std::move(digits), base};
}

std::string format_digits(const DigitString& d) {
    std::string out;
    out.reserve(d.digits.size());
    for (int v : d.digits) out.push_back(char_of(v));
    return out;
}

BigInt to_value(const DigitString& d) {
    BigInt v = 0;
    for (int digit : d.digits) v = v * d.base.value() + digit;
    return v;
}

} // namespace linemul
