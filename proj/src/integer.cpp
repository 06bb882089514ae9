#include "nht/integer.hpp"

#include <algorithm>

namespace nht {

std::string to_string(Int value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    // Work with negative magnitudes so INT128_MIN needs no special case.
    Int v = negative ? value : -value;
    std::string digits;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Int parse_int(std::string_view text) {
    if (text.empty()) throw InvalidInput("empty integer");
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw InvalidInput("malformed integer '" + std::string(text) + "'");
    Int value = 0;
    for (; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (ch < '0' || ch > '9') throw InvalidInput("malformed integer '" + std::string(text) + "'");
        Int digit = ch - '0';
        if (__builtin_mul_overflow(value, Int{10}, &value) ||
            __builtin_sub_overflow(value, digit, &value)) {
            throw OverflowError("integer '" + std::string(text) + "' exceeds 128-bit range");
        }
    }
    if (negative) return value;
    Int result;
    if (__builtin_sub_overflow(Int{0}, value, &result)) {
        throw OverflowError("integer '" + std::string(text) + "' exceeds 128-bit range");
    }
    return result;
}

}  // namespace nht
