#pragma once

#include <cstdint>
#include <string>

#include "cubenerve/errors.hpp"

namespace cubenerve {

// A sign, written - or + throughout.  Stored as the integer it denotes
// so that products and parities are ordinary arithmetic.
enum class sign : std::int8_t { minus = -1, plus = +1 };

constexpr sign operator-(sign s) {
    return s == sign::minus ? sign::plus : sign::minus;
}

constexpr sign operator*(sign a, sign b) {
    return a == b ? sign::plus : sign::minus;
}

constexpr int to_int(sign s) { return static_cast<int>(s); }

constexpr char to_char(sign s) { return s == sign::minus ? '-' : '+'; }

// (-)^k as a sign: plus for even k, minus for odd k.
constexpr sign parity_sign(long long k) {
    return (k % 2 == 0) ? sign::plus : sign::minus;
}

inline sign sign_from_char(char c) {
    if (c == '-') return sign::minus;
    if (c == '+') return sign::plus;
    throw domain_error(std::string("not a sign character: '") + c + "'");
}

inline std::string to_string(sign s) { return std::string(1, to_char(s)); }

} // namespace cubenerve
