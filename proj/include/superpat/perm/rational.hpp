#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "superpat/error.hpp"

namespace superpat {

// Compare against Rational(k), never a bare int: boost's mixed-type == calls
// itself forever once C++20 rewrites it.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p", "p/q" or "-p/q".
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) -> std::int64_t {
        if (s.empty()) {
            throw ParseError("empty integer in rational '" + std::string(text) + "'");
        }
        std::size_t i = 0;
        bool negative = false;
        if (s[0] == '-' || s[0] == '+') {
            negative = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) {
            throw ParseError("bad rational '" + std::string(text) + "'");
        }
        std::int64_t value = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw ParseError("bad rational '" + std::string(text) + "'");
            }
            value = value * 10 + (s[i] - '0');
        }
        return negative ? -value : value;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_int(text.substr(0, slash)), den);
}

} // namespace superpat
