#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace kumlat {

// All lattice arithmetic runs on arbitrary-width integers; nothing in the
// library ever wraps or truncates silently.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// floor(sqrt(n)) by integer Newton iteration. Exact for any width; no
// floating point anywhere on this path.
inline Int isqrt_floor(const Int& n) {
    if (n < 0) {
        throw OutOfRange("isqrt_floor: negative argument");
    }
    if (n < 2) {
        return n;
    }
    // Initial guess 2^(k/2 + 1) with 2^k <= n < 2^(k+1), always >= sqrt(n),
    // so the iteration decreases monotonically onto floor(sqrt(n)).
    const unsigned k = boost::multiprecision::msb(n);
    Int x = Int(1) << (k / 2 + 1);
    Int y = (x + n / x) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

inline std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) {
        return std::nullopt;
    }
    Int r = isqrt_floor(n);
    if (r * r == n) {
        return r;
    }
    return std::nullopt;
}

inline bool is_perfect_square(const Int& n) {
    return exact_sqrt(n).has_value();
}

// Strict decimal integer parse (optional sign, digits only). cpp_int's own
// string constructor accepts hex/octal prefixes, which we do not want on
// user-facing input.
inline Int parse_int(const std::string& text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        ++i;
    }
    if (i == text.size()) {
        throw ParseError("not an integer: \"" + text + "\"");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9') {
            throw ParseError("not an integer: \"" + text + "\"");
        }
    }
    return Int(text);
}

inline Int abs_int(const Int& x) {
    return x < 0 ? Int(-x) : x;
}

// gcd of a coordinate vector, 0 for the zero vector.
inline Int vector_gcd(const std::vector<Int>& coords) {
    Int g = 0;
    for (const Int& c : coords) {
        g = boost::multiprecision::gcd(g, abs_int(c));
    }
    return g;
}

} // namespace kumlat
