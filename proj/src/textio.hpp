#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <string_view>

#include "error.hpp"

namespace scenbdd {

// All serialized reals use this formatter so that emitted files are
// byte-stable and round-trip through parsing without loss.
inline std::string fmt_real(double v) {
    if (v == 0.0) return "0";  // normalize negative zero
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline double parse_real(std::string_view tok, const std::string& what) {
    if (tok == "inf" || tok == "+inf") return std::numeric_limits<double>::infinity();
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw Error::validation("cannot parse real number for " + what + ": '" +
                                std::string(tok) + "'");
    }
    return out;
}

inline long parse_int(std::string_view tok, const std::string& what) {
    long out = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw Error::validation("cannot parse integer for " + what + ": '" +
                                std::string(tok) + "'");
    }
    return out;
}

}  // namespace scenbdd
