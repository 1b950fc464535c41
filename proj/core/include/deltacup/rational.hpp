#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

// Boost 1.74 ships heterogeneous rational/integer comparison templates whose
// operator== is written as `return a == b;`. Under C++20's reversed operator
// candidates that expression re-selects the same template, so any
// rational==int (or !=) comparison recurses forever. The non-template
// overloads below win overload resolution against those templates (and, living
// in namespace boost, are found by ADL from every context, including inside
// other libraries' expression templates); != is synthesized from them.
namespace boost {

inline bool operator==(const rational<long long>& r, long long v) {
    return r.denominator() == 1 && r.numerator() == v;
}
inline bool operator==(const rational<long long>& r, int v) {
    return r == static_cast<long long>(v);
}
inline bool operator==(long long v, const rational<long long>& r) { return r == v; }
inline bool operator==(int v, const rational<long long>& r) {
    return r == static_cast<long long>(v);
}

} // namespace boost

namespace deltacup {

// Exact scalar type for all cochain and quasimorphism values. 64-bit
// numerator/denominator is ample: every quantity in this library is a short
// sum of bounded table entries (and at most one product of two of them).
using Rational = boost::rational<long long>;

inline Rational rational_abs(const Rational& r) { return r < 0 ? -r : r; }

// Accepts "p" or "p/q" with an optional leading sign on p.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("parse_rational: expected p or p/q, got '" + std::string(text) +
                                    "'");
    };
    if (text.empty()) fail();
    std::size_t slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    auto to_ll = [&](std::string_view part, bool allow_sign) -> long long {
        if (part.empty()) fail();
        std::size_t i = 0;
        bool neg = false;
        if (allow_sign && (part[0] == '+' || part[0] == '-')) {
            neg = part[0] == '-';
            i = 1;
            if (i == part.size()) fail();
        }
        long long value = 0;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') fail();
            value = value * 10 + (part[i] - '0');
        }
        return neg ? -value : value;
    };
    long long p = to_ll(num, true);
    long long q = to_ll(den, false);
    if (q == 0) fail();
    return Rational(p, q);
}

// Canonical form "p/q" (q > 0, reduced), e.g. "0/1", "-3/2".
inline std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace deltacup
