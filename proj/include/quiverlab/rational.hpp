#pragma once

#include <gmpxx.h>

#include <string>

#include "quiverlab/errors.hpp"

namespace quiverlab {

/// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den > 0
/// after canonicalization, which is exactly the invariant we need; zero is
/// stored as 0/1.
using Rational = mpq_class;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw input_error("rational with zero denominator");
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

/// Text form "p" or "p/q", matching the serialization format.
inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

inline Rational rational_from_string(const std::string& text) {
    try {
        Rational q(text);
        if (q.get_den() == 0) throw input_error("rational with zero denominator: " + text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw input_error("cannot parse rational: " + text);
    }
}

} // namespace quiverlab
