#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace halg {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational numbers. cpp_rational keeps the canonical form we need:
// denominator > 0, gcd(num, den) = 1, zero stored as 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Renders "p" for integers and "p/q" otherwise.
inline std::string rat_to_string(const Rational& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "p", "-p", "p/q" with optional sign on the numerator.
inline Rational rat_parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

inline BigInt factorial(std::size_t n) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned>(i);
    return f;
}

// n-th Hilbert polynomial evaluated at q: H_0 = 1, H_n(q) = q(q-1)...(q-n+1)/n!.
inline Rational hilbert(std::size_t n, const Rational& q) {
    Rational p = 1;
    for (std::size_t i = 0; i < n; ++i) p *= (q - static_cast<int>(i));
    return p / Rational(factorial(n));
}

}  // namespace halg
