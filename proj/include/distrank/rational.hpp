#pragma once

#include "distrank/error.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace distrank {

using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0)
        throw domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// `num/den`, or just `num` when the denominator is 1.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses `a` or `a/b` with optional leading minus on the numerator.
inline Rational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw parse_error("malformed rational '" + std::string(text) + "'", 0, 0);
    std::string num_s(num);
    if (!num_s.empty() && num_s.front() == '+')
        num_s.erase(0, 1);
    Integer n(num_s), d{std::string(den)};
    if (d == 0)
        throw parse_error("zero denominator in '" + std::string(text) + "'", 0, 0);
    return make_rational(n, d);
}

inline std::size_t bit_length(const Integer& z) {
    return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

inline Integer floor(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

} // namespace distrank
