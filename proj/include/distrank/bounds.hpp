#pragma once

#include "distrank/error.hpp"
#include "distrank/rational.hpp"

namespace distrank {

/// Order bound for a graph with diameter d and maximum degree r >= 3:
///   (1 + ((r-1)^d - 1) * r) / (r - 2)
inline Rational moore_bound(int d, const Integer& r) {
    if (d < 1)
        throw domain_error("moore bound needs diameter >= 1");
    if (r <= 2)
        throw domain_error("moore bound has a pole at r = 2; needs r >= 3");
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), Integer(r - 1).get_mpz_t(), static_cast<unsigned long>(d));
    return make_rational(Integer(1 + (power - 1) * r), Integer(r - 2));
}

inline Rational moore_bound(int d, long r) { return moore_bound(d, Integer(r)); }

/// Largest order of a connected graph with maximum degree <= 2 and diameter d
/// (attained by C_{2d+1}); used where moore_bound has its pole.
inline long degree_two_order_bound(int d) {
    if (d < 1)
        throw domain_error("diameter must be >= 1");
    return 2L * d + 1;
}

struct RamseyValue {
    Integer value;
    bool exact;
};

/// Diagonal Ramsey number R(k, k). Exact for k <= 4; beyond that the
/// binomial upper bound C(2k-2, k-1), flagged as inexact.
inline RamseyValue ramsey_value(int k) {
    if (k < 2)
        throw domain_error("Ramsey number needs k >= 2");
    switch (k) {
    case 2:
        return {Integer(2), true};
    case 3:
        return {Integer(6), true};
    case 4:
        return {Integer(18), true};
    default:
        break;
    }
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * k - 2), static_cast<unsigned long>(k - 1));
    return {c, false};
}

} // namespace distrank
