#pragma once

#include "distrank/error.hpp"
#include "distrank/matrix.hpp"
#include "distrank/rational.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace distrank {

namespace detail {

struct overflow {};

template <class T>
struct integer_ops;

// Machine-word path. Products are formed in 128 bits; the Bareiss quotient is
// exact, so the only failure mode is a result that no longer fits in 64 bits.
template <>
struct integer_ops<std::int64_t> {
    static bool is_zero(std::int64_t x) { return x == 0; }

    static std::size_t bits(std::int64_t x) {
        auto mag = x < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(x)
                         : static_cast<std::uint64_t>(x);
        return static_cast<std::size_t>(std::bit_width(mag));
    }

    static std::int64_t cross_div(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                                  std::int64_t p) {
        __int128 v = static_cast<__int128>(a) * b - static_cast<__int128>(c) * d;
        v /= p;
        if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
            throw overflow{};
        return static_cast<std::int64_t>(v);
    }
};

template <>
struct integer_ops<Integer> {
    static bool is_zero(const Integer& x) { return x == 0; }
    static std::size_t bits(const Integer& x) { return bit_length(x); }

    static Integer cross_div(const Integer& a, const Integer& b, const Integer& c, const Integer& d,
                             const Integer& p) {
        Integer v = a * b - c * d;
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        return v;
    }
};

template <class T>
struct echelon {
    std::size_t rank = 0;
    int sign = 1;
    T last_pivot = T(1);
};

/// Fraction-free (Bareiss) forward elimination in place. Pivot rows are
/// chosen by smallest bit length among nonzero candidates; columns with no
/// candidate are skipped, so rectangular and singular inputs are fine.
template <class T>
echelon<T> bareiss(Matrix<T>& a) {
    using ops = integer_ops<T>;
    echelon<T> out;
    T prev(1);
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        std::size_t best_bits = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (ops::is_zero(a(i, c)))
                continue;
            std::size_t b = ops::bits(a(i, c));
            if (pivot == rows || b < best_bits) {
                pivot = i;
                best_bits = b;
            }
        }
        if (pivot == rows)
            continue;
        if (pivot != r) {
            a.swap_rows(pivot, r);
            out.sign = -out.sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a(i, j) = ops::cross_div(a(r, c), a(i, j), a(i, c), a(r, j), prev);
            a(i, c) = T(0);
        }
        prev = a(r, c);
        ++r;
    }
    out.rank = r;
    out.last_pivot = prev;
    return out;
}

inline Matrix<Integer> widen(const IntMatrix& m) {
    Matrix<Integer> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Integer(static_cast<long>(m(i, j)));
    return out;
}

inline std::optional<IntMatrix> narrow(const Matrix<Integer>& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).fits_slong_p())
                return std::nullopt;
            out(i, j) = static_cast<std::int64_t>(m(i, j).get_si());
        }
    return out;
}

/// Multiplies every row by the lcm of its denominators. Returns the integer
/// matrix and the product of all row multipliers.
inline std::pair<Matrix<Integer>, Integer> clear_denominators(const ExactMatrix& m) {
    Matrix<Integer> out(m.rows(), m.cols());
    Integer scale(1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l(1);
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
        scale *= l;
    }
    return {std::move(out), std::move(scale)};
}

/// Runs elimination on the machine-word path first and falls back to
/// arbitrary precision on overflow.
inline echelon<Integer> eliminate(const Matrix<Integer>& m) {
    if (auto small = narrow(m)) {
        try {
            auto e = bareiss(*small);
            return {e.rank, e.sign, Integer(static_cast<long>(e.last_pivot))};
        } catch (const overflow&) {
        }
    }
    Matrix<Integer> work = m;
    return bareiss(work);
}

inline echelon<Integer> eliminate(const IntMatrix& m) {
    IntMatrix work = m;
    try {
        auto e = bareiss(work);
        return {e.rank, e.sign, Integer(static_cast<long>(e.last_pivot))};
    } catch (const overflow&) {
    }
    Matrix<Integer> wide = widen(m);
    return bareiss(wide);
}

} // namespace detail

inline std::size_t rank(const IntMatrix& m) { return detail::eliminate(m).rank; }

inline std::size_t rank(const ExactMatrix& m) {
    return detail::eliminate(detail::clear_denominators(m).first).rank;
}

inline std::size_t nullity(const IntMatrix& m) { return m.cols() - rank(m); }
inline std::size_t nullity(const ExactMatrix& m) { return m.cols() - rank(m); }

inline Integer determinant(const IntMatrix& m) {
    if (!m.square())
        throw shape_error("determinant of a non-square matrix");
    auto e = detail::eliminate(m);
    if (e.rank < m.rows())
        return Integer(0);
    return e.sign * e.last_pivot;
}

inline Rational determinant(const ExactMatrix& m) {
    if (!m.square())
        throw shape_error("determinant of a non-square matrix");
    auto [ints, scale] = detail::clear_denominators(m);
    auto e = detail::eliminate(ints);
    if (e.rank < m.rows())
        return Rational(0);
    return make_rational(e.sign * e.last_pivot, scale);
}

/// Reduced row echelon form over the rationals; returns pivot columns.
inline std::vector<std::size_t> reduce_to_rref(ExactMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0)
            ++p;
        if (p == a.rows())
            continue;
        a.swap_rows(p, r);
        const Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j)
            a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0)
                continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Basis of {x : Mx = 0}. One vector per free column in increasing column
/// order, with that free variable 1 and the other free variables 0.
inline std::vector<RationalVector> null_space_basis(const ExactMatrix& m) {
    ExactMatrix a = m;
    const auto pivots = reduce_to_rref(a);
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto c : pivots)
        is_pivot[c] = 1;
    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        RationalVector x(m.cols());
        x[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = -a(r, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Elementary row operation.
struct RowOp {
    enum class Kind { swap, scale, add };

    Kind kind;
    std::size_t target;
    std::size_t source;
    Rational factor;

    static RowOp swap(std::size_t a, std::size_t b) { return {Kind::swap, a, b, Rational(1)}; }
    /// r_row <- factor * r_row
    static RowOp scale(std::size_t row, Rational factor) { return {Kind::scale, row, row, std::move(factor)}; }
    /// r_target <- r_target + factor * r_source
    static RowOp add(std::size_t target, std::size_t source, Rational factor) {
        return {Kind::add, target, source, std::move(factor)};
    }
};

/// Applies `ops` in order to a copy of `m`.
inline ExactMatrix row_reduce(const ExactMatrix& m, std::span<const RowOp> ops) {
    ExactMatrix a = m;
    for (const auto& op : ops) {
        if (op.target >= a.rows() || op.source >= a.rows())
            throw index_error("row operation index out of range");
        switch (op.kind) {
        case RowOp::Kind::swap:
            a.swap_rows(op.target, op.source);
            break;
        case RowOp::Kind::scale:
            if (op.factor == 0)
                throw degenerate_operation_error("row scaled by zero");
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(op.target, j) *= op.factor;
            break;
        case RowOp::Kind::add:
            if (op.target == op.source)
                throw degenerate_operation_error("row added to itself");
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(op.target, j) += op.factor * a(op.source, j);
            break;
        }
    }
    return a;
}

} // namespace distrank
