#pragma once

#include "distrank/error.hpp"
#include "distrank/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace distrank {

/// Dense row-major matrix with at least one row and one column.
template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(checked_size(rows, cols), fill) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init)
        : rows_(init.size()), cols_(init.size() == 0 ? 0 : init.begin()->size()) {
        data_.reserve(checked_size(rows_, cols_));
        for (const auto& r : init) {
            if (r.size() != cols_)
                throw shape_error("ragged matrix initialiser");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    template <class U = T>
    Matrix<U> cast() const {
        Matrix<U> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(i, j) = U((*this)(i, j));
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    static std::size_t checked_size(std::size_t rows, std::size_t cols) {
        if (rows == 0 || cols == 0)
            throw shape_error("matrix dimensions must be positive");
        return rows * cols;
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;
using IntMatrix = Matrix<std::int64_t>;
using RationalVector = std::vector<Rational>;

inline ExactMatrix to_exact(const IntMatrix& m) {
    ExactMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Rational(static_cast<long>(m(i, j)));
    return out;
}

inline RationalVector multiply(const ExactMatrix& m, const RationalVector& x) {
    if (x.size() != m.cols())
        throw shape_error("vector length does not match matrix columns");
    RationalVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i] += m(i, j) * x[j];
    return out;
}

/// Text form: `<rows> <cols>` then one line per row of space-separated
/// rationals.
inline void write_matrix(std::ostream& os, const ExactMatrix& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j != 0)
                os << ' ';
            os << to_string(m(i, j));
        }
        os << '\n';
    }
}

inline std::string format_matrix(const ExactMatrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

inline ExactMatrix read_matrix(std::istream& is) {
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols) || rows == 0 || cols == 0)
        throw parse_error("bad matrix header", 1, 0);
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::string tok;
            if (!(is >> tok))
                throw parse_error("matrix ended early", i + 2, 0);
            try {
                m(i, j) = parse_rational(tok);
            } catch (const parse_error& e) {
                throw parse_error(e.what(), i + 2, 0);
            }
        }
    return m;
}

} // namespace distrank
