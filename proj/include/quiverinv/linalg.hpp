#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quiverinv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" for integers.
std::string to_string(const Rational &r);
/// Accepts "p", "-p", "p/q". Throws InputError otherwise or on zero denominator.
Rational parse_rational(const std::string &s);

/// Dense row-major matrix over a ring T.
template <class T> class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T &operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix &x, const Matrix &y) {
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T &xik = x(i, k);
                if (xik == T(0))
                    continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    r(i, j) += xik * y(k, j);
            }
        return r;
    }
    friend bool operator==(const Matrix &, const Matrix &) = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<std::int64_t>;

RatMatrix to_rational(const IntMatrix &m);

/// Rank over Q (Gaussian elimination, exact).
std::size_t rank(RatMatrix m);
std::size_t rank(const IntMatrix &m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column, in
/// reduced-echelon normal form.
std::vector<std::vector<Rational>> kernel(RatMatrix m);

/// Determinant over Q.
Rational determinant(RatMatrix m);

/// Inverse over Q; throws InvariantError if singular.
RatMatrix inverse(const RatMatrix &m);

/// Scales a rational vector to the primitive integer vector on the same ray.
std::vector<std::int64_t> primitive_integer(const std::vector<Rational> &v);

} // namespace quiverinv
