#include "quiverinv/linalg.hpp"

#include <numeric>
#include <utility>

#include "quiverinv/errors.hpp"

namespace quiverinv {

std::string to_string(const Rational &r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string &s) {
    auto parse_int = [&](const std::string &t) {
        std::size_t i = 0;
        if (!t.empty() && (t[0] == '-' || t[0] == '+'))
            i = 1;
        if (i == t.size())
            throw InputError("not a rational number: '" + s + "'");
        for (std::size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9')
                throw InputError("not a rational number: '" + s + "'");
        return BigInt(t[0] == '+' ? t.substr(1) : t);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0)
        throw InputError("zero denominator in '" + s + "'");
    return Rational(num, den);
}

RatMatrix to_rational(const IntMatrix &m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

namespace {

// Row-reduces m in place to reduced echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix &m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(row, j));
        Rational inv = Rational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0)
                continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(RatMatrix m) {
    // Forward elimination only; cheaper than full rref.
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(row, j));
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            if (m(i, col) == 0)
                continue;
            Rational f = m(i, col) / m(row, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(row, j);
        }
        ++row;
    }
    return row;
}

std::size_t rank(const IntMatrix &m) { return rank(to_rational(m)); }

std::vector<std::vector<Rational>> kernel(RatMatrix m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(RatMatrix m) {
    if (m.rows() != m.cols())
        throw InputError("determinant of a non-square matrix");
    Rational det = 1;
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(p, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0)
                continue;
            Rational f = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j)
                m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

RatMatrix inverse(const RatMatrix &m) {
    const std::size_t n = m.rows();
    if (n != m.cols())
        throw InputError("inverse of a non-square matrix");
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw InvariantError("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

std::vector<std::int64_t> primitive_integer(const std::vector<Rational> &v) {
    BigInt lcm = 1;
    for (const auto &x : v) {
        BigInt d = boost::multiprecision::denominator(x);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    std::vector<BigInt> ints;
    BigInt g = 0;
    for (const auto &x : v) {
        BigInt y = boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x));
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(y));
        ints.push_back(y);
    }
    std::vector<std::int64_t> out;
    for (auto &y : ints)
        out.push_back(g == 0 ? 0 : static_cast<std::int64_t>(y / g));
    return out;
}

} // namespace quiverinv
