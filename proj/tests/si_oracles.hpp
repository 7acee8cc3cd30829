#pragma once

// Reference computations for semi-invariant dimensions and LR coefficients
// that share no code with the library's Cauchy / tableau enumeration.

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <vector>

#include "quiverinv/partitions.hpp"
#include "quiverinv/quiver.hpp"

namespace oracle {

using namespace quiverinv;
using BigInt = boost::multiprecision::cpp_int;
using Laurent = std::map<std::vector<int>, BigInt>;

inline BigInt binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < k)
        return 0;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// dim SI(Q,d)_theta as a torus integral: the constant term of
/// x^{-theta} * (Weyl density) * char Sym(+) V_t (x) V_h^*, over prod d(v)!.
/// The Sym character coefficients are counted directly by distributing each
/// source variable's exponent over the arrows leaving it.
inline BigInt weyl_si_dim(const Quiver &q, const DimVector &d, const Weight &theta) {
    const std::size_t n = q.num_vertices();
    std::vector<int> offset(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v)
        offset[v + 1] = offset[v] + static_cast<int>(d[v]);
    const int T = offset[n];

    Laurent weyl{{std::vector<int>(T, 0), 1}};
    BigInt fact = 1;
    for (std::size_t v = 0; v < n; ++v)
        for (int a = 0; a < d[v]; ++a) {
            fact *= (a + 1);
            for (int b = 0; b < d[v]; ++b) {
                if (a == b)
                    continue;
                Laurent next;
                for (const auto &[mono, c] : weyl) {
                    next[mono] += c;
                    auto m2 = mono;
                    m2[offset[v] + a] += 1;
                    m2[offset[v] + b] -= 1;
                    next[m2] -= c;
                }
                weyl.clear();
                for (auto &[m, c] : next)
                    if (c != 0)
                        weyl.emplace(m, c);
            }
        }

    const auto order = q.topological_order();
    std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo;
    std::function<BigInt(std::size_t, std::vector<int>)> count = [&](std::size_t pos, std::vector<int> e) -> BigInt {
        if (pos == order.size()) {
            for (int x : e)
                if (x != 0)
                    return 0;
            return 1;
        }
        auto key = std::make_pair(pos, e);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        const std::size_t v = order[pos];
        // slots: (head variable index, number of parallel arrows)
        std::vector<std::pair<int, std::int64_t>> slots;
        for (std::size_t h = 0; h < n; ++h) {
            const auto k = q.arrow_count(v, h);
            if (k > 0)
                for (int b = 0; b < d[h]; ++b)
                    slots.push_back({offset[h] + b, k});
        }
        BigInt total = 0;
        // distribute variable a of v, slot by slot
        std::function<void(int, std::size_t, int, BigInt, std::vector<int> &)> go =
            [&](int a, std::size_t s, int left, BigInt w, std::vector<int> &cur) {
                if (a == d[v]) {
                    auto rest = cur;
                    for (int x = 0; x < d[v]; ++x)
                        rest[offset[v] + x] = 0; // consumed
                    total += w * count(pos + 1, rest);
                    return;
                }
                if (s == slots.size()) {
                    if (left == 0)
                        go(a + 1, 0, a + 1 < d[v] ? cur[offset[v] + a + 1] : 0, w, cur);
                    return;
                }
                for (int y = 0; y <= left; ++y) {
                    cur[slots[s].first] += y;
                    go(a, s + 1, left - y, w * binom(y + slots[s].second - 1, slots[s].second - 1), cur);
                    cur[slots[s].first] -= y;
                }
            };
        for (int a = 0; a < d[v]; ++a)
            if (e[offset[v] + a] < 0)
                return memo[key] = 0;
        if (d[v] == 0) {
            total = count(pos + 1, e);
        } else {
            auto cur = e;
            go(0, 0, cur[offset[v]], 1, cur);
        }
        return memo[key] = total;
    };

    BigInt sum = 0;
    for (const auto &[mono, c] : weyl) {
        std::vector<int> e(T);
        for (std::size_t v = 0; v < n; ++v)
            for (int a = 0; a < d[v]; ++a)
                e[offset[v] + a] = static_cast<int>(theta[v]) - mono[offset[v] + a];
        sum += c * count(0, e);
    }
    if (sum % fact != 0)
        throw std::logic_error("Weyl integral not divisible by the group order");
    return sum / fact;
}

/// Schur polynomial in k variables by semistandard tableau enumeration.
inline Laurent schur_polynomial(const Partition &p, int k) {
    Laurent out;
    std::vector<std::vector<int>> tab;
    for (int r = 0; r < p.length(); ++r)
        tab.emplace_back(p[r], 0);
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < p.length(); ++r)
        for (int c = 0; c < p[r]; ++c)
            cells.push_back({r, c});
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == cells.size()) {
            std::vector<int> mono(k, 0);
            for (auto &row : tab)
                for (int x : row)
                    ++mono[x - 1];
            out[mono] += 1;
            return;
        }
        auto [r, c] = cells[i];
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, tab[r][c - 1]);
        if (r > 0)
            lo = std::max(lo, tab[r - 1][c] + 1);
        for (int x = lo; x <= k; ++x) {
            tab[r][c] = x;
            fill(i + 1);
        }
    };
    fill(0);
    return out;
}

inline Laurent multiply(const Laurent &a, const Laurent &b) {
    Laurent r;
    for (const auto &[m1, c1] : a)
        for (const auto &[m2, c2] : b) {
            auto m = m1;
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] += m2[i];
            r[m] += c1 * c2;
        }
    return r;
}

/// Expansion of s_lambda s_mu in Schur functions by peeling the dominant
/// monomial, in enough variables that nothing is truncated.
inline std::map<Partition, BigInt> schur_expand(const Partition &l, const Partition &m) {
    const int k = std::max(1, l.length() + m.length());
    Laurent P = multiply(schur_polynomial(l, k), schur_polynomial(m, k));
    std::map<Partition, BigInt> out;
    while (true) {
        for (auto it = P.begin(); it != P.end();)
            it = it->second == 0 ? P.erase(it) : std::next(it);
        if (P.empty())
            break;
        auto top = P.rbegin(); // lexicographically largest exponent is a partition
        const Partition nu(top->first);
        const BigInt c = top->second;
        out[nu] = c;
        for (const auto &[mono, x] : schur_polynomial(nu, k))
            P[mono] -= c * x;
    }
    return out;
}

} // namespace oracle
