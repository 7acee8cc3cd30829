#include "quiverinv/partitions.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <tuple>

#include "quiverinv/errors.hpp"

namespace quiverinv {

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw InputError("partition parts must be non-negative");
        if (i && parts[i] > parts[i - 1])
            throw InputError("partition parts must be weakly decreasing");
    }
    parts_ = std::move(parts);
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions_of(int n, int max_rows) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (max_rows >= 0 && static_cast<int>(cur.size()) >= max_rows)
            return;
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0)
        rec(n, n);
    return out;
}

std::uint64_t lr_coefficient(const Partition &lambda, const Partition &mu, const Partition &nu) {
    if (lambda.size() + mu.size() != nu.size())
        return 0;
    const int rows = nu.length();
    for (int r = 0; r < std::max(lambda.length(), rows); ++r)
        if (lambda[r] > nu[r])
            return 0;
    if (mu.empty())
        return lambda == nu ? 1 : 0;

    // Cells of nu/lambda in reading order: rows top to bottom, right to left.
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = nu[r] - 1; c >= lambda[r]; --c)
            cells.push_back({r, c});

    const int labels = mu.length();
    std::vector<std::vector<int>> tab(rows);
    for (int r = 0; r < rows; ++r)
        tab[r].assign(nu[r], 0); // 0 = belongs to lambda
    std::vector<int> used(labels + 1, 0);
    std::uint64_t count = 0;

    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[k];
        for (int v = 1; v <= labels; ++v) {
            if (used[v] >= mu[v - 1])
                continue;
            // lattice word: reading v needs more (v-1)'s already read
            if (v > 1 && used[v] + 1 > used[v - 1])
                continue;
            // rows weakly increase left to right; the cell to the right was placed already
            if (c + 1 < nu[r] && tab[r][c + 1] != 0 && v > tab[r][c + 1])
                continue;
            // columns strictly increase downwards
            if (r > 0 && c < nu[r - 1] && tab[r - 1][c] != 0 && v <= tab[r - 1][c])
                continue;
            tab[r][c] = v;
            ++used[v];
            rec(k + 1);
            --used[v];
            tab[r][c] = 0;
        }
    };
    rec(0);
    return count;
}

namespace {

std::atomic<bool> g_cache_enabled{true};
std::mutex g_cache_mu;
std::map<std::tuple<Partition, Partition, int>, SchurExpansion> g_cache;

SchurExpansion compute_product(const Partition &lambda, const Partition &mu, int max_rows) {
    SchurExpansion out;
    const int labels = mu.length();
    const int row_cap =
        max_rows >= 0 ? max_rows : lambda.length() + mu.length(); // an LR filling never needs more rows
    if (max_rows >= 0 && lambda.length() > max_rows)
        return out;

    std::vector<int> shape(row_cap, 0);
    for (int r = 0; r < lambda.length(); ++r)
        shape[r] = lambda[r];
    // count[k][r]: number of label k+1 placed in row r
    std::vector<std::vector<int>> count(labels, std::vector<int>(row_cap, 0));

    std::function<void(int)> place_label;
    std::function<void(int, int, int, const std::vector<int> &)> place_row;

    place_label = [&](int k) {
        if (k == labels) {
            ++out[Partition(shape)];
            return;
        }
        const std::vector<int> before = shape;
        place_row(k, 0, mu[k], before);
    };

    // Distribute `left` copies of label k+1 over rows r, r+1, ...
    place_row = [&](int k, int r, int left, const std::vector<int> &before) {
        if (left == 0) {
            place_label(k + 1);
            return;
        }
        if (r >= row_cap)
            return;
        // horizontal strip: stay weakly below the row above as it was before this label
        const int limit = r == 0 ? left : std::min(left, before[r - 1] - shape[r]);
        // lattice: cumulative k+1's through row r <= cumulative k's strictly above row r
        int max_lattice = limit;
        if (k > 0) {
            int have = 0, prev = 0;
            for (int s = 0; s < r; ++s) {
                have += count[k][s];
                prev += count[k - 1][s];
            }
            max_lattice = std::min(limit, prev - have);
        }
        for (int x = std::max(0, max_lattice); x >= 0; --x) {
            if (x > limit)
                continue;
            shape[r] += x;
            count[k][r] = x;
            place_row(k, r + 1, left - x, before);
            count[k][r] = 0;
            shape[r] -= x;
        }
    };

    place_label(0);
    return out;
}

} // namespace

SchurExpansion lr_product(const Partition &lambda, const Partition &mu, int max_rows) {
    // c^nu_{lambda mu} is symmetric; put the shorter partition in the label role
    const bool swap = mu.size() > lambda.size();
    const Partition &a = swap ? mu : lambda;
    const Partition &b = swap ? lambda : mu;
    const auto key = std::make_tuple(a, b, max_rows);
    const bool cache = g_cache_enabled.load();
    if (cache) {
        std::lock_guard lock(g_cache_mu);
        auto it = g_cache.find(key);
        if (it != g_cache.end())
            return it->second;
    }
    auto out = compute_product(a, b, max_rows);
    if (cache) {
        std::lock_guard lock(g_cache_mu);
        g_cache.emplace(key, out);
    }
    return out;
}

SchurExpansion schur_product(const std::vector<Partition> &factors, int max_rows) {
    SchurExpansion acc{{Partition(), 1}};
    for (const auto &f : factors) {
        if (f.empty())
            continue;
        if (max_rows >= 0 && f.length() > max_rows)
            return {};
        SchurExpansion next;
        for (const auto &[nu, m] : acc)
            for (const auto &[rho, c] : lr_product(nu, f, max_rows)) {
                std::uint64_t prod;
                if (__builtin_mul_overflow(m, c, &prod) || __builtin_add_overflow(next[rho], prod, &next[rho]))
                    throw BudgetError("Schur product multiplicity overflows 64 bits");
            }
        acc = std::move(next);
    }
    return acc;
}

void set_lr_cache(bool enabled) { g_cache_enabled = enabled; }

void clear_lr_cache() {
    std::lock_guard lock(g_cache_mu);
    g_cache.clear();
}

} // namespace quiverinv
