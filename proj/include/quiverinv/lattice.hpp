#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "quiverinv/errors.hpp"

namespace quiverinv {

/// Integer vector indexed by the canonical vertex order of a quiver.
///
/// The tag keeps dimension vectors and weights apart at the type level; both
/// live in the same lattice Z^{Q_0}. Entries are not forced non-negative here
/// because Coxeter transforms and differences leave the positive cone;
/// operations that need dimension vectors call require_dimension().
template <class Tag> class LatticeVector {
  public:
    using value_type = std::int64_t;

    LatticeVector() = default;
    explicit LatticeVector(std::size_t n, value_type fill = 0) : v_(n, fill) {}
    explicit LatticeVector(std::vector<value_type> v) : v_(std::move(v)) {}
    LatticeVector(std::initializer_list<value_type> il) : v_(il) {}

    static LatticeVector unit(std::size_t n, std::size_t i) {
        LatticeVector r(n);
        r.v_.at(i) = 1;
        return r;
    }

    std::size_t size() const { return v_.size(); }
    value_type operator[](std::size_t i) const { return v_[i]; }
    value_type &operator[](std::size_t i) { return v_[i]; }
    const std::vector<value_type> &values() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    value_type total() const { return std::accumulate(v_.begin(), v_.end(), value_type{0}); }
    bool is_zero() const {
        return std::all_of(v_.begin(), v_.end(), [](value_type x) { return x == 0; });
    }
    bool is_nonnegative() const {
        return std::all_of(v_.begin(), v_.end(), [](value_type x) { return x >= 0; });
    }
    /// gcd of the absolute values of the entries (0 for the zero vector).
    value_type content() const {
        value_type g = 0;
        for (auto x : v_)
            g = std::gcd(g, x < 0 ? -x : x);
        return g;
    }
    /// Componentwise a <= b.
    bool leq(const LatticeVector &o) const {
        check_same(o);
        for (std::size_t i = 0; i < v_.size(); ++i)
            if (v_[i] > o.v_[i])
                return false;
        return true;
    }

    LatticeVector &operator+=(const LatticeVector &o) {
        check_same(o);
        for (std::size_t i = 0; i < v_.size(); ++i)
            v_[i] += o.v_[i];
        return *this;
    }
    LatticeVector &operator-=(const LatticeVector &o) {
        check_same(o);
        for (std::size_t i = 0; i < v_.size(); ++i)
            v_[i] -= o.v_[i];
        return *this;
    }
    LatticeVector &operator*=(value_type s) {
        for (auto &x : v_)
            x *= s;
        return *this;
    }
    friend LatticeVector operator+(LatticeVector a, const LatticeVector &b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector &b) { return a -= b; }
    friend LatticeVector operator-(LatticeVector a) { return a *= -1; }
    friend LatticeVector operator*(value_type s, LatticeVector a) { return a *= s; }
    friend LatticeVector operator*(LatticeVector a, value_type s) { return a *= s; }
    LatticeVector divided_by(value_type s) const {
        LatticeVector r(*this);
        for (auto &x : r.v_)
            x /= s;
        return r;
    }

    friend bool operator==(const LatticeVector &, const LatticeVector &) = default;
    /// Lexicographic order.
    friend auto operator<=>(const LatticeVector &a, const LatticeVector &b) { return a.v_ <=> b.v_; }

    /// "(a,b,c)"
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(v_[i]);
        }
        return s + ")";
    }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto x : v_)
            h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
        return h;
    }

  private:
    void check_same(const LatticeVector &o) const {
        if (o.v_.size() != v_.size())
            throw InputError("vector length mismatch: " + std::to_string(v_.size()) + " vs " +
                             std::to_string(o.v_.size()));
    }

    std::vector<value_type> v_;
};

struct DimTag;
struct WeightTag;
using DimVector = LatticeVector<DimTag>;
using Weight = LatticeVector<WeightTag>;

inline Weight as_weight(const DimVector &d) { return Weight(d.values()); }
inline DimVector as_dim(const Weight &w) { return DimVector(w.values()); }

/// Throws InputError unless d has length n and non-negative entries.
inline void require_dimension(const DimVector &d, std::size_t n, const char *what = "dimension vector") {
    if (d.size() != n)
        throw InputError(std::string(what) + " has " + std::to_string(d.size()) + " entries, expected " +
                         std::to_string(n));
    if (!d.is_nonnegative())
        throw InputError(std::string(what) + " must be non-negative: " + d.str());
}

/// Π (d(i)+1), saturating at `cap + 1`.
inline std::uint64_t box_size(const DimVector &d, std::uint64_t cap) {
    std::uint64_t p = 1;
    for (auto x : d) {
        p *= static_cast<std::uint64_t>(x + 1);
        if (p > cap)
            return cap + 1;
    }
    return p;
}

/// Calls f(v) for every 0 <= v <= d in lexicographic order.
template <class F> void for_each_in_box(const DimVector &d, F &&f) {
    DimVector v(d.size());
    const std::size_t n = d.size();
    while (true) {
        f(static_cast<const DimVector &>(v));
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (v[i] < d[i]) {
                ++v[i];
                for (std::size_t j = i + 1; j < n; ++j)
                    v[j] = 0;
                goto next;
            }
        }
        return;
    next:;
    }
}

} // namespace quiverinv

template <class Tag> struct std::hash<quiverinv::LatticeVector<Tag>> {
    std::size_t operator()(const quiverinv::LatticeVector<Tag> &v) const noexcept { return v.hash(); }
};
