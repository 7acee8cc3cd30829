#include "quiverinv/semi_invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "quiverinv/errors.hpp"
#include "quiverinv/generic_rep.hpp"
#include "quiverinv/linalg.hpp"
#include "quiverinv/partitions.hpp"

namespace quiverinv {

namespace {

struct ArrowEnds {
    std::size_t tail, head;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw BudgetError("semi-invariant dimension exceeds the 64-bit range");
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw BudgetError("semi-invariant dimension exceeds the 64-bit range");
    return r;
}

Partition shifted(const Partition &p, int rows, int by) {
    std::vector<int> v(rows);
    for (int r = 0; r < rows; ++r)
        v[r] = p[r] + by;
    return Partition(v);
}

class SICounter {
  public:
    SICounter(std::size_t n, std::vector<ArrowEnds> arrows, const DimVector &d, const Weight &theta,
              std::vector<std::size_t> order, std::uint64_t budget)
        : arrows_(std::move(arrows)), d_(d), theta_(theta), order_(std::move(order)), budget_(budget),
          in_(n), out_(n), lam_(arrows_.size()) {
        for (std::size_t a = 0; a < arrows_.size(); ++a) {
            out_[arrows_[a].tail].push_back(a);
            in_[arrows_[a].head].push_back(a);
        }
    }

    std::uint64_t run() { return visit(0); }

  private:
    int rows_of(std::size_t a) const {
        return static_cast<int>(std::min(d_[arrows_[a].tail], d_[arrows_[a].head]));
    }

    void tick() {
        if (++nodes_ > budget_)
            throw BudgetError("si_dim: partition-tuple search exceeded budget " + std::to_string(budget_));
    }

    std::uint64_t vertex_factor(std::size_t v) {
        std::vector<Partition> ins, outs;
        for (auto a : in_[v])
            ins.push_back(lam_[a]);
        for (auto a : out_[v])
            outs.push_back(lam_[a]);
        std::sort(ins.begin(), ins.end());
        std::sort(outs.begin(), outs.end());
        const int n = static_cast<int>(d_[v]);
        const auto t = theta_[v];
        auto key = std::make_tuple(ins, outs, n, t);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;

        const auto A = schur_product(outs, n);
        const auto B = schur_product(ins, n);
        std::uint64_t m = 0;
        const auto &[small, large] = t >= 0 ? std::tie(B, A) : std::tie(A, B);
        const int shift = static_cast<int>(t >= 0 ? t : -t);
        for (const auto &[kappa, c] : small) {
            auto hit = large.find(shifted(kappa, n, shift));
            if (hit != large.end())
                m = checked_add(m, checked_mul(c, hit->second));
        }
        cache_.emplace(std::move(key), m);
        return m;
    }

    std::uint64_t visit(std::size_t k) {
        if (k == order_.size())
            return 1;
        const std::size_t v = order_[k];
        std::int64_t total = theta_[v] * d_[v];
        for (auto a : in_[v])
            total += lam_[a].size();
        if (total < 0)
            return 0;
        const auto &outs = out_[v];
        if (outs.empty()) {
            if (total != 0)
                return 0;
            const auto m = vertex_factor(v);
            return m == 0 ? 0 : checked_mul(m, visit(k + 1));
        }
        std::uint64_t sum = 0;
        std::function<void(std::size_t, int)> choose = [&](std::size_t j, int left) {
            if (j + 1 == outs.size()) {
                // the last arrow takes the rest
                for (const auto &p : partitions_of(left, rows_of(outs[j]))) {
                    tick();
                    lam_[outs[j]] = p;
                    const auto m = vertex_factor(v);
                    if (m != 0)
                        sum = checked_add(sum, checked_mul(m, visit(k + 1)));
                }
                lam_[outs[j]] = Partition();
                return;
            }
            for (int s = 0; s <= left; ++s)
                for (const auto &p : partitions_of(s, rows_of(outs[j]))) {
                    tick();
                    lam_[outs[j]] = p;
                    choose(j + 1, left - s);
                }
            lam_[outs[j]] = Partition();
        };
        choose(0, static_cast<int>(total));
        return sum;
    }

    std::vector<ArrowEnds> arrows_;
    const DimVector &d_;
    const Weight &theta_;
    std::vector<std::size_t> order_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<std::size_t>> in_, out_;
    std::vector<Partition> lam_;
    std::map<std::tuple<std::vector<Partition>, std::vector<Partition>, int, std::int64_t>, std::uint64_t> cache_;
};

std::uint64_t si_dim_arrows(std::size_t n, const std::vector<ArrowEnds> &arrows, const std::vector<std::size_t> &order,
                            const DimVector &d, const Weight &theta, std::uint64_t budget) {
    require_dimension(d, n);
    if (theta.size() != n)
        throw InputError("weight has " + std::to_string(theta.size()) + " entries, expected " + std::to_string(n));
    if (theta_of(theta, d) != 0)
        return 0;
    return SICounter(n, arrows, d, theta, order, budget).run();
}

} // namespace

std::uint64_t si_dim(const Quiver &q, const DimVector &d, const Weight &theta, std::uint64_t budget) {
    if (!q.acyclic())
        throw PreconditionError("si_dim requires an acyclic quiver");
    std::vector<ArrowEnds> arrows;
    for (auto &a : q.arrows())
        arrows.push_back({a.tail, a.head});
    return si_dim_arrows(q.num_vertices(), arrows, q.topological_order(), d, theta, budget);
}

std::uint64_t si_dim(const EulerMatrix &E, const DimVector &d, const Weight &theta, std::uint64_t budget) {
    require_acyclic_path_algebra(E);
    const std::size_t n = E.size();
    std::vector<ArrowEnds> arrows;
    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                for (std::int64_t k = 0; k < -E(i, j); ++k) {
                    arrows.push_back({i, j});
                    ++indeg[j];
                }
    std::vector<std::size_t> order;
    std::vector<bool> done(n, false);
    while (order.size() < n)
        for (std::size_t v = 0; v < n; ++v)
            if (!done[v] && indeg[v] == 0) {
                done[v] = true;
                order.push_back(v);
                for (auto &a : arrows)
                    if (a.tail == v)
                        --indeg[a.head];
                break;
            }
    return si_dim_arrows(n, arrows, order, d, theta, budget);
}

CircValue circ(const Quiver &q, const DimVector &d, const DimVector &e, std::uint64_t budget) {
    EulerMatrix E(q);
    require_dimension(d, q.num_vertices());
    require_dimension(e, q.num_vertices());
    CircValue c;
    c.via_e = si_dim(q, e, left_weight(E, d), budget);
    c.via_d = si_dim(q, d, right_weight(E, e), budget);
    if (c.via_e != c.via_d)
        throw InvariantError("reciprocity failed for d=" + d.str() + ", e=" + e.str() + ": " +
                             std::to_string(c.via_e) + " vs " + std::to_string(c.via_d));
    c.value = c.via_e;
    return c;
}

LogConcavity log_concavity_check(const std::vector<std::uint64_t> &values) {
    for (std::size_t n = 1; n + 1 < values.size(); ++n) {
        const unsigned __int128 lhs = static_cast<unsigned __int128>(values[n + 1]) * values[n - 1];
        const unsigned __int128 rhs = static_cast<unsigned __int128>(values[n]) * values[n];
        if (lhs > rhs)
            return {false, n};
    }
    return {true, 0};
}

std::string to_string(FitStatus s) {
    switch (s) {
    case FitStatus::ok:
        return "ok";
    case FitStatus::violated:
        return "violated";
    case FitStatus::inconclusive:
        return "inconclusive";
    }
    return "?";
}

PolynomialFit fit_polynomial(const std::vector<std::uint64_t> &values) {
    PolynomialFit fit;
    if (values.empty())
        return fit;
    if (values[0] != 1) {
        fit.status = FitStatus::violated;
        fit.index = 0;
        return fit;
    }
    // forward differences; degree k once row k+1 vanishes identically
    std::vector<BigInt> row(values.begin(), values.end());
    const int count = static_cast<int>(values.size());
    for (int k = 0; k + 1 < count; ++k) {
        std::vector<BigInt> next(row.size() - 1);
        for (std::size_t j = 0; j + 1 < row.size(); ++j)
            next[j] = row[j + 1] - row[j];
        const bool vanishes = std::all_of(next.begin(), next.end(), [](const BigInt &x) { return x == 0; });
        if (vanishes) {
            // row k+1 has count-k-1 entries; two of them confirm the degree
            if (count - k - 1 >= 2) {
                fit.status = FitStatus::ok;
                fit.degree = k;
            }
            return fit;
        }
        row = std::move(next);
    }
    return fit;
}

FitStatus PolynomialityReport::status() const {
    if (first_fit.status == FitStatus::violated || second_fit.status == FitStatus::violated)
        return FitStatus::violated;
    if (first_fit.status == FitStatus::ok && second_fit.status == FitStatus::ok)
        return FitStatus::ok;
    return FitStatus::inconclusive;
}

PolynomialityReport polynomiality_check(const Quiver &q, const DimVector &d, const DimVector &e, int n_max,
                                        std::uint64_t budget) {
    if (n_max < 0)
        throw InputError("n_max must be non-negative");
    if (circ(q, d, e, budget).value == 0)
        throw PreconditionError("polynomiality needs d o e != 0");
    PolynomialityReport rep;
    for (int n = 0; n <= n_max; ++n) {
        rep.first.push_back(circ(q, n * d, e, budget).value);
        rep.second.push_back(circ(q, d, n * e, budget).value);
    }
    rep.first_fit = fit_polynomial(rep.first);
    rep.second_fit = fit_polynomial(rep.second);
    return rep;
}

SIWeightTable si_table(const Quiver &q, const DimVector &d, const Weight &theta, int n_max, std::uint64_t budget) {
    if (n_max < 0)
        throw InputError("n_max must be non-negative");
    SIWeightTable t{theta, {}};
    for (int n = 0; n <= n_max; ++n)
        t.dims.push_back(si_dim(q, d, n * theta, budget));
    return t;
}

WildSearchResult wild_violation_search(const Quiver &q, const WildSearchBounds &bounds) {
    if (!q.acyclic() || !q.connected())
        throw PreconditionError("wild_violation_search needs a connected acyclic quiver");
    if (classify_path_algebra(q).type != RepresentationType::wild)
        throw PreconditionError("wild_violation_search needs a wild quiver");
    WildSearchResult res;
    if (bounds.budget == 0 || bounds.max_n <= 0 || bounds.max_entry <= 0) {
        res.frontier = "nothing examined";
        return res;
    }
    EulerMatrix E(q);
    const std::size_t n = q.num_vertices();
    const RatMatrix Et_inv = inverse(to_rational(E.matrix().transposed()));

    std::vector<DimVector> roots;
    for_each_in_box(DimVector(n, bounds.max_entry), [&](const DimVector &v) {
        if (!v.is_zero() && tits_form(E, v) < 0)
            roots.push_back(v);
    });
    std::sort(roots.begin(), roots.end(), [](const DimVector &a, const DimVector &b) {
        return a.total() != b.total() ? a.total() < b.total() : a < b;
    });

    for (const auto &dp : roots) {
        if (!is_schur_root(E, dp))
            continue;
        const auto cw = canonical_weights(E, dp);
        // d'' = E^{-T} theta_{d'}
        DimVector dd(n);
        bool integral = true;
        for (std::size_t i = 0; i < n; ++i) {
            Rational x = 0;
            for (std::size_t j = 0; j < n; ++j)
                x += Et_inv(i, j) * cw.theta[j];
            if (denominator(x) != 1) {
                integral = false;
                break;
            }
            dd[i] = static_cast<std::int64_t>(numerator(x));
        }
        if (!integral || !dd.is_nonnegative() || dd.is_zero())
            continue;
        const Weight theta = cw.right;
        for (int N = 1; N <= bounds.max_n; ++N) {
            res.frontier = "d'=" + dp.str() + ", N=" + std::to_string(N);
            std::uint64_t s1, s2;
            try {
                // (N d'') o (m d') = dim SI(Q, m d')_{N theta_{d'}} = dim SI(Q, N d'')_{m theta}
                s1 = si_dim(q, dp, N * cw.theta, bounds.budget);
                s2 = si_dim(q, 2 * dp, N * cw.theta, bounds.budget);
            } catch (const BudgetError &) {
                return res;
            }
            if (static_cast<unsigned __int128>(s2) > static_cast<unsigned __int128>(s1) * s1) {
                res.hit = WildViolation{dp, dd, theta, N, N * dd, s1, s2};
                res.frontier.clear();
                return res;
            }
        }
    }
    return res;
}

nlohmann::json to_json(const WildViolation &v) {
    return {{"d_prime", v.d_prime.values()}, {"d_double_prime", v.d_double.values()},
            {"theta", v.theta.values()},     {"n", v.n},
            {"d", v.d.values()},             {"dim_si_theta", v.dim_theta},
            {"dim_si_2theta", v.dim_2theta}};
}

} // namespace quiverinv
