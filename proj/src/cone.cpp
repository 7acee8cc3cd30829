#include "quiverinv/cone.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "quiverinv/errors.hpp"
#include "quiverinv/linalg.hpp"

namespace quiverinv {

namespace {

using Vec = std::vector<std::int64_t>;

std::int64_t checked(__int128 x) {
    if (x > INT64_MAX || x < INT64_MIN)
        throw InvariantError("integer overflow in cone computation");
    return static_cast<std::int64_t>(x);
}

__int128 dot(const Vec &a, const Vec &b) {
    __int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += static_cast<__int128>(a[i]) * b[i];
    return s;
}

void normalize(Vec &v) {
    std::int64_t g = 0;
    for (auto x : v)
        g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (auto &x : v)
            x /= g;
}

// alpha * u + beta * v, normalized
Vec combine(__int128 alpha, const Vec &u, __int128 beta, const Vec &v) {
    Vec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        r[i] = checked(alpha * u[i] + beta * v[i]);
    normalize(r);
    return r;
}

int sign(__int128 x) { return (x > 0) - (x < 0); }

struct Ray {
    Vec v;
    std::vector<bool> tight; // per processed constraint
};

std::size_t rank_of(const std::vector<Vec> &rows, std::size_t n) {
    if (rows.empty())
        return 0;
    IntMatrix m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = rows[i][j];
    return rank(m);
}

Functional canonical_functional(Functional f) {
    normalize(f);
    return f;
}

} // namespace

WeightCone::WeightCone(std::size_t ambient_dim, std::vector<Functional> equalities,
                       std::vector<Functional> inequalities)
    : n_(ambient_dim) {
    auto clean = [&](std::vector<Functional> fs) {
        std::vector<Functional> out;
        std::set<Functional> seen;
        for (auto &f : fs) {
            if (f.size() != n_)
                throw InputError("functional has wrong length");
            auto g = canonical_functional(f);
            if (std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x == 0; }))
                continue;
            if (seen.insert(g).second)
                out.push_back(g);
        }
        return out;
    };
    eqs_ = clean(std::move(equalities));
    ineqs_ = clean(std::move(inequalities));
    compute();
}

void WeightCone::compute() {
    // Double description with an explicit lineality basis. Each constraint is
    // a.x <= 0 (inequality) or a.x = 0 (equality).
    std::vector<Vec> lin;
    for (std::size_t i = 0; i < n_; ++i) {
        Vec e(n_, 0);
        e[i] = 1;
        lin.push_back(e);
    }
    std::vector<Ray> rays;
    std::size_t processed = 0;

    auto add_constraint = [&](const Vec &a, bool equality) {
        auto pivot = std::find_if(lin.begin(), lin.end(), [&](const Vec &l) { return dot(a, l) != 0; });
        if (pivot != lin.end()) {
            Vec l = *pivot;
            lin.erase(pivot);
            const __int128 al = dot(a, l);
            for (auto &other : lin) {
                const __int128 ao = dot(a, other);
                if (ao != 0)
                    other = combine(al, other, -ao, l);
            }
            for (auto &r : rays) {
                const __int128 ar = dot(a, r.v);
                if (ar != 0)
                    r.v = combine(sign(al) * al, r.v, -sign(al) * ar, l);
                r.tight.push_back(true);
            }
            if (!equality) {
                Vec dir = l;
                if (al > 0)
                    for (auto &x : dir)
                        x = -x;
                std::vector<bool> tight(processed, true);
                tight.push_back(false);
                rays.push_back({dir, std::move(tight)});
            }
            ++processed;
            return;
        }

        std::vector<Ray> pos, neg, zero;
        for (auto &r : rays) {
            const auto s = sign(dot(a, r.v));
            (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
        }
        std::vector<Ray> next;
        for (auto &r : zero) {
            next.push_back(r);
            next.back().tight.push_back(true);
        }
        if (!equality)
            for (auto &r : neg) {
                next.push_back(r);
                next.back().tight.push_back(false);
            }
        // combinatorial adjacency test on the tight sets of processed constraints
        for (auto &p : pos)
            for (auto &q : neg) {
                std::vector<bool> common(processed);
                for (std::size_t k = 0; k < processed; ++k)
                    common[k] = p.tight[k] && q.tight[k];
                bool adjacent = true;
                for (auto &r : rays) {
                    if (r.v == p.v || r.v == q.v)
                        continue;
                    bool covers = true;
                    for (std::size_t k = 0; k < processed && covers; ++k)
                        if (common[k] && !r.tight[k])
                            covers = false;
                    if (covers) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent)
                    continue;
                const __int128 ap = dot(a, p.v), aq = dot(a, q.v);
                Ray nr{combine(ap, q.v, -aq, p.v), common};
                nr.tight.push_back(true);
                next.push_back(std::move(nr));
            }
        rays = std::move(next);
        ++processed;
    };

    for (auto &e : eqs_)
        add_constraint(e, true);
    for (auto &f : ineqs_)
        add_constraint(f, false);

    lineality_.clear();
    for (auto &l : lin)
        lineality_.emplace_back(l);
    std::sort(lineality_.begin(), lineality_.end());

    std::set<Vec> uniq;
    for (auto &r : rays)
        uniq.insert(r.v);
    rays_.clear();
    for (auto &r : uniq)
        rays_.emplace_back(r);

    std::vector<Vec> gens(lin.begin(), lin.end());
    for (auto &r : rays_)
        gens.push_back(r.values());
    dim_ = rank_of(gens, n_);

    // Facets: faces F_k = {f_k = 0} of dimension dim - 1, grouped by ray set.
    facets_.clear();
    if (dim_ == 0)
        return;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_rayset;
    std::vector<std::vector<std::size_t>> tight_rays(ineqs_.size());
    for (std::size_t k = 0; k < ineqs_.size(); ++k) {
        for (std::size_t r = 0; r < rays_.size(); ++r)
            if (dot(ineqs_[k], rays_[r].values()) == 0)
                tight_rays[k].push_back(r);
        if (tight_rays[k].size() == rays_.size())
            continue; // implicit equality
        std::vector<Vec> fg(lin.begin(), lin.end());
        for (auto r : tight_rays[k])
            fg.push_back(rays_[r].values());
        if (rank_of(fg, n_) + 1 == dim_)
            by_rayset[tight_rays[k]].push_back(k);
    }
    for (auto &[rayset, _] : by_rayset) {
        Facet f;
        f.interior_point = Weight(n_);
        for (auto r : rayset) {
            f.rays.push_back(rays_[r]);
            f.interior_point += rays_[r];
        }
        for (std::size_t k = 0; k < ineqs_.size(); ++k)
            if (std::includes(tight_rays[k].begin(), tight_rays[k].end(), rayset.begin(), rayset.end()))
                f.defining.push_back(k);
        facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end(), [](const Facet &a, const Facet &b) { return a.defining < b.defining; });
}

bool WeightCone::contains(const Weight &theta) const {
    if (theta.size() != n_)
        throw InputError("weight has wrong length");
    for (auto &e : eqs_)
        if (dot(e, theta.values()) != 0)
            return false;
    for (auto &f : ineqs_)
        if (dot(f, theta.values()) > 0)
            return false;
    return true;
}

bool WeightCone::contains(const WeightCone &other) const {
    if (other.n_ != n_)
        return false;
    for (auto &r : other.rays_)
        if (!contains(r))
            return false;
    for (auto &l : other.lineality_)
        if (!contains(l) || !contains(-l))
            return false;
    return true;
}

WeightCone WeightCone::with_equalities(const std::vector<Functional> &extra) const {
    auto eqs = eqs_;
    eqs.insert(eqs.end(), extra.begin(), extra.end());
    return WeightCone(n_, eqs, ineqs_);
}

nlohmann::json WeightCone::to_json() const {
    nlohmann::json facets = nlohmann::json::array();
    for (auto &f : facets_) {
        nlohmann::json defs = nlohmann::json::array();
        for (auto k : f.defining)
            defs.push_back(ineqs_[k]);
        nlohmann::json rays = nlohmann::json::array();
        for (auto &r : f.rays)
            rays.push_back(r.values());
        facets.push_back({{"defining", defs}, {"rays", rays}, {"interior_point", f.interior_point.values()}});
    }
    nlohmann::json rays = nlohmann::json::array(), lin = nlohmann::json::array();
    for (auto &r : rays_)
        rays.push_back(r.values());
    for (auto &l : lineality_)
        lin.push_back(l.values());
    return {{"dimension", dim_},       {"equalities", eqs_}, {"inequalities", ineqs_},
            {"rays", rays},            {"lineality", lin},   {"facets", facets}};
}

} // namespace quiverinv
