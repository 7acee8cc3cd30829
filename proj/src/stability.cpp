#include "quiverinv/stability.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "quiverinv/errors.hpp"

namespace quiverinv {

namespace {

void check_weight(const EulerMatrix &E, const Weight &theta) {
    if (theta.size() != E.size())
        throw InputError("weight has " + std::to_string(theta.size()) + " entries, expected " +
                         std::to_string(E.size()));
}

std::optional<DimVector> first_stable_null_sub(const EulerMatrix &E, const DimVector &d, const Weight &theta) {
    for (const auto &sub : generic_subdims(E, d))
        if (!sub.is_zero() && theta_of(theta, sub) == 0 && is_stable_generic(E, sub, theta))
            return sub;
    return std::nullopt;
}

} // namespace

bool is_semistable_generic(const EulerMatrix &E, const DimVector &d, const Weight &theta) {
    require_dimension(d, E.size());
    check_weight(E, theta);
    if (theta_of(theta, d) != 0)
        return false;
    for (const auto &sub : generic_subdims(E, d))
        if (theta_of(theta, sub) > 0)
            return false;
    return true;
}

bool is_stable_generic(const EulerMatrix &E, const DimVector &d, const Weight &theta) {
    require_dimension(d, E.size());
    check_weight(E, theta);
    if (d.is_zero() || theta_of(theta, d) != 0)
        return false;
    for (const auto &sub : generic_subdims(E, d))
        if (!sub.is_zero() && sub != d && theta_of(theta, sub) >= 0)
            return false;
    return true;
}

WeightCone effective_cone(const EulerMatrix &E, const DimVector &d) {
    require_dimension(d, E.size());
    std::vector<Functional> eqs, ineqs;
    if (!d.is_zero())
        eqs.push_back(d.values());
    for (const auto &sub : generic_subdims(E, d))
        if (!sub.is_zero() && sub != d)
            ineqs.push_back(sub.values());
    return WeightCone(E.size(), eqs, ineqs);
}

std::string StableDecomposition::summary() const {
    std::string s;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        if (!s.empty())
            s += "+";
        s += std::to_string(it->multiplicity) + "*" + it->root.str();
    }
    return s.empty() ? "0" : s;
}

StableDecomposition theta_stable_decomposition(const EulerMatrix &E, const DimVector &d, const Weight &theta) {
    if (!is_semistable_generic(E, d, theta))
        throw PreconditionError("dimension vector " + d.str() + " is not " + theta.str() + "-semistable");
    std::vector<DimVector> parts;
    DimVector rest = d;
    while (!rest.is_zero()) {
        auto sub = first_stable_null_sub(E, rest, theta);
        if (!sub)
            throw InvariantError("no stable factor found in " + rest.str());
        parts.push_back(*sub);
        rest -= *sub;
    }
    return StableDecomposition{aggregate_summands(E, parts)};
}

LocalQuiverSetup local_quiver(const EulerMatrix &E, const std::vector<std::pair<DimVector, std::int64_t>> &factors) {
    if (factors.empty())
        throw InputError("local quiver needs at least one factor");
    std::vector<std::string> vertices;
    std::vector<std::int64_t> mult;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        require_dimension(factors[i].first, E.size(), "factor");
        if (factors[i].first.is_zero())
            throw InputError("factor dimension vectors must be nonzero");
        if (factors[i].second <= 0)
            throw InputError("factor multiplicities must be positive");
        vertices.push_back(std::to_string(i + 1));
        mult.push_back(factors[i].second);
    }
    std::vector<Arrow> arrows;
    int serial = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = 0; j < factors.size(); ++j) {
            const auto pairing = euler_form(E, factors[i].first, factors[j].first);
            // Hom between distinct stables vanishes, End of a stable is k
            const std::int64_t count = i == j ? 1 - pairing : -pairing;
            if (count < 0)
                throw InvariantError("negative arrow count " + std::to_string(count) + " between factors " +
                                     factors[i].first.str() + " and " + factors[j].first.str());
            for (std::int64_t k = 0; k < count; ++k)
                arrows.push_back({"a" + std::to_string(++serial), vertices[i], vertices[j]});
        }
    Quiver q(vertices, arrows);
    return {q, DimVector(q.from_declared(mult))};
}

std::int64_t moduli_dimension(const EulerMatrix &E, const DimVector &d, const Weight &theta) {
    if (!is_stable_generic(E, d, theta))
        throw PreconditionError(d.str() + " is not " + theta.str() + "-stable");
    return 1 - tits_form(E, d);
}

std::string to_string(PSVerdictKind k) {
    switch (k) {
    case PSVerdictKind::is_projective_space:
        return "is_P_m";
    case PSVerdictKind::not_projective_space:
        return "not_projective_space";
    case PSVerdictKind::inconclusive:
        return "inconclusive";
    }
    return "?";
}

Rational binomial_signature(const Rational &q, std::int64_t m, std::int64_t n) {
    Rational r = 1;
    const Rational x = q * n;
    for (std::int64_t j = 1; j <= m; ++j)
        r = r * (x + j) / j;
    return r;
}

PSVerdict projective_space_fit(const std::vector<std::uint64_t> &dims) {
    PSVerdict v;
    v.dims = dims;
    if (dims.empty()) {
        v.reason = "no values";
        return v;
    }
    if (dims[0] != 1) {
        v.kind = PSVerdictKind::not_projective_space;
        v.reason = "s_0 != 1";
        return v;
    }
    if (auto lc = log_concavity_check(dims); !lc.ok) {
        v.kind = PSVerdictKind::not_projective_space;
        v.reason = "log-concavity fails at n=" + std::to_string(lc.index);
        return v;
    }
    const auto fit = fit_polynomial(dims);
    if (fit.status != FitStatus::ok) {
        v.reason = "too few values to pin the degree";
        return v;
    }
    const std::int64_t m = fit.degree;
    auto matches = [&](const Rational &q) {
        for (std::size_t n = 0; n < dims.size(); ++n)
            if (binomial_signature(q, m, static_cast<std::int64_t>(n)) != Rational(dims[n]))
                return false;
        return true;
    };
    if (m == 0) {
        v.kind = PSVerdictKind::is_projective_space;
        v.m = 0;
        v.q = 0;
        return v;
    }
    if (dims.size() < 2) {
        v.reason = "too few values";
        return v;
    }
    // binom(q + m, m) = s_1 is increasing in q > 0; search q = a/b, b <= n_max
    const std::int64_t n_max = static_cast<std::int64_t>(dims.size()) - 1;
    std::vector<Rational> fits;
    const Rational s1(dims[1]);
    for (std::int64_t b = 1; b <= std::max<std::int64_t>(n_max, 1); ++b) {
        std::int64_t lo = 1, hi = b * static_cast<std::int64_t>(dims[1]) + b;
        while (lo < hi) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            if (binomial_signature(Rational(mid, b), m, 1) < s1)
                lo = mid + 1;
            else
                hi = mid;
        }
        const Rational q(lo, b);
        if (binomial_signature(q, m, 1) == s1 && matches(q) &&
            std::find(fits.begin(), fits.end(), q) == fits.end())
            fits.push_back(q);
    }
    if (fits.size() == 1) {
        v.kind = PSVerdictKind::is_projective_space;
        v.m = m;
        v.q = fits[0];
    } else if (fits.empty()) {
        v.kind = PSVerdictKind::not_projective_space;
        v.reason = "degree " + std::to_string(m) + " pinned but no binom(qn+m,m) fit";
    } else {
        v.reason = "several (m, q) fit";
    }
    return v;
}

PSVerdict projective_space_verdict(const EulerMatrix &E, const DimVector &d, const Weight &theta, int n_max,
                                   std::uint64_t budget) {
    if (n_max < 0)
        throw InputError("n_max must be non-negative");
    if (!is_semistable_generic(E, d, theta))
        throw PreconditionError(d.str() + " is not " + theta.str() + "-semistable");
    std::vector<std::uint64_t> dims;
    for (int n = 0; n <= n_max; ++n)
        dims.push_back(si_dim(E, d, n * theta, budget));
    return projective_space_fit(dims);
}

std::string field_description(std::int64_t n_isotropic) {
    if (n_isotropic == 0)
        return "k";
    std::string s = "k(";
    for (std::int64_t i = 1; i <= n_isotropic; ++i) {
        if (i > 1)
            s += ",";
        s += "t_" + std::to_string(i);
    }
    return s + ")";
}

std::int64_t generic_end_dimension(const EulerMatrix &E, const GenericDecomposition &dec) {
    // Isotropic summands come as pairwise non-isomorphic bricks, real ones as
    // powers of a single brick; imaginary non-isotropic ones occur once.
    std::int64_t total = 0;
    for (const auto &x : dec.summands)
        for (const auto &y : dec.summands) {
            if (x.root == y.root) {
                total += x.cls == RootClass::real ? x.multiplicity * x.multiplicity : x.multiplicity;
                continue;
            }
            total += x.multiplicity * y.multiplicity * generic_hom_ext(E, x.root, y.root).hom;
        }
    return total;
}

RationalInvariantsProfile rational_invariants_profile(const Quiver &q, const DimVector &d) {
    const auto cls = classify_path_algebra(q);
    if (cls.type == RepresentationType::wild)
        throw PreconditionError("rational invariants are only described for tame quivers");
    EulerMatrix E(q);
    RationalInvariantsProfile p;
    p.decomposition = canonical_decomposition(E, d);
    for (const auto &s : p.decomposition.summands)
        if (s.cls == RootClass::isotropic)
            p.n_isotropic += s.multiplicity;
    p.field_description = field_description(p.n_isotropic);
    p.generic_end_dim = generic_end_dimension(E, p.decomposition);
    p.transcendence_degree = -tits_form(E, d) + p.generic_end_dim;
    return p;
}

} // namespace quiverinv
