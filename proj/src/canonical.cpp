#include "quiverinv/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "quiverinv/errors.hpp"
#include "quiverinv/generic_rep.hpp"
#include "quiverinv/stability.hpp"

namespace quiverinv {

namespace {

std::string arm_id(int i, int j) { return std::to_string(i) + "." + std::to_string(j); }

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

std::size_t CanonicalAlgebra::arm_vertex(int i, int j) const { return index_of(arm_id(i, j)); }

CanonicalAlgebra build_canonical(const std::vector<int> &weights, const std::vector<Rational> &lambdas) {
    const int n = static_cast<int>(weights.size());
    if (n < 3)
        throw InputError("a canonical algebra needs at least three weights");
    for (int w : weights)
        if (w < 2)
            throw InputError("every weight must be at least 2");
    if (static_cast<int>(lambdas.size()) != n - 2)
        throw InputError("expected " + std::to_string(n - 2) + " lambda values");
    if (lambdas[0] != 1)
        throw InputError("lambda_3 must be 1");
    std::set<Rational> seen;
    for (const auto &l : lambdas) {
        if (l == 0)
            throw InputError("lambda values must be nonzero");
        if (!seen.insert(l).second)
            throw InputError("lambda values must be pairwise distinct");
    }

    std::vector<std::string> vertices{"0"};
    std::vector<Arrow> arrows;
    for (int i = 1; i <= n; ++i) {
        const int mi = weights[i - 1];
        for (int j = 1; j < mi; ++j)
            vertices.push_back(arm_id(i, j));
        arrows.push_back({"a" + arm_id(i, mi), "inf", arm_id(i, mi - 1)});
        for (int j = mi - 1; j >= 2; --j)
            arrows.push_back({"a" + arm_id(i, j), arm_id(i, j), arm_id(i, j - 1)});
        arrows.push_back({"a" + arm_id(i, 1), arm_id(i, 1), "0"});
    }
    vertices.push_back("inf");
    Quiver q(vertices, arrows);

    CanonicalAlgebra L;
    L.weights = weights;
    L.lambdas = lambdas;
    L.presentation = BoundQuiverPresentation(q, {{{q.index_of("inf"), q.index_of("0")}, n - 2}});
    L.euler = EulerMatrix(L.presentation);
    L.m_lcm = 1;
    for (int w : weights)
        L.m_lcm = std::lcm(L.m_lcm, static_cast<std::int64_t>(w));
    if (abs(determinant(to_rational(L.euler.matrix()))) != 1)
        throw InvariantError("canonical Euler matrix is not unimodular");
    return L;
}

CanonicalAlgebra parse_canonical(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream words(line);
        std::string head;
        if (!(words >> head))
            continue;
        if (head != "canonical")
            throw InputError("expected 'canonical weights=...'");
        std::vector<int> weights;
        std::vector<Rational> lambdas;
        bool have_weights = false, have_lambda = false;
        std::string tok;
        while (words >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw InputError("malformed token '" + tok + "'");
            const auto key = tok.substr(0, eq);
            const auto values = split(tok.substr(eq + 1), ',');
            if (key == "weights") {
                for (const auto &v : values) {
                    try {
                        std::size_t used = 0;
                        weights.push_back(std::stoi(v, &used));
                        if (used != v.size())
                            throw InputError("bad weight '" + v + "'");
                    } catch (const std::logic_error &) {
                        throw InputError("bad weight '" + v + "'");
                    }
                }
                have_weights = true;
            } else if (key == "lambda") {
                for (const auto &v : values)
                    lambdas.push_back(parse_rational(v));
                have_lambda = true;
            } else {
                throw InputError("unknown key '" + key + "'");
            }
        }
        if (!have_weights)
            throw InputError("missing weights=");
        if (!have_lambda && weights.size() == 3)
            lambdas = {Rational(1)};
        // trailing content after the canonical line is an error
        while (std::getline(in, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw InputError("unexpected content after the canonical line");
        }
        return build_canonical(weights, lambdas);
    }
    throw InputError("empty canonical description");
}

RankDegree rank_degree(const CanonicalAlgebra &L, const DimVector &d) {
    require_dimension(d, L.num_vertices());
    const std::int64_t m = L.m_lcm;
    const std::int64_t n = static_cast<std::int64_t>(L.weights.size());
    std::int64_t deg = 0, sum_ratio = 0;
    for (int i = 1; i <= n; ++i) {
        const std::int64_t ratio = m / L.weights[i - 1];
        sum_ratio += ratio;
        std::int64_t arm = 0;
        for (int j = 1; j < L.weights[i - 1]; ++j)
            arm += d[L.arm_vertex(i, j)];
        deg += ratio * arm;
    }
    deg -= ((n - 1) * m - sum_ratio) * d[L.infinity()];
    return {d[L.zero()] - d[L.infinity()], deg};
}

Rational virtual_genus(const std::vector<int> &weights) {
    std::int64_t m = 1;
    for (int w : weights)
        m = std::lcm(m, static_cast<std::int64_t>(w));
    Rational inner = static_cast<std::int64_t>(weights.size()) - 2;
    for (int w : weights)
        inner -= Rational(1, w);
    return 1 + Rational(m) * inner / 2;
}

Rational virtual_genus(const CanonicalAlgebra &L) { return virtual_genus(L.weights); }

std::string to_string(CanonicalType t) {
    switch (t) {
    case CanonicalType::domestic:
        return "domestic";
    case CanonicalType::tubular:
        return "tubular";
    case CanonicalType::wild:
        return "wild";
    }
    return "?";
}

CanonicalType classify_canonical(const std::vector<int> &weights) {
    const auto g = virtual_genus(weights);
    auto sorted = weights;
    std::sort(sorted.rbegin(), sorted.rend());
    static const std::vector<std::vector<int>> tubular{{2, 2, 2, 2}, {3, 3, 3}, {4, 4, 2}, {6, 3, 2}};
    CanonicalType by_genus = g < 1 ? CanonicalType::domestic : g == 1 ? CanonicalType::tubular : CanonicalType::wild;
    if (by_genus == CanonicalType::tubular && std::find(tubular.begin(), tubular.end(), sorted) == tubular.end())
        throw InvariantError("genus 1 on a tuple outside the tubular list");

    std::vector<int> arms;
    for (int w : weights)
        arms.push_back(w - 1);
    const auto graph = classify_path_algebra(catalogue::star(arms)).type;
    const CanonicalType by_graph = graph == RepresentationType::finite          ? CanonicalType::domestic
                                   : graph == RepresentationType::tame_infinite ? CanonicalType::tubular
                                                                                : CanonicalType::wild;
    if (by_graph != by_genus)
        throw InvariantError("genus says " + to_string(by_genus) + " but the star graph says " + to_string(by_graph));
    return by_genus;
}

CanonicalType classify_canonical(const CanonicalAlgebra &L) { return classify_canonical(L.weights); }

IntMatrix coxeter_matrix(const EulerMatrix &E) {
    const auto R = to_rational(E.matrix());
    const RatMatrix phi = inverse(R) * R.transposed();
    IntMatrix out(E.size(), E.size());
    for (std::size_t i = 0; i < E.size(); ++i)
        for (std::size_t j = 0; j < E.size(); ++j) {
            const Rational x = -phi(i, j);
            if (denominator(x) != 1)
                throw InvariantError("Coxeter matrix is not integral");
            out(i, j) = static_cast<std::int64_t>(numerator(x));
        }
    return out;
}

IntMatrix coxeter_matrix(const CanonicalAlgebra &L) { return coxeter_matrix(L.euler); }

DimVector apply(const IntMatrix &m, const DimVector &d) {
    DimVector r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            s += m(i, j) * d[j];
        r[i] = s;
    }
    return r;
}

DimVector isotropic_hull(const CanonicalAlgebra &L, const DimVector &d) {
    if (classify_canonical(L) != CanonicalType::tubular)
        throw PreconditionError("isotropic hull is defined for tubular algebras");
    if (d.size() != L.num_vertices())
        throw InputError("vector has wrong length");
    if (d.is_zero())
        throw PreconditionError("isotropic hull of the zero vector");
    const auto phi = coxeter_matrix(L);
    DimVector sum = d, cur = apply(phi, d);
    std::int64_t r = 1;
    while (cur != d) {
        if (r >= L.m_lcm)
            throw InvariantError("Phi^m does not fix " + d.str());
        sum += cur;
        cur = apply(phi, cur);
        ++r;
    }
    // orbits of projectives sum to a negative vector; only the sign is fixed here
    if (!sum.is_nonnegative() && (-sum).is_nonnegative())
        sum = -sum;
    if (!sum.is_nonnegative() || sum.is_zero())
        throw InvariantError("orbit sum " + sum.str() + " is not sign-definite");
    const DimVector iso = sum.divided_by(sum.content());
    if (apply(phi, iso) != iso || tits_form(L.euler, iso) != 0)
        throw InvariantError("orbit sum " + iso.str() + " is not an isotropic fixed vector");
    return iso;
}

RiemannRoch riemann_roch_check(const CanonicalAlgebra &L, const DimVector &d, const DimVector &e) {
    if (d.size() != L.num_vertices() || e.size() != L.num_vertices())
        throw InputError("vector has wrong length");
    const auto phi = coxeter_matrix(L);
    RiemannRoch rr;
    DimVector cur = d;
    for (std::int64_t i = 0; i < L.m_lcm; ++i) {
        rr.lhs += euler_form(L.euler, cur, e);
        cur = apply(phi, cur);
    }
    // rank and degree are linear, so evaluate them on arbitrary integer vectors
    auto rd = [&](const DimVector &v) {
        DimVector pos(v.size()), neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            (v[i] >= 0 ? pos[i] : neg[i]) = v[i] >= 0 ? v[i] : -v[i];
        const auto a = rank_degree(L, pos), b = rank_degree(L, neg);
        return RankDegree{a.rank - b.rank, a.degree - b.degree};
    };
    const auto x = rd(d), y = rd(e);
    const Rational g = virtual_genus(L);
    rr.rhs = Rational(L.m_lcm) * (1 - g) * x.rank * y.rank + Rational(x.rank * y.degree - y.rank * x.degree);
    rr.ok = rr.lhs == rr.rhs;
    return rr;
}

KroneckerPair kronecker_pair(const EulerMatrix &E, const DimVector &d) {
    require_dimension(d, E.size());
    if (d.is_zero() || tits_form(E, d) != 0)
        throw PreconditionError(d.str() + " is not isotropic");
    if (d.content() != 1)
        throw PreconditionError(d.str() + " is divisible");
    if (box_size(d, kMaxBoxSize) > kMaxBoxSize)
        throw BudgetError("Kronecker pair search box for " + d.str() + " exceeds " + std::to_string(kMaxBoxSize));
    std::optional<KroneckerPair> found;
    for_each_in_box(d, [&](const DimVector &d1) {
        if (d1.is_zero() || d1 == d || (found && !(d1.values() < found->d1.values())))
            return;
        const DimVector d2 = d - d1;
        if (tits_form(E, d1) == 1 && tits_form(E, d2) == 1 && euler_form(E, d1, d2) == 0 &&
            euler_form(E, d2, d1) == -2)
            found = KroneckerPair{d1, d2};
    });
    if (!found)
        throw NotFoundError("no Kronecker pair below " + d.str());
    return *found;
}

KroneckerPair kronecker_pair(const CanonicalAlgebra &L, const DimVector &d) {
    const auto type = classify_canonical(L);
    if (type == CanonicalType::wild)
        throw PreconditionError("Kronecker pairs are searched on tame canonical algebras");
    require_dimension(d, L.num_vertices());
    if (type == CanonicalType::tubular && apply(coxeter_matrix(L), d) != d)
        throw PreconditionError(d.str() + " is not fixed by the Coxeter transformation");
    return kronecker_pair(L.euler, d);
}

CanonicalInvariantsProfile rational_invariants_canonical(const CanonicalAlgebra &L,
                                                         const std::vector<DimVector> &summands) {
    if (classify_canonical(L) == CanonicalType::wild)
        throw PreconditionError("rational invariants are only described for tame canonical algebras");
    if (summands.empty())
        throw InputError("no summands given");
    CanonicalInvariantsProfile p;
    for (const auto &s : summands) {
        require_dimension(s, L.num_vertices());
        const auto q = tits_form(L.euler, s);
        if (q == 1)
            continue;
        if (q != 0)
            throw PreconditionError("generic roots have q in {0, 1}; q" + s.str() + " = " + std::to_string(q));
        p.pairs.push_back(kronecker_pair(L, s));
        ++p.n_isotropic;
    }
    p.field_description = field_description(p.n_isotropic);
    return p;
}

} // namespace quiverinv
