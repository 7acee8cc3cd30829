#include <doctest.h>

#include <random>

#include "quiverinv/canonical.hpp"
#include "quiverinv/errors.hpp"
#include "quiverinv/generic_rep.hpp"

using namespace quiverinv;

namespace {

DimVector D(std::vector<std::int64_t> v) { return DimVector(std::move(v)); }

const std::vector<std::vector<int>> kTubular{{2, 2, 2, 2}, {3, 3, 3}, {4, 4, 2}, {6, 3, 2}};

CanonicalAlgebra make(const std::vector<int> &w) {
    std::vector<Rational> lambdas;
    for (std::size_t i = 0; i + 2 < w.size(); ++i)
        lambdas.push_back(Rational(static_cast<std::int64_t>(i + 1)));
    return build_canonical(w, lambdas);
}

DimVector random_vec(std::size_t n, std::mt19937_64 &rng, int lo, int hi) {
    DimVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    return v;
}

IntMatrix power(const IntMatrix &m, std::int64_t k) {
    IntMatrix r = IntMatrix::identity(m.rows());
    for (std::int64_t i = 0; i < k; ++i)
        r = r * m;
    return r;
}

} // namespace

TEST_CASE("construction") {
    const auto L = make({2, 3, 4});
    CHECK(L.num_vertices() == 2 + 1 + 2 + 3);
    CHECK(L.presentation.quiver().num_arrows() == 2 + 3 + 4);
    CHECK(L.m_lcm == 12);
    CHECK(L.presentation.quiver().vertices().front() == "0");
    CHECK(L.presentation.quiver().vertices().back() == "inf");
    const auto &q = L.presentation.quiver();
    CHECK(q.arrow_count(L.infinity(), L.arm_vertex(3, 3)) == 1);
    CHECK(q.arrow_count(L.arm_vertex(3, 1), L.zero()) == 1);
    CHECK(q.arrow_count(L.arm_vertex(3, 3), L.arm_vertex(3, 2)) == 1);
    CHECK(L.euler(L.infinity(), L.zero()) == 1); // n - 2 relations
    const auto L4 = make({2, 2, 2, 2});
    CHECK(L4.euler(L4.infinity(), L4.zero()) == 2);
    CHECK(L4.euler(L4.zero(), L4.infinity()) == 0);
}

TEST_CASE("construction counts") {
    const auto A = build_canonical({2, 2, 2, 2}, {1, -1});
    CHECK(A.num_vertices() == 6);
    CHECK(A.presentation.quiver().num_arrows() == 8);
    CHECK(A.presentation.relation_count(A.infinity(), A.zero()) == 2);
    const auto B = make({3, 3, 2});
    CHECK(B.num_vertices() == 7);
    CHECK(B.presentation.quiver().num_arrows() == 8);
    CHECK(B.presentation.relation_count(B.infinity(), B.zero()) == 1);
    CHECK(virtual_genus(std::vector<int>{2, 2, 2}) == Rational(1, 2));
    CHECK(virtual_genus(std::vector<int>{7, 3, 2}) == Rational(3, 2));
    CHECK(virtual_genus(std::vector<int>{6, 3, 2}) == 1);
    CHECK(classify_canonical(std::vector<int>{3, 3, 2}) == CanonicalType::domestic);
    CHECK(classify_canonical(std::vector<int>{7, 3, 2}) == CanonicalType::wild);
    DimVector e0(A.num_vertices());
    e0[A.zero()] = 1;
    CHECK(rank_degree(A, e0).rank == 1);
    CHECK(rank_degree(A, A.h()).degree == 2);
    const auto rr = riemann_roch_check(A, A.h(), A.h());
    CHECK(rr.ok);
    CHECK(rr.lhs == 0);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(build_canonical({2, 2}, {}), InputError);
    CHECK_THROWS_AS(build_canonical({2, 1, 3}, {1}), InputError);
    CHECK_THROWS_AS(build_canonical({2, 2, 2, 2}, {1}), InputError);
    CHECK_THROWS_AS(build_canonical({2, 2, 2, 2}, {2, 1}), InputError);
    CHECK_THROWS_AS(build_canonical({2, 2, 2, 2}, {1, 1}), InputError);
    CHECK_THROWS_AS(build_canonical({2, 2, 2, 2}, {1, 0}), InputError);
}

TEST_CASE("parse canonical line") {
    auto L = parse_canonical("canonical weights=6,3,2 lambda=1\n");
    CHECK(L.weights == std::vector<int>{6, 3, 2});
    L = parse_canonical("# comment\ncanonical weights=2,2,2,2 lambda=1,3/2\n\n");
    CHECK(L.lambdas[1] == Rational(3, 2));
    L = parse_canonical("canonical weights=3,3,3");
    CHECK(L.lambdas.size() == 1);
    CHECK_THROWS_AS(parse_canonical(""), InputError);
    CHECK_THROWS_AS(parse_canonical("quiver weights=2,2,2"), InputError);
    CHECK_THROWS_AS(parse_canonical("canonical weights=2,x,2"), InputError);
    CHECK_THROWS_AS(parse_canonical("canonical weights=2,2,2,2"), InputError);
    CHECK_THROWS_AS(parse_canonical("canonical weights=2,2,2 colour=1"), InputError);
    CHECK_THROWS_AS(parse_canonical("canonical weights=2,2,2\nvertex 1"), InputError);
}

TEST_CASE("genus and classification") {
    CHECK(virtual_genus(std::vector<int>{2, 2, 2, 2}) == 1);
    CHECK(virtual_genus(std::vector<int>{2, 3, 7}) == Rational(3, 2));
    CHECK(virtual_genus(std::vector<int>{2, 2, 5}) < 1);
    CHECK(classify_canonical(std::vector<int>{2, 3, 5}) == CanonicalType::domestic);
    CHECK(classify_canonical(std::vector<int>{2, 3, 6}) == CanonicalType::tubular);
    CHECK(classify_canonical(std::vector<int>{2, 3, 7}) == CanonicalType::wild);
    CHECK(classify_canonical(std::vector<int>{2, 2, 2, 2, 2}) == CanonicalType::wild);
}

TEST_CASE("exhaustive genus scan: only the tubular tuples have genus 1") {
    std::vector<std::vector<int>> genus_one;
    for (int n = 3; n <= 4; ++n) {
        std::vector<int> w(n, 2);
        std::function<void(int, int)> go = [&](int i, int lo) {
            if (i == n) {
                // classify_canonical throws if genus and graph disagree
                const auto t = classify_canonical(w);
                if (t == CanonicalType::tubular) {
                    genus_one.push_back(w);
                    std::sort(genus_one.back().rbegin(), genus_one.back().rend());
                }
                CHECK((virtual_genus(w) == 1) == (t == CanonicalType::tubular));
                return;
            }
            for (int x = lo; x <= 7; ++x) {
                w[i] = x;
                go(i + 1, x);
            }
        };
        go(0, 2);
    }
    std::sort(genus_one.begin(), genus_one.end());
    auto expected = kTubular;
    std::sort(expected.begin(), expected.end());
    CHECK(genus_one == expected);
}

TEST_CASE("rank, degree and h") {
    std::mt19937_64 rng(5);
    for (const auto &w : {std::vector<int>{2, 2, 2, 2}, std::vector<int>{3, 3, 3}, std::vector<int>{4, 4, 2},
                          std::vector<int>{6, 3, 2}, std::vector<int>{2, 3, 7}, std::vector<int>{2, 2, 3}}) {
        const auto L = make(w);
        CHECK(tits_form(L.euler, L.h()) == 0);
        const auto rd = rank_degree(L, L.h());
        CHECK(rd.rank == 0);
        CHECK(rd.degree == L.m_lcm);
        for (int t = 0; t < 50; ++t) {
            const auto d = random_vec(L.num_vertices(), rng, 0, 5);
            CHECK(rank_degree(L, d).rank == euler_form(L.euler, d, L.h()));
            CHECK(rank_degree(L, d).rank == -euler_form(L.euler, L.h(), d));
        }
    }
}

TEST_CASE("Coxeter transformation") {
    std::mt19937_64 rng(9);
    for (const auto &w : kTubular) {
        const auto L = make(w);
        const auto phi = coxeter_matrix(L);
        CHECK(apply(phi, L.h()) == L.h());
        CHECK(power(phi, L.m_lcm) == IntMatrix::identity(L.num_vertices()));
        for (int t = 0; t < 50; ++t) {
            const auto d = random_vec(L.num_vertices(), rng, -3, 3);
            const auto e = random_vec(L.num_vertices(), rng, -3, 3);
            std::int64_t lhs = 0, rhs = 0;
            for (std::size_t i = 0; i < d.size(); ++i)
                for (std::size_t j = 0; j < e.size(); ++j)
                    lhs += d[i] * L.euler(i, j) * e[j];
            const auto pd = apply(phi, d);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::size_t j = 0; j < pd.size(); ++j)
                    rhs += e[i] * L.euler(i, j) * pd[j];
            CHECK(lhs == -rhs);
        }
    }
    // not periodic of order m on a wild tuple
    const auto W = make({2, 3, 7});
    CHECK(power(coxeter_matrix(W), W.m_lcm) != IntMatrix::identity(W.num_vertices()));
}

TEST_CASE("Riemann-Roch on random pairs") {
    std::mt19937_64 rng(13);
    for (const auto &w : {std::vector<int>{2, 2, 2, 2}, std::vector<int>{3, 3, 3}, std::vector<int>{4, 4, 2},
                          std::vector<int>{6, 3, 2}, std::vector<int>{3, 3, 2}, std::vector<int>{2, 3, 7}}) {
        const auto L = make(w);
        for (int t = 0; t < 100; ++t) {
            const auto d = random_vec(L.num_vertices(), rng, -4, 4);
            const auto e = random_vec(L.num_vertices(), rng, -4, 4);
            const auto rr = riemann_roch_check(L, d, e);
            CHECK(rr.ok);
            CHECK(rr.lhs == rr.rhs);
        }
    }
    // rk e_0 = 1, deg h = 2: both sides equal 2
    const auto L = make({2, 2, 2, 2});
    DimVector d(L.num_vertices());
    d[L.zero()] = 1;
    const auto rr = riemann_roch_check(L, d, L.h());
    CHECK(rr.lhs == 2);
    CHECK(rr.rhs == 2);
}

TEST_CASE("isotropic hull") {
    const auto L = make({2, 2, 2, 2});
    CHECK(isotropic_hull(L, L.h()) == L.h());
    DimVector e0(L.num_vertices());
    e0[L.zero()] = 1;
    const auto iso = isotropic_hull(L, e0);
    CHECK(iso == D({0, 1, 1, 1, 1, 2}));
    CHECK(apply(coxeter_matrix(L), iso) == iso);
    CHECK(tits_form(L.euler, iso) == 0);
    CHECK(iso.content() == 1);
    CHECK_THROWS_AS(isotropic_hull(L, DimVector(L.num_vertices())), PreconditionError);
    CHECK_THROWS_AS(isotropic_hull(make({2, 3, 7}), make({2, 3, 7}).h()), PreconditionError);

    std::mt19937_64 rng(3);
    for (const auto &w : kTubular) {
        const auto T = make(w);
        const auto phi = coxeter_matrix(T);
        for (int t = 0; t < 20; ++t) {
            const auto d = random_vec(T.num_vertices(), rng, 0, 2);
            if (d.is_zero())
                continue;
            try {
                const auto x = isotropic_hull(T, d);
                CHECK(apply(phi, x) == x);
                CHECK(tits_form(T.euler, x) == 0);
                CHECK(x.content() == 1);
            } catch (const InvariantError &) {
                // mixed-sign or vanishing orbit sum
            }
        }
    }
}

TEST_CASE("Kronecker pair on K2 data") {
    EulerMatrix k2(catalogue::kronecker(2));
    const auto p = kronecker_pair(k2, D({1, 1}));
    CHECK(p.d1 == D({0, 1}));
    CHECK(p.d2 == D({1, 0}));
    CHECK(euler_form(k2, p.d1, p.d2) == 0);
    CHECK(euler_form(k2, p.d2, p.d1) == -2);
    CHECK_THROWS_AS(kronecker_pair(k2, D({1, 0})), PreconditionError);
    CHECK_THROWS_AS(kronecker_pair(k2, D({2, 2})), PreconditionError);
    EulerMatrix a2t(catalogue::extended_a(2));
    const auto t = kronecker_pair(a2t, D({1, 1, 1}));
    CHECK(t.d1 == D({0, 0, 1}));
    CHECK(t.d2 == D({1, 1, 0}));
    // q(1,1) = 0 here but every pairing is -1: nothing to find
    IntMatrix m(2, 2);
    m(0, 0) = m(1, 1) = 1;
    m(0, 1) = m(1, 0) = -1;
    CHECK_THROWS_AS(kronecker_pair(EulerMatrix(m), D({1, 1})), NotFoundError);
}

TEST_CASE("Kronecker pair on tubular h") {
    for (const auto &w : kTubular) {
        const auto L = make(w);
        const auto p = kronecker_pair(L, L.h());
        CHECK(p.d1 + p.d2 == L.h());
        CHECK(tits_form(L.euler, p.d1) == 1);
        CHECK(tits_form(L.euler, p.d2) == 1);
        CHECK(euler_form(L.euler, p.d1, p.d2) == 0);
        CHECK(euler_form(L.euler, p.d2, p.d1) == -2);
    }
    const auto L = make({2, 2, 2, 2});
    DimVector e0(L.num_vertices());
    e0[L.zero()] = 1;
    CHECK_THROWS_AS(kronecker_pair(L, e0), PreconditionError);
    CHECK_THROWS_AS(kronecker_pair(make({2, 3, 7}), make({2, 3, 7}).h()), PreconditionError);
}

TEST_CASE("rational invariants on canonical algebras") {
    const auto L = make({2, 2, 2, 2});
    auto p = rational_invariants_canonical(L, {L.h()});
    CHECK(p.n_isotropic == 1);
    CHECK(p.field_description == "k(t_1)");
    REQUIRE(p.pairs.size() == 1);
    p = rational_invariants_canonical(L, {L.h(), L.h()});
    CHECK(p.field_description == "k(t_1,t_2)");
    DimVector e0(L.num_vertices());
    e0[L.zero()] = 1;
    p = rational_invariants_canonical(L, {e0});
    CHECK(p.field_description == "k");
    CHECK_THROWS_AS(rational_invariants_canonical(L, {2 * L.h()}), PreconditionError);
    CHECK_THROWS_AS(rational_invariants_canonical(make({2, 3, 7}), {e0}), PreconditionError);
    CHECK_THROWS_AS(rational_invariants_canonical(L, {}), InputError);
    // domestic: h is still isotropic and has a pair
    const auto Dm = make({2, 2, 3});
    CHECK(rational_invariants_canonical(Dm, {Dm.h()}).n_isotropic == 1);
}
