// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "quiverinv/canonical.hpp"
#include "quiverinv/cli.hpp"
#include "quiverinv/errors.hpp"
#include "quiverinv/generic_rep.hpp"
#include "quiverinv/semi_invariants.hpp"
#include "quiverinv/stability.hpp"

using namespace quiverinv;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;
};

std::vector<DimVector> dims_up_to(std::size_t n, std::int64_t max_total) {
    std::vector<DimVector> out;
    DimVector d(n);
    std::function<void(std::size_t, std::int64_t)> go = [&](std::size_t i, std::int64_t left) {
        if (i == n) {
            if (!d.is_zero())
                out.push_back(d);
            return;
        }
        for (std::int64_t x = 0; x <= left; ++x) {
            d[i] = x;
            go(i + 1, left - x);
        }
        d[i] = 0;
    };
    go(0, max_total);
    return out;
}

DimVector random_vec(std::size_t n, std::mt19937_64 &rng, int lo, int hi) {
    DimVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    return v;
}

CanonicalAlgebra make_canonical(const std::vector<int> &w) {
    std::vector<Rational> lambdas;
    for (std::size_t i = 0; i + 2 < w.size(); ++i)
        lambdas.push_back(Rational(static_cast<std::int64_t>(i + 1)));
    return build_canonical(w, lambdas);
}

const std::vector<std::vector<int>> kTubular{{2, 2, 2, 2}, {3, 3, 3}, {4, 4, 2}, {6, 3, 2}};

Verdict euler_oracle() {
    std::mt19937_64 rng(101);
    int bad = 0, total = 0;
    for (const auto &q : {catalogue::kronecker(2), catalogue::type_a(3), catalogue::type_d(4)}) {
        EulerMatrix E(q);
        for (int t = 0; t < 200; ++t) {
            const auto a = random_vec(q.num_vertices(), rng, 0, 4);
            const auto b = random_vec(q.num_vertices(), rng, 0, 4);
            const auto V = random_representation(q, a, rng);
            const auto W = random_representation(q, b, rng);
            const auto he = hom_ext_concrete(q, V, W);
            bad += he.hom - he.ext != euler_form(E, a, b);
            ++total;
        }
    }
    return {bad == 0, std::to_string(total) + " pairs, " + std::to_string(bad) + " mismatches"};
}

Verdict schur_stability() {
    int bad = 0, total = 0;
    for (const auto &q : {catalogue::kronecker(2), catalogue::kronecker(3), catalogue::type_a(3)}) {
        EulerMatrix E(q);
        for (const auto &d : dims_up_to(q.num_vertices(), 6)) {
            bad += is_schur_root(E, d) != is_stable_generic(E, d, canonical_weights(E, d).theta);
            ++total;
        }
    }
    return {bad == 0, std::to_string(total) + " vectors, " + std::to_string(bad) + " mismatches"};
}

Verdict candecomp_brute_force() {
    int bad = 0, total = 0;
    for (const auto &q : {catalogue::kronecker(2), catalogue::type_a(3)}) {
        EulerMatrix E(q);
        for (const auto &d : dims_up_to(q.num_vertices(), 6)) {
            const auto all = oracle::all_ext_orthogonal_decompositions(q, d);
            std::vector<DimVector> got;
            for (const auto &s : canonical_decomposition(E, d).summands)
                for (std::int64_t k = 0; k < s.multiplicity; ++k)
                    got.push_back(s.root);
            std::sort(got.begin(), got.end());
            bad += all.size() != 1 || all[0] != got;
            ++total;
        }
    }
    return {bad == 0, std::to_string(total) + " vectors, " + std::to_string(bad) + " mismatches"};
}

Verdict reciprocity() {
    std::mt19937_64 rng(404);
    int checked = 0, skipped = 0, bad = 0, nonzero = 0;
    for (const auto &q : {catalogue::kronecker(2), catalogue::type_a(3), catalogue::kronecker(3)}) {
        for (int t = 0; t < 50; ++t) {
            const auto d = random_vec(q.num_vertices(), rng, 0, 3);
            const auto e = random_vec(q.num_vertices(), rng, 0, 3);
            try {
                const auto c = circ(q, d, e);
                bad += c.via_d != c.via_e;
                nonzero += c.value != 0;
                ++checked;
            } catch (const BudgetError &) {
                ++skipped;
            } catch (const InvariantError &) {
                ++bad;
            }
        }
    }
    return {bad == 0 && nonzero > 0, std::to_string(checked) + " pairs agree exactly (" + std::to_string(nonzero) +
                                         " nonzero), " + std::to_string(bad) + " disagree, " +
                                         std::to_string(skipped) + " over budget"};
}

Verdict kronecker_table() {
    const auto k2 = catalogue::kronecker(2);
    EulerMatrix E(k2);
    bool ok = true;
    const auto one = si_table(k2, DimVector({1, 1}), Weight({1, -1}), 6).dims;
    const auto two = si_table(k2, DimVector({2, 2}), Weight({1, -1}), 6).dims;
    for (std::int64_t n = 0; n <= 6; ++n) {
        ok = ok && one[n] == static_cast<std::uint64_t>(n + 1);
        ok = ok && two[n] == static_cast<std::uint64_t>((n + 1) * (n + 2) / 2);
        ok = ok && Rational(static_cast<std::int64_t>(one[n])) == binomial_signature(1, 1, n);
        ok = ok && Rational(static_cast<std::int64_t>(two[n])) == binomial_signature(1, 2, n);
    }
    for (std::int64_t m : {1, 2}) {
        const auto v = projective_space_verdict(E, DimVector(std::vector<std::int64_t>(2, m)), Weight({1, -1}), 6);
        ok = ok && v.kind == PSVerdictKind::is_projective_space && v.m == m && v.q == 1;
    }
    return {ok, "(1,1): N+1 and (2,2): binom(N+2,2) for N = 0..6, verdicts P^1 and P^2 with q = 1"};
}

Verdict tame_log_concavity() {
    int quivers = 0, sequences = 0, bad = 0, skipped = 0;
    for (const auto &[name, q] : catalogue::euclidean(4)) {
        ++quivers;
        EulerMatrix E(q);
        for (const auto &d : dims_up_to(q.num_vertices(), 4)) {
            std::vector<std::size_t> supp;
            for (std::size_t i = 0; i < d.size(); ++i)
                if (d[i] != 0)
                    supp.push_back(i);
            Weight t(d.size());
            std::function<void(std::size_t)> go = [&](std::size_t k) {
                if (k == supp.size()) {
                    if (!is_semistable_generic(E, d, t))
                        return;
                    try {
                        const auto tab = si_table(q, d, t, 5);
                        ++sequences;
                        bad += !log_concavity_check(tab.dims).ok;
                    } catch (const BudgetError &) {
                        ++skipped;
                    }
                    return;
                }
                for (std::int64_t x = -2; x <= 2; ++x) {
                    t[supp[k]] = x;
                    go(k + 1);
                }
                t[supp[k]] = 0;
            };
            go(0);
        }
    }
    return {bad == 0 && skipped == 0, std::to_string(quivers) + " quivers, " + std::to_string(sequences) +
                                          " effective (d,theta), " + std::to_string(bad) + " violations, " +
                                          std::to_string(skipped) + " over budget"};
}

Verdict wild_violation(const std::string &fixture) {
    const auto res = wild_violation_search(catalogue::kronecker(3), WildSearchBounds{});
    if (!res.hit)
        return {false, "no hit; frontier " + res.frontier};
    const auto &h = *res.hit;
    const bool strict = h.dim_2theta > h.dim_theta * h.dim_theta;
    std::ostringstream out, err;
    const int code = cli::run({"wild-search", "-f", std::string(QUIVERINV_SOURCE_DIR) + "/data/k3.quiver", "--check",
                               fixture},
                              out, err);
    std::ostringstream msg;
    msg << "d = " << h.d.str() << ", theta = " << h.theta.str() << ": " << h.dim_2theta << " > " << h.dim_theta
        << "^2; fixture replay " << (code == 0 ? "identical" : "exit " + std::to_string(code));
    return {strict && code == 0, msg.str()};
}

Verdict stable_scaling() {
    bool ok = true;
    EulerMatrix k2(catalogue::kronecker(2));
    for (std::int64_t m : {2, 3}) {
        const auto s = theta_stable_decomposition(k2, m * DimVector({1, 1}), Weight({1, -1}));
        ok = ok && s.factors.size() == 1 && s.factors[0].root == DimVector({1, 1}) && s.factors[0].multiplicity == m;
    }
    EulerMatrix k3(catalogue::kronecker(3));
    const auto theta = canonical_weights(k3, DimVector({1, 1})).theta;
    const auto s = theta_stable_decomposition(k3, DimVector({2, 2}), theta);
    ok = ok && s.factors.size() == 1 && s.factors[0].root == DimVector({2, 2}) && s.factors[0].multiplicity == 1;
    return {ok, "K2: 2*(1,1), 3*(1,1); K3: " + s.summary()};
}

Verdict canonical_identities() {
    std::mt19937_64 rng(909);
    bool ok = true;
    int rr = 0;
    for (const auto &w : kTubular) {
        const auto L = make_canonical(w);
        ok = ok && tits_form(L.euler, L.h()) == 0;
        for (int t = 0; t < 50; ++t) {
            const auto d = random_vec(L.num_vertices(), rng, 0, 5);
            ok = ok && rank_degree(L, d).rank == euler_form(L.euler, d, L.h());
        }
        IntMatrix p = IntMatrix::identity(L.num_vertices());
        const auto phi = coxeter_matrix(L);
        for (std::int64_t k = 0; k < L.m_lcm; ++k)
            p = p * phi;
        ok = ok && p == IntMatrix::identity(L.num_vertices());
    }
    for (const auto &w : {std::vector<int>{2, 2, 2, 2}, std::vector<int>{3, 3, 3}, std::vector<int>{4, 4, 2},
                          std::vector<int>{6, 3, 2}, std::vector<int>{3, 3, 2}}) {
        const auto L = make_canonical(w);
        for (int t = 0; t < 100; ++t) {
            const auto r = riemann_roch_check(L, random_vec(L.num_vertices(), rng, -4, 4),
                                              random_vec(L.num_vertices(), rng, -4, 4));
            ok = ok && r.ok && r.lhs == r.rhs;
            rr += r.ok;
        }
    }
    return {ok, "q(h) = 0, rk = <.,h>, Phi^m = Id on 4 tubular tuples; Riemann-Roch " + std::to_string(rr) + "/500"};
}

Verdict genus_classification() {
    std::vector<std::vector<int>> genus_one;
    int tuples = 0;
    try {
        for (int n = 3; n <= 4; ++n) {
            std::vector<int> w(n, 2);
            std::function<void(int, int)> go = [&](int i, int lo) {
                if (i == n) {
                    ++tuples;
                    // throws InvariantError when genus and graph disagree
                    if (classify_canonical(w) == CanonicalType::tubular || virtual_genus(w) == 1) {
                        genus_one.push_back(w);
                        std::sort(genus_one.back().rbegin(), genus_one.back().rend());
                    }
                    return;
                }
                for (int x = lo; x <= 7; ++x) {
                    w[i] = x;
                    go(i + 1, x);
                }
            };
            go(0, 2);
        }
    } catch (const InvariantError &e) {
        return {false, e.what()};
    }
    std::sort(genus_one.begin(), genus_one.end());
    auto expected = kTubular;
    std::sort(expected.begin(), expected.end());
    return {genus_one == expected,
            std::to_string(tuples) + " tuples agree; genus 1 exactly at (2,2,2,2), (3,3,3), (4,4,2), (6,3,2)"};
}

Verdict kronecker_pairs() {
    bool ok = true;
    EulerMatrix k2(catalogue::kronecker(2));
    const auto p = kronecker_pair(k2, DimVector({1, 1}));
    ok = ok && p.d1 == DimVector({0, 1}) && p.d2 == DimVector({1, 0});
    ok = ok && euler_form(k2, p.d1, p.d2) == 0 && euler_form(k2, p.d2, p.d1) == -2;
    const auto L = make_canonical({2, 2, 2, 2});
    const auto t = kronecker_pair(L, L.h());
    ok = ok && t.d1 + t.d2 == L.h() && tits_form(L.euler, t.d1) == 1 && tits_form(L.euler, t.d2) == 1;
    ok = ok && euler_form(L.euler, t.d1, t.d2) == 0 && euler_form(L.euler, t.d2, t.d1) == -2;
    const auto ri = rational_invariants_canonical(L, {L.h()});
    ok = ok && ri.field_description == "k(t_1)";
    return {ok, "K2: " + p.d1.str() + "," + p.d2.str() + "; (2,2,2,2) h: " + t.d1.str() + "+" + t.d2.str() +
                    "; field " + ri.field_description};
}

Verdict rational_invariants() {
    const auto k2 = catalogue::kronecker(2);
    bool ok = rational_invariants_profile(k2, DimVector({2, 2})).field_description == "k(t_1,t_2)";
    ok = ok && rational_invariants_profile(k2, DimVector({3, 1})).field_description == "k";
    const auto a3 = catalogue::type_a(3);
    int n = 0;
    for (const auto &d : dims_up_to(3, 6)) {
        ok = ok && rational_invariants_profile(a3, d).field_description == "k";
        ++n;
    }
    return {ok, "K2 (2,2): k(t_1,t_2); K2 (3,1): k; A3: k on all " + std::to_string(n) + " vectors"};
}

} // namespace

int main(int argc, char **argv) {
    const std::string fixture = argc > 1 ? argv[1] : std::string(QUIVERINV_SOURCE_DIR) + "/fixtures/wild_k3.json";
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"euler form vs concrete hom - ext", euler_oracle},
        {"Schur roots are generically theta_d-stable", schur_stability},
        {"canonical decomposition vs brute force", candecomp_brute_force},
        {"reciprocity of circ", reciprocity},
        {"Kronecker semi-invariant tables", kronecker_table},
        {"log-concavity on Euclidean quivers", tame_log_concavity},
        {"wild log-concavity violation on K3", [&] { return wild_violation(fixture); }},
        {"theta-stable decomposition scaling", stable_scaling},
        {"canonical algebra identities", canonical_identities},
        {"genus classification scan", genus_classification},
        {"Kronecker pairs", kronecker_pairs},
        {"rational invariants profile", rational_invariants},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !v.ok;
        std::printf("%s %2zu %s: %s (%.2fs)\n", v.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    v.detail.c_str(), secs);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
