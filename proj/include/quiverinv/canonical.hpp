#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quiverinv/lattice.hpp"
#include "quiverinv/linalg.hpp"
#include "quiverinv/quiver.hpp"

namespace quiverinv {

/// Canonical algebra on the weight tuple m = (m_1..m_n).
///
/// Vertices: "0", "inf" and "i.j" for 1 <= i <= n, 1 <= j <= m_i - 1. Arm i
/// runs inf -> i.(m_i-1) -> ... -> i.1 -> 0 through arrows "a<i>.<j>"; the
/// n-2 relations identify combinations of full arm paths, so r(inf, 0) = n-2.
struct CanonicalAlgebra {
    std::vector<int> weights;
    std::vector<Rational> lambdas; ///< lambda_3..lambda_n
    BoundQuiverPresentation presentation;
    EulerMatrix euler;
    std::int64_t m_lcm = 1;

    std::size_t num_vertices() const { return presentation.quiver().num_vertices(); }
    std::size_t index_of(std::string_view v) const { return presentation.quiver().index_of(v); }
    std::size_t zero() const { return index_of("0"); }
    std::size_t infinity() const { return index_of("inf"); }
    std::size_t arm_vertex(int i, int j) const;
    /// The all-ones vector h.
    DimVector h() const { return DimVector(num_vertices(), 1); }
};

/// InputError unless n >= 3, all m_i >= 2, n-2 lambdas, lambda_3 = 1,
/// lambdas nonzero and pairwise distinct.
CanonicalAlgebra build_canonical(const std::vector<int> &weights, const std::vector<Rational> &lambdas);

/// Parses "canonical weights=6,3,2 lambda=1" (lambda optional for n = 3).
CanonicalAlgebra parse_canonical(std::string_view text);

struct RankDegree {
    std::int64_t rank = 0;
    std::int64_t degree = 0;
};
RankDegree rank_degree(const CanonicalAlgebra &L, const DimVector &d);

/// 1 + m (n - 2 - sum 1/m_i) / 2.
Rational virtual_genus(const CanonicalAlgebra &L);
Rational virtual_genus(const std::vector<int> &weights);

enum class CanonicalType { domestic, tubular, wild };
std::string to_string(CanonicalType t);

/// By genus, cross-checked against the Dynkin / Euclidean / wild type of the
/// star obtained by deleting inf; InvariantError if they disagree.
CanonicalType classify_canonical(const CanonicalAlgebra &L);
CanonicalType classify_canonical(const std::vector<int> &weights);

/// Phi with <d, e> = -<e, Phi d>, i.e. Phi = -E^{-1} E^T.
IntMatrix coxeter_matrix(const CanonicalAlgebra &L);
IntMatrix coxeter_matrix(const EulerMatrix &E);
DimVector apply(const IntMatrix &m, const DimVector &d);

/// Orbit sum of d' under Phi divided by its content. Tubular only.
DimVector isotropic_hull(const CanonicalAlgebra &L, const DimVector &d);

struct RiemannRoch {
    bool ok = true;
    Rational lhs = 0; ///< sum_{i<m} <Phi^i d, e>
    Rational rhs = 0; ///< m (1-g) rk d rk e + det[[rk d, rk e], [deg d, deg e]]
};
RiemannRoch riemann_roch_check(const CanonicalAlgebra &L, const DimVector &d, const DimVector &e);

struct KroneckerPair {
    DimVector d1;
    DimVector d2;
};

/// Lexicographically smallest 0 < d1 < d with d2 = d - d1, q(d1) = q(d2) = 1,
/// <d1,d2> = 0, <d2,d1> = -2. PreconditionError unless q(d) = 0 and d is
/// indivisible; NotFoundError if the box holds no pair.
KroneckerPair kronecker_pair(const EulerMatrix &E, const DimVector &d);
/// Adds the tame and (tubular) Phi d = d preconditions.
KroneckerPair kronecker_pair(const CanonicalAlgebra &L, const DimVector &d);

struct CanonicalInvariantsProfile {
    std::int64_t n_isotropic = 0;
    std::string field_description;
    /// One pair per isotropic summand, in input order.
    std::vector<KroneckerPair> pairs;
};

/// Profile for a caller-declared generic decomposition into roots with
/// q in {0, 1}. PreconditionError on wild algebras or other roots.
CanonicalInvariantsProfile rational_invariants_canonical(const CanonicalAlgebra &L,
                                                         const std::vector<DimVector> &summands);

} // namespace quiverinv
