#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quiverinv/cone.hpp"
#include "quiverinv/generic_rep.hpp"
#include "quiverinv/lattice.hpp"
#include "quiverinv/linalg.hpp"
#include "quiverinv/quiver.hpp"
#include "quiverinv/semi_invariants.hpp"

namespace quiverinv {

/// theta(d) = 0 and theta(d') <= 0 on every generic subdimension vector.
bool is_semistable_generic(const EulerMatrix &E, const DimVector &d, const Weight &theta);
/// As above with theta(d') < 0 for d' outside {0, d}; false for d = 0.
bool is_stable_generic(const EulerMatrix &E, const DimVector &d, const Weight &theta);

/// {theta : theta(d) = 0, theta(d') <= 0 for all generic subdimension vectors d'}.
WeightCone effective_cone(const EulerMatrix &E, const DimVector &d);

struct StableDecomposition {
    std::vector<Summand> factors; ///< sorted by root
    std::string summary() const;  ///< "2*(1,1)+1*(1,0)"
    friend bool operator==(const StableDecomposition &, const StableDecomposition &) = default;
};

/// Peels off the lexicographically smallest theta-stable theta-null generic
/// subdimension vector and recurses on the rest. PreconditionError unless d
/// is theta-semistable.
StableDecomposition theta_stable_decomposition(const EulerMatrix &E, const DimVector &d, const Weight &theta);

struct LocalQuiverSetup {
    Quiver quiver;
    DimVector dim;
};

/// One vertex per factor ("1", "2", ...), -<d_i, d_j> arrows i -> j and
/// 1 - <d_i, d_i> loops at i; the dimension vector holds the multiplicities.
/// Factors stand for pairwise non-isomorphic stables, so a dimension vector
/// may repeat. InvariantError if a count comes out negative.
LocalQuiverSetup local_quiver(const EulerMatrix &E, const std::vector<std::pair<DimVector, std::int64_t>> &factors);

/// 1 - <d, d>; PreconditionError unless d is theta-stable.
std::int64_t moduli_dimension(const EulerMatrix &E, const DimVector &d, const Weight &theta);

enum class PSVerdictKind { is_projective_space, not_projective_space, inconclusive };
std::string to_string(PSVerdictKind k);

struct PSVerdict {
    PSVerdictKind kind = PSVerdictKind::inconclusive;
    std::int64_t m = 0;
    Rational q = 0; ///< 0 when m = 0
    std::vector<std::uint64_t> dims;
    std::string reason;
};

/// binom(q n + m, m) evaluated exactly (generalized binomial for rational q n).
Rational binomial_signature(const Rational &q, std::int64_t m, std::int64_t n);

/// Tests s_n = dim SI(Q,d)_{n theta}, n = 0..n_max, against binom(q n + m, m).
PSVerdict projective_space_verdict(const EulerMatrix &E, const DimVector &d, const Weight &theta, int n_max,
                                   std::uint64_t budget = kDefaultSIBudget);
/// Verdict on a precomputed sequence.
PSVerdict projective_space_fit(const std::vector<std::uint64_t> &dims);

struct RationalInvariantsProfile {
    std::int64_t n_isotropic = 0;
    std::string field_description; ///< "k" or "k(t_1,...,t_N)"
    /// dim rep - dim GL + generic End dimension; equals n_isotropic on tame input.
    std::int64_t transcendence_degree = 0;
    std::int64_t generic_end_dim = 0;
    GenericDecomposition decomposition;
};

std::string field_description(std::int64_t n_isotropic);

/// PreconditionError on wild quivers.
RationalInvariantsProfile rational_invariants_profile(const Quiver &q, const DimVector &d);

/// dim End of a general representation, from its canonical decomposition.
std::int64_t generic_end_dimension(const EulerMatrix &E, const GenericDecomposition &dec);

} // namespace quiverinv
