#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quiverinv/lattice.hpp"
#include "quiverinv/quiver.hpp"

namespace quiverinv {

/// Default cap on partition-tuple search nodes per si_dim call.
inline constexpr std::uint64_t kDefaultSIBudget = 20'000'000;

/// dim SI(Q,d)_theta from the Cauchy decomposition of k[rep(Q,d)].
///
/// Each arrow a contributes S^lambda(V_ta) (x) S^lambda(V_ha)^* with
/// l(lambda) <= min(d(ta), d(ha)). At a vertex i with n = d(i) let A be the
/// product of the outgoing Schur functors and B that of the incoming ones,
/// truncated to n rows. The vertex factor is
///   theta(i) >= 0:  sum_k [A : k + theta(i)^n] [B : k]
///   theta(i) <  0:  sum_k [A : k] [B : k + |theta(i)|^n]
/// i.e. det^theta(i) sits on the tail side. Vertices are visited in
/// topological order, so outgoing sizes are forced to sum to
/// theta(i) d(i) + (incoming sizes).
std::uint64_t si_dim(const EulerMatrix &E, const DimVector &d, const Weight &theta,
                     std::uint64_t budget = kDefaultSIBudget);

/// Same computation on an explicit quiver (E is derived from it).
std::uint64_t si_dim(const Quiver &q, const DimVector &d, const Weight &theta,
                     std::uint64_t budget = kDefaultSIBudget);

struct CircValue {
    std::uint64_t value = 0;
    std::uint64_t via_e = 0; ///< dim SI(Q,e)_{<d,.>}
    std::uint64_t via_d = 0; ///< dim SI(Q,d)_{-<.,e>}
};

/// d o e, evaluated on both sides of reciprocity. Throws InvariantError if
/// the two sides differ.
CircValue circ(const Quiver &q, const DimVector &d, const DimVector &e, std::uint64_t budget = kDefaultSIBudget);

struct LogConcavity {
    bool ok = true;
    std::size_t index = 0; ///< first N with v(N+1) v(N-1) > v(N)^2 when !ok
};
LogConcavity log_concavity_check(const std::vector<std::uint64_t> &values);

enum class FitStatus { ok, violated, inconclusive };
std::string to_string(FitStatus s);

struct PolynomialFit {
    FitStatus status = FitStatus::inconclusive;
    int degree = -1;       ///< minimal degree through all values (ok)
    std::size_t index = 0; ///< first offending N (violated)
};

/// Minimal-degree polynomial through the values. ok needs at least two
/// values beyond the degree to confirm it and P(0) = 1; violated(0) if
/// P(0) != 1; inconclusive if the data cannot pin the degree.
PolynomialFit fit_polynomial(const std::vector<std::uint64_t> &values);

struct PolynomialityReport {
    std::vector<std::uint64_t> first;  ///< (N d) o e, N = 0..n_max
    std::vector<std::uint64_t> second; ///< d o (N e)
    PolynomialFit first_fit;
    PolynomialFit second_fit;
    /// ok only if both fits are ok, violated if either is.
    FitStatus status() const;
};

/// Requires d o e != 0 (PreconditionError otherwise).
PolynomialityReport polynomiality_check(const Quiver &q, const DimVector &d, const DimVector &e, int n_max,
                                        std::uint64_t budget = kDefaultSIBudget);

struct SIWeightTable {
    Weight base_weight;
    std::vector<std::uint64_t> dims; ///< dim SI(Q,d)_{n theta}, n = 0..n_max
};
SIWeightTable si_table(const Quiver &q, const DimVector &d, const Weight &theta, int n_max,
                       std::uint64_t budget = kDefaultSIBudget);

struct WildSearchBounds {
    int max_entry = 2;      ///< d' ranges over the box [0, max_entry]^{Q_0}
    int max_n = 40;         ///< largest multiplier N tried
    std::uint64_t budget = kDefaultSIBudget; ///< per si_dim evaluation; 0 examines nothing
};

struct WildViolation {
    DimVector d_prime;  ///< the imaginary non-isotropic Schur root
    DimVector d_double; ///< d'' with <d'', .> = theta_{d'}
    Weight theta;       ///< -<., d'>
    std::int64_t n = 0; ///< multiplier: d = n d''
    DimVector d;        ///< n d''
    std::uint64_t dim_theta = 0;  ///< dim SI(Q,d)_theta
    std::uint64_t dim_2theta = 0; ///< dim SI(Q,d)_{2 theta}
};

struct WildSearchResult {
    std::optional<WildViolation> hit;
    /// Last (d', N) examined when nothing was found.
    std::string frontier;
};

/// Log-concavity counterexample search on a wild quiver. For each
/// imaginary non-isotropic Schur root d' in the box, theta = -<., d'> and
/// d'' = E^{-T} theta_{d'}; for N = 1, 2, ... compare dim SI(Q, N d'')_{2 theta}
/// with (dim SI(Q, N d'')_theta)^2. Both sides are evaluated through
/// reciprocity as dim SI(Q, m d')_{N theta_{d'}} for m = 1, 2.
WildSearchResult wild_violation_search(const Quiver &q, const WildSearchBounds &bounds);

nlohmann::json to_json(const WildViolation &v);

} // namespace quiverinv
