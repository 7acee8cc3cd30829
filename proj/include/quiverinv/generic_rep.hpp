#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "quiverinv/lattice.hpp"
#include "quiverinv/linalg.hpp"
#include "quiverinv/quiver.hpp"

namespace quiverinv {

/// Largest box Π(d(i)+1) any subdimension enumeration will walk.
inline constexpr std::uint64_t kMaxBoxSize = 10'000'000;

/// A representation: one rational matrix of shape d(head) x d(tail) per
/// arrow, stored in the quiver's (sorted) arrow order.
struct Representation {
    DimVector dimension;
    std::vector<RatMatrix> matrices;
};

/// Validates matrix shapes against the quiver and dimension vector.
Representation make_representation(const Quiver &q, DimVector d, std::vector<RatMatrix> matrices);

/// Entries drawn uniformly from a fixed pool of small non-zero rationals.
Representation random_representation(const Quiver &q, const DimVector &d, std::mt19937_64 &rng);

/// {"dimension": [...], "matrices": {"<arrow id>": [["p/q", ...], ...]}}
nlohmann::json to_json(const Quiver &q, const Representation &rep);
Representation representation_from_json(const Quiver &q, const nlohmann::json &j);

struct HomExt {
    std::int64_t hom = 0;
    std::int64_t ext = 0;
    friend bool operator==(const HomExt &, const HomExt &) = default;
};

/// dim Hom and dim Ext^1 from the kernel and cokernel of the map
/// (phi_i) -> (phi_{ha} V(a) - W(a) phi_{ta}).
HomExt hom_ext_concrete(const Quiver &q, const Representation &V, const Representation &W);

/// Throws PreconditionError unless E is the Euler matrix of an acyclic path algebra.
void require_acyclic_path_algebra(const EulerMatrix &E);

/// Generic hom and ext between dimension vectors (Schofield's recursion).
HomExt generic_hom_ext(const EulerMatrix &E, const DimVector &a, const DimVector &b);

/// All 0 <= d' <= d such that a general d-dimensional representation has a
/// d'-dimensional subrepresentation, lexicographically ordered.
std::vector<DimVector> generic_subdims(const EulerMatrix &E, const DimVector &d);

/// Whether a general d-dimensional representation has trivial endomorphisms.
bool is_schur_root(const EulerMatrix &E, const DimVector &d);

enum class RootClass { real, isotropic, imaginary_nonisotropic };
std::string to_string(RootClass c);
RootClass classify_root(const EulerMatrix &E, const DimVector &d);

struct Summand {
    DimVector root;
    std::int64_t multiplicity = 0;
    RootClass cls = RootClass::real;
    friend bool operator==(const Summand &, const Summand &) = default;
};

struct GenericDecomposition {
    std::vector<Summand> summands; ///< sorted by root, lexicographically
    /// "(2,1)+(1,0)", each root repeated by its multiplicity, roots in
    /// descending lexicographic order.
    std::string summary() const;
    friend bool operator==(const GenericDecomposition &, const GenericDecomposition &) = default;
};

/// Canonical decomposition into Schur roots with vanishing mutual generic ext.
GenericDecomposition canonical_decomposition(const EulerMatrix &E, const DimVector &d);

/// Collects equal roots and sorts; used by every decomposition producer.
std::vector<Summand> aggregate_summands(const EulerMatrix &E, const std::vector<DimVector> &parts);

/// Enables/disables the process-wide memo tables (results are identical).
void set_memoization(bool enabled);
bool memoization_enabled();
void clear_memo_tables();

} // namespace quiverinv
