#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quiverinv/lattice.hpp"
#include "quiverinv/linalg.hpp"

namespace quiverinv {

/// Natural ordering of vertex ids: digit runs compare numerically, so
/// "2" < "10" and "1.2" < "1.10" < "inf".
bool natural_less(std::string_view a, std::string_view b);

struct Arrow {
    std::string id;
    std::string tail;
    std::string head;
    friend bool operator==(const Arrow &, const Arrow &) = default;
};

/// Finite directed multigraph. Loops and oriented cycles are representable;
/// operations that need acyclicity check for it.
///
/// Vertices are stored in natural sorted order and every vector/matrix in the
/// library is indexed through that order. The declaration order is kept only
/// for printing and for reading vectors given in declared order.
class Quiver {
  public:
    struct IndexedArrow {
        std::string id;
        std::size_t tail;
        std::size_t head;
    };

    Quiver() = default;
    /// Throws InputError on duplicate ids or arrows with undeclared endpoints.
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    /// Canonical (natural-sorted) vertex ids.
    const std::vector<std::string> &vertices() const { return vertices_; }
    const std::vector<std::string> &declared_vertices() const { return declared_; }
    /// Arrows sorted naturally by id, endpoints as canonical indices.
    const std::vector<IndexedArrow> &arrows() const { return arrows_; }
    std::size_t index_of(std::string_view vertex) const;
    std::optional<std::size_t> find(std::string_view vertex) const;

    bool acyclic() const { return acyclic_; }
    bool connected() const;
    bool has_loops() const;
    /// Number of arrows i -> j.
    std::int64_t arrow_count(std::size_t i, std::size_t j) const;
    /// Vertices in an order where every arrow goes forward. Throws
    /// PreconditionError on oriented cycles.
    std::vector<std::size_t> topological_order() const;
    /// Whether a path with at least two arrows runs from i to j.
    bool has_long_path(std::size_t i, std::size_t j) const;

    /// Reorders values given in declared vertex order into canonical order.
    std::vector<std::int64_t> from_declared(const std::vector<std::int64_t> &declared_values) const;

    /// Same vertex and arrow sets (declaration order ignored).
    friend bool operator==(const Quiver &a, const Quiver &b) {
        if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size())
            return false;
        for (std::size_t k = 0; k < a.arrows_.size(); ++k) {
            const auto &x = a.arrows_[k];
            const auto &y = b.arrows_[k];
            if (x.id != y.id || x.tail != y.tail || x.head != y.head)
                return false;
        }
        return true;
    }

  private:
    std::vector<std::string> declared_;
    std::vector<std::string> vertices_;
    std::vector<IndexedArrow> arrows_;
    std::map<std::string, std::size_t, std::less<>> index_;
    bool acyclic_ = true;
};


/// A quiver together with the counts r(i,j) of a minimal relation set from i
/// to j (the dimension of Ext^2(S_i, S_j)).
class BoundQuiverPresentation {
  public:
    BoundQuiverPresentation() = default;
    explicit BoundQuiverPresentation(Quiver q) : quiver_(std::move(q)) {}
    /// Throws InputError if some r(i,j) > 0 has no path of length >= 2 from i to j.
    BoundQuiverPresentation(Quiver q, std::map<std::pair<std::size_t, std::size_t>, std::int64_t> relation_counts);

    const Quiver &quiver() const { return quiver_; }
    std::int64_t relation_count(std::size_t i, std::size_t j) const;
    const std::map<std::pair<std::size_t, std::size_t>, std::int64_t> &relation_counts() const { return r_; }
    bool is_path_algebra() const { return r_.empty(); }

  private:
    Quiver quiver_;
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> r_;
};

/// Parses the text format:
///
///     quiver
///     vertices: v1 v2 ...
///     arrow <id>: <tail> -> <head>
///     relations <tail> -> <head>: <count>     (optional)
///
/// Blank lines and '#' comments are ignored.
BoundQuiverPresentation parse_quiver(std::string_view text);

/// Inverse of parse_quiver (declared vertex order kept).
std::string print_quiver(const BoundQuiverPresentation &p);
std::string print_quiver(const Quiver &q);

/// E with <d,e> = d^T E e, E[i][j] = delta_ij - #{arrows i->j} + r(i,j).
class EulerMatrix {
  public:
    EulerMatrix() = default;
    explicit EulerMatrix(const Quiver &q);
    explicit EulerMatrix(const BoundQuiverPresentation &p);
    explicit EulerMatrix(IntMatrix m);

    std::size_t size() const { return m_.rows(); }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const IntMatrix &matrix() const { return m_; }
    /// E + E^T.
    IntMatrix symmetrized() const;
    std::size_t hash() const;
    friend bool operator==(const EulerMatrix &, const EulerMatrix &) = default;

  private:
    IntMatrix m_;
};

std::int64_t euler_form(const EulerMatrix &E, const DimVector &d, const DimVector &e);
std::int64_t tits_form(const EulerMatrix &E, const DimVector &d);
std::int64_t theta_of(const Weight &theta, const DimVector &d);

struct CanonicalWeights {
    Weight left;  ///< <d, .>
    Weight right; ///< -<., d>
    Weight theta; ///< <d, .> - <., d>
};
CanonicalWeights canonical_weights(const EulerMatrix &E, const DimVector &d);

/// The weight <d, .> alone.
Weight left_weight(const EulerMatrix &E, const DimVector &d);
/// The weight -<., d> alone.
Weight right_weight(const EulerMatrix &E, const DimVector &d);

enum class RepresentationType { finite, tame_infinite, wild };
std::string to_string(RepresentationType t);

struct Classification {
    RepresentationType type = RepresentationType::wild;
    /// "A3", "D~4", ... ; empty for wild quivers.
    std::string diagram;
};

/// Dynkin / Euclidean / wild by isomorphism of the underlying graph against
/// the ADE and extended ADE catalogues, cross-checked against the signature of
/// the symmetrized Tits form. Requires a connected acyclic quiver.
Classification classify_path_algebra(const Quiver &q);

enum class FormSignature { positive_definite, semidefinite_corank1, other };
/// Signature class of a symmetric integer matrix (exact LDL^T).
FormSignature symmetric_signature(const IntMatrix &b);

/// The indivisible positive generator of the radical of E + E^T on a
/// Euclidean quiver.
DimVector null_root(const Quiver &q);

/// Standard quivers used throughout tests, examples and the CLI. Vertex ids
/// are "1".."n"; arrows point from the smaller to the larger id.
namespace catalogue {
Quiver kronecker(int arrows);
Quiver type_a(int n);
Quiver type_d(int n);
Quiver type_e(int n);
Quiver extended_a(int n);
Quiver extended_d(int n);
Quiver extended_e(int n);
/// Center "1" and arms of the given lengths.
Quiver star(const std::vector<int> &arm_lengths);
/// Every Euclidean diagram up to the given rank (for A~ and D~), plus E~6..8.
std::vector<std::pair<std::string, Quiver>> euclidean(int max_rank);
} // namespace catalogue

} // namespace quiverinv

template <> struct std::hash<quiverinv::EulerMatrix> {
    std::size_t operator()(const quiverinv::EulerMatrix &e) const noexcept { return e.hash(); }
};
