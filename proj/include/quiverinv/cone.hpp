#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "quiverinv/lattice.hpp"

namespace quiverinv {

/// Integer linear functional on weight space: theta -> sum f(i) theta(i).
using Functional = std::vector<std::int64_t>;

/// A codimension-one face of a WeightCone.
struct Facet {
    /// Indices into WeightCone::inequalities() vanishing on the whole facet.
    std::vector<std::size_t> defining;
    /// Extreme rays of the cone lying on the facet.
    std::vector<Weight> rays;
    /// Sum of the facet's rays: a lattice point of the relative interior.
    Weight interior_point;
};

/// Rational polyhedral cone {theta : e(theta) = 0 for e in equalities,
/// f(theta) <= 0 for f in inequalities}. Generators (lineality basis plus
/// extreme rays) come from an exact double-description pass over the
/// constraints; facets and their interior points are derived from them.
class WeightCone {
  public:
    WeightCone() = default;
    WeightCone(std::size_t ambient_dim, std::vector<Functional> equalities, std::vector<Functional> inequalities);

    std::size_t ambient_dimension() const { return n_; }
    std::size_t dimension() const { return dim_; }
    const std::vector<Functional> &equalities() const { return eqs_; }
    const std::vector<Functional> &inequalities() const { return ineqs_; }
    /// Extreme rays modulo the lineality space, sorted.
    const std::vector<Weight> &rays() const { return rays_; }
    /// Basis of the largest linear subspace inside the cone.
    const std::vector<Weight> &lineality() const { return lineality_; }
    /// Sorted by defining set.
    const std::vector<Facet> &facets() const { return facets_; }

    bool contains(const Weight &theta) const;
    /// Whether every generator of `other` lies in this cone.
    bool contains(const WeightCone &other) const;
    /// Same point set.
    bool same_set(const WeightCone &other) const { return contains(other) && other.contains(*this); }

    /// The face cut out by additional equalities (a new cone over the same space).
    WeightCone with_equalities(const std::vector<Functional> &extra) const;

    nlohmann::json to_json() const;

  private:
    void compute();

    std::size_t n_ = 0;
    std::size_t dim_ = 0;
    std::vector<Functional> eqs_;
    std::vector<Functional> ineqs_;
    std::vector<Weight> rays_;
    std::vector<Weight> lineality_;
    std::vector<Facet> facets_;
};

} // namespace quiverinv
