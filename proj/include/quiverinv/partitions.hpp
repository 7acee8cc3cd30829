#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace quiverinv {

/// Weakly decreasing list of positive parts.
class Partition {
  public:
    Partition() = default;
    /// Trailing zeros are dropped; throws InputError if not weakly decreasing
    /// or if a part is negative.
    explicit Partition(std::vector<int> parts);

    const std::vector<int> &parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    /// Row r (0-based), 0 past the last part.
    int operator[](std::size_t r) const { return r < parts_.size() ? parts_[r] : 0; }
    bool empty() const { return parts_.empty(); }
    std::string str() const;

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &a, const Partition &b) { return a.parts_ <=> b.parts_; }

  private:
    std::vector<int> parts_;
};

/// All partitions of n with at most max_rows rows (max_rows < 0: unbounded),
/// in reverse lexicographic order.
std::vector<Partition> partitions_of(int n, int max_rows = -1);

/// c^nu_{lambda mu}: Littlewood-Richardson tableaux of shape nu/lambda and
/// content mu, counted cell by cell with the lattice-word condition.
std::uint64_t lr_coefficient(const Partition &lambda, const Partition &mu, const Partition &nu);

/// Schur-function expansion {nu: multiplicity}.
using SchurExpansion = std::map<Partition, std::uint64_t>;

/// s_lambda * s_mu restricted to partitions with at most max_rows rows
/// (max_rows < 0: unbounded). Built label by label as horizontal strips with
/// the lattice condition on row counts; cached.
SchurExpansion lr_product(const Partition &lambda, const Partition &mu, int max_rows = -1);

/// Product of several Schur functions, truncated to max_rows rows.
SchurExpansion schur_product(const std::vector<Partition> &factors, int max_rows);

/// Enables/disables the product cache (results are identical).
void set_lr_cache(bool enabled);
void clear_lr_cache();

} // namespace quiverinv
