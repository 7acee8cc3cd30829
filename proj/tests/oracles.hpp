#pragma once

// Test-side reference computations. Nothing here calls the Schofield
// recursion; generic values come from sampling concrete representations.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "quiverinv/generic_rep.hpp"
#include "quiverinv/quiver.hpp"

namespace oracle {

using namespace quiverinv;

/// Minimum hom/ext over random pairs: the generic value with overwhelming probability.
inline HomExt sampled_hom_ext(const Quiver &q, const DimVector &a, const DimVector &b, std::uint64_t seed,
                              int samples = 12) {
    std::mt19937_64 rng(seed);
    HomExt best{INT64_MAX, INT64_MAX};
    for (int s = 0; s < samples; ++s) {
        auto V = random_representation(q, a, rng);
        auto W = random_representation(q, b, rng);
        auto he = hom_ext_concrete(q, V, W);
        best.hom = std::min(best.hom, he.hom);
        best.ext = std::min(best.ext, he.ext);
    }
    return best;
}

/// Generic End dimension of one random representation (min over a few).
inline std::int64_t sampled_end(const Quiver &q, const DimVector &d, std::uint64_t seed, int samples = 6) {
    std::mt19937_64 rng(seed);
    std::int64_t best = INT64_MAX;
    for (int s = 0; s < samples; ++s) {
        auto V = random_representation(q, d, rng);
        best = std::min(best, hom_ext_concrete(q, V, V).hom);
    }
    return best;
}

/// Canonical decomposition by exhaustive search over multisets of nonzero
/// parts: every part Schur (sampled End = 1), all pairs (including a part
/// with itself when repeated) with sampled ext = 0 in both directions.
/// Returns every valid decomposition as a sorted list of parts.
inline std::vector<std::vector<DimVector>> all_ext_orthogonal_decompositions(const Quiver &q, const DimVector &d) {
    std::vector<DimVector> candidates;
    for_each_in_box(d, [&](const DimVector &v) {
        if (!v.is_zero())
            candidates.push_back(v);
    });
    std::map<DimVector, bool> schur;
    std::map<std::pair<DimVector, DimVector>, bool> orth;
    auto is_schur = [&](const DimVector &v) {
        auto it = schur.find(v);
        if (it != schur.end())
            return it->second;
        return schur[v] = (sampled_end(q, v, 7) == 1);
    };
    auto ext_zero = [&](const DimVector &x, const DimVector &y) {
        auto key = std::make_pair(x, y);
        auto it = orth.find(key);
        if (it != orth.end())
            return it->second;
        return orth[key] = (sampled_hom_ext(q, x, y, 11).ext == 0 && sampled_hom_ext(q, y, x, 13).ext == 0);
    };
    std::vector<std::vector<DimVector>> out;
    std::vector<DimVector> cur;
    std::function<void(std::size_t, DimVector)> rec = [&](std::size_t start, DimVector rest) {
        if (rest.is_zero()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t k = start; k < candidates.size(); ++k) {
            const auto &c = candidates[k];
            if (!c.leq(rest) || !is_schur(c))
                continue;
            bool ok = true;
            for (const auto &p : cur)
                if (!ext_zero(p, c)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            cur.push_back(c);
            rec(k, rest - c);
            cur.pop_back();
        }
    };
    rec(0, d);
    return out;
}

} // namespace oracle
