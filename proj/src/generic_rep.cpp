#include "quiverinv/generic_rep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "quiverinv/errors.hpp"

namespace quiverinv {

// ------------------------------------------------------ representations

Representation make_representation(const Quiver &q, DimVector d, std::vector<RatMatrix> matrices) {
    require_dimension(d, q.num_vertices());
    if (matrices.size() != q.num_arrows())
        throw InputError("representation needs one matrix per arrow");
    for (std::size_t k = 0; k < matrices.size(); ++k) {
        const auto &a = q.arrows()[k];
        const auto &m = matrices[k];
        if (m.rows() != static_cast<std::size_t>(d[a.head]) || m.cols() != static_cast<std::size_t>(d[a.tail]))
            throw InputError("matrix for arrow '" + a.id + "' has shape " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", expected " + std::to_string(d[a.head]) + "x" +
                             std::to_string(d[a.tail]));
    }
    return Representation{std::move(d), std::move(matrices)};
}

namespace {
const std::array<Rational, 16> &sample_pool() {
    static const std::array<Rational, 16> pool = {
        Rational(1),     Rational(-1),   Rational(2),     Rational(-2),   Rational(3),    Rational(-3),
        Rational(5),     Rational(-4),   Rational(1, 2),  Rational(-1, 2), Rational(1, 3), Rational(-2, 3),
        Rational(3, 2),  Rational(-5, 2), Rational(7, 3), Rational(4, 5)};
    return pool;
}
} // namespace

Representation random_representation(const Quiver &q, const DimVector &d, std::mt19937_64 &rng) {
    require_dimension(d, q.num_vertices());
    const auto &pool = sample_pool();
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<RatMatrix> mats;
    for (auto &a : q.arrows()) {
        RatMatrix m(static_cast<std::size_t>(d[a.head]), static_cast<std::size_t>(d[a.tail]));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = pool[pick(rng)];
        mats.push_back(std::move(m));
    }
    return Representation{d, std::move(mats)};
}

nlohmann::json to_json(const Quiver &q, const Representation &rep) {
    nlohmann::json mats = nlohmann::json::object();
    for (std::size_t k = 0; k < q.num_arrows(); ++k) {
        const auto &m = rep.matrices[k];
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < m.cols(); ++j)
                row.push_back(to_string(m(i, j)));
            rows.push_back(std::move(row));
        }
        mats[q.arrows()[k].id] = std::move(rows);
    }
    return {{"dimension", rep.dimension.values()}, {"matrices", std::move(mats)}};
}

Representation representation_from_json(const Quiver &q, const nlohmann::json &j) {
    try {
        DimVector d(j.at("dimension").get<std::vector<std::int64_t>>());
        require_dimension(d, q.num_vertices());
        const auto &mats = j.at("matrices");
        std::vector<RatMatrix> out;
        for (auto &a : q.arrows()) {
            const std::size_t r = static_cast<std::size_t>(d[a.head]), c = static_cast<std::size_t>(d[a.tail]);
            RatMatrix m(r, c);
            const auto &rows = mats.at(a.id);
            if (rows.size() != r)
                throw InputError("arrow '" + a.id + "': wrong number of rows");
            for (std::size_t i = 0; i < r; ++i) {
                if (rows[i].size() != c)
                    throw InputError("arrow '" + a.id + "': wrong number of columns");
                for (std::size_t k = 0; k < c; ++k) {
                    const auto &x = rows[i][k];
                    m(i, k) = x.is_string() ? parse_rational(x.get<std::string>())
                                            : Rational(x.get<std::int64_t>());
                }
            }
            out.push_back(std::move(m));
        }
        if (mats.size() != q.num_arrows())
            throw InputError("representation lists matrices for unknown arrows");
        return make_representation(q, std::move(d), std::move(out));
    } catch (const nlohmann::json::exception &e) {
        throw InputError(std::string("malformed representation JSON: ") + e.what());
    }
}

HomExt hom_ext_concrete(const Quiver &q, const Representation &V, const Representation &W) {
    make_representation(q, V.dimension, V.matrices);
    make_representation(q, W.dimension, W.matrices);
    const auto &d = V.dimension;
    const auto &e = W.dimension;
    const std::size_t n = q.num_vertices();

    // Column block for phi(i): e(i) x d(i) entries, row-major.
    std::vector<std::size_t> col_off(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        col_off[i + 1] = col_off[i] + static_cast<std::size_t>(e[i] * d[i]);
    std::vector<std::size_t> row_off(q.num_arrows() + 1, 0);
    for (std::size_t k = 0; k < q.num_arrows(); ++k) {
        const auto &a = q.arrows()[k];
        row_off[k + 1] = row_off[k] + static_cast<std::size_t>(e[a.head] * d[a.tail]);
    }
    const std::size_t cols = col_off[n], rows = row_off[q.num_arrows()];
    RatMatrix m(rows, cols);
    for (std::size_t k = 0; k < q.num_arrows(); ++k) {
        const auto &a = q.arrows()[k];
        const auto &Va = V.matrices[k];
        const auto &Wa = W.matrices[k];
        const std::size_t dt = static_cast<std::size_t>(d[a.tail]), dh = static_cast<std::size_t>(d[a.head]);
        const std::size_t et = static_cast<std::size_t>(e[a.tail]), eh = static_cast<std::size_t>(e[a.head]);
        // entry (p, c) of phi(ha) V(a) - W(a) phi(ta), p < e(ha), c < d(ta)
        for (std::size_t p = 0; p < eh; ++p)
            for (std::size_t c = 0; c < dt; ++c) {
                const std::size_t row = row_off[k] + p * dt + c;
                for (std::size_t s = 0; s < dh; ++s) // phi(ha)[p][s] * V(a)[s][c]
                    m(row, col_off[a.head] + p * dh + s) += Va(s, c);
                for (std::size_t s = 0; s < et; ++s) // W(a)[p][s] * phi(ta)[s][c]
                    m(row, col_off[a.tail] + s * dt + c) -= Wa(p, s);
            }
    }
    const auto r = static_cast<std::int64_t>(rank(m));
    return {static_cast<std::int64_t>(cols) - r, static_cast<std::int64_t>(rows) - r};
}

// ------------------------------------------------------ Schofield recursion

void require_acyclic_path_algebra(const EulerMatrix &E) {
    const std::size_t n = E.size();
    std::vector<int> indeg(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (E(i, i) != 1)
            throw PreconditionError("Euler matrix has a loop or relation at a vertex; a path algebra of an acyclic "
                                    "quiver is required");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (E(i, j) > 0)
                throw PreconditionError("Euler matrix carries relations; a path algebra is required");
            if (E(i, j) < 0)
                ++indeg[j];
        }
    }
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0)
            ready.push_back(i);
    std::size_t seen = 0;
    while (!ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        ++seen;
        for (std::size_t j = 0; j < n; ++j)
            if (j != v && E(v, j) < 0 && --indeg[j] == 0)
                ready.push_back(j);
    }
    if (seen != n)
        throw PreconditionError("quiver has an oriented cycle");
}

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<DimVector, DimVector> &p) const noexcept {
        return p.first.hash() * 31 + p.second.hash();
    }
};

struct MemoTables {
    std::mutex mu;
    std::unordered_map<std::pair<DimVector, DimVector>, std::int64_t, PairHash> ext;
    std::unordered_map<DimVector, std::shared_ptr<const std::vector<DimVector>>> subdims;
    std::unordered_map<DimVector, std::shared_ptr<const std::vector<DimVector>>> decomposition;
};

std::atomic<bool> g_memo_enabled{true};
std::mutex g_registry_mu;
std::unordered_map<EulerMatrix, std::shared_ptr<MemoTables>> g_registry;

std::shared_ptr<MemoTables> tables_for(const EulerMatrix &E) {
    std::lock_guard lock(g_registry_mu);
    auto &slot = g_registry[E];
    if (!slot)
        slot = std::make_shared<MemoTables>();
    return slot;
}

class SchofieldOracle {
  public:
    explicit SchofieldOracle(const EulerMatrix &E)
        : E_(E), memo_(g_memo_enabled.load() ? tables_for(E) : nullptr) {}

    std::int64_t ext(const DimVector &a, const DimVector &b) {
        if (a.is_zero() || b.is_zero())
            return 0;
        if (memo_) {
            std::lock_guard lock(memo_->mu);
            auto it = memo_->ext.find({a, b});
            if (it != memo_->ext.end())
                return it->second;
        }
        std::int64_t best = 0; // a' = 0
        const auto subs = subdims_ptr(a);
        for (const auto &sub : *subs)
            best = std::max(best, -euler_form(E_, sub, b));
        if (memo_) {
            std::lock_guard lock(memo_->mu);
            memo_->ext.emplace(std::make_pair(a, b), best);
        }
        return best;
    }

    /// ext(sub, rest) == 0, stopping at the first witness to the contrary.
    bool embeds(const DimVector &sub, const DimVector &rest) {
        if (euler_form(E_, sub, rest) < 0)
            return false;
        if (memo_) {
            std::lock_guard lock(memo_->mu);
            auto it = memo_->ext.find({sub, rest});
            if (it != memo_->ext.end())
                return it->second == 0;
        }
        const auto subs = subdims_ptr(sub);
        for (const auto &s : *subs)
            if (euler_form(E_, s, rest) < 0)
                return false;
        return true;
    }

    std::shared_ptr<const std::vector<DimVector>> subdims_ptr(const DimVector &d) {
        if (memo_) {
            std::lock_guard lock(memo_->mu);
            auto it = memo_->subdims.find(d);
            if (it != memo_->subdims.end())
                return it->second;
        }
        if (box_size(d, kMaxBoxSize) > kMaxBoxSize)
            throw BudgetError("subdimension box for " + d.str() + " exceeds " + std::to_string(kMaxBoxSize));
        auto out = std::make_shared<std::vector<DimVector>>();
        for_each_in_box(d, [&](const DimVector &sub) {
            if (sub.is_zero() || sub == d || embeds(sub, d - sub))
                out->push_back(sub);
        });
        if (memo_) {
            std::lock_guard lock(memo_->mu);
            memo_->subdims.emplace(d, out);
        }
        return out;
    }

    std::vector<DimVector> decompose(const DimVector &d) {
        if (d.is_zero())
            return {};
        if (memo_) {
            std::lock_guard lock(memo_->mu);
            auto it = memo_->decomposition.find(d);
            if (it != memo_->decomposition.end())
                return *it->second;
        }
        std::vector<DimVector> parts;
        if (auto sub = first_split(d)) {
            parts = decompose(*sub);
            auto more = decompose(d - *sub);
            parts.insert(parts.end(), more.begin(), more.end());
        } else {
            parts.push_back(d);
        }
        if (memo_) {
            std::lock_guard lock(memo_->mu);
            memo_->decomposition.emplace(d, std::make_shared<const std::vector<DimVector>>(parts));
        }
        return parts;
    }

    std::int64_t hom(const DimVector &a, const DimVector &b) { return euler_form(E_, a, b) + ext(a, b); }

    /// Lexicographically first proper d' with ext(d', d-d') = ext(d-d', d') = 0.
    /// A general representation of dimension d splits accordingly, so none
    /// exists exactly when d is a Schur root.
    std::optional<DimVector> first_split(const DimVector &d) {
        const auto subs = subdims_ptr(d);
        for (const auto &sub : *subs) {
            if (sub.is_zero() || sub == d)
                continue;
            if (ext(d - sub, sub) == 0)
                return sub;
        }
        return std::nullopt;
    }

  private:
    const EulerMatrix &E_;
    std::shared_ptr<MemoTables> memo_;
};

void check_pair(const EulerMatrix &E, const DimVector &a, const DimVector &b) {
    require_dimension(a, E.size());
    require_dimension(b, E.size());
}

} // namespace

HomExt generic_hom_ext(const EulerMatrix &E, const DimVector &a, const DimVector &b) {
    require_acyclic_path_algebra(E);
    check_pair(E, a, b);
    SchofieldOracle oracle(E);
    const auto ext = oracle.ext(a, b);
    return {euler_form(E, a, b) + ext, ext};
}

std::vector<DimVector> generic_subdims(const EulerMatrix &E, const DimVector &d) {
    require_acyclic_path_algebra(E);
    require_dimension(d, E.size());
    SchofieldOracle oracle(E);
    return *oracle.subdims_ptr(d);
}

bool is_schur_root(const EulerMatrix &E, const DimVector &d) {
    require_acyclic_path_algebra(E);
    require_dimension(d, E.size());
    if (d.is_zero())
        throw PreconditionError("is_schur_root: the zero vector is not a root");
    SchofieldOracle oracle(E);
    return !oracle.first_split(d).has_value();
}

std::string to_string(RootClass c) {
    switch (c) {
    case RootClass::real:
        return "real";
    case RootClass::isotropic:
        return "isotropic";
    case RootClass::imaginary_nonisotropic:
        return "imaginary_nonisotropic";
    }
    return "?";
}

RootClass classify_root(const EulerMatrix &E, const DimVector &d) {
    const auto q = tits_form(E, d);
    if (q > 0)
        return RootClass::real;
    return q == 0 ? RootClass::isotropic : RootClass::imaginary_nonisotropic;
}

std::vector<Summand> aggregate_summands(const EulerMatrix &E, const std::vector<DimVector> &parts) {
    std::map<DimVector, std::int64_t> counts;
    for (auto &p : parts)
        ++counts[p];
    std::vector<Summand> out;
    for (auto &[root, m] : counts)
        out.push_back({root, m, classify_root(E, root)});
    return out;
}

std::string GenericDecomposition::summary() const {
    std::string s;
    for (auto it = summands.rbegin(); it != summands.rend(); ++it)
        for (std::int64_t k = 0; k < it->multiplicity; ++k) {
            if (!s.empty())
                s += "+";
            s += it->root.str();
        }
    return s.empty() ? "0" : s;
}

GenericDecomposition canonical_decomposition(const EulerMatrix &E, const DimVector &d) {
    require_acyclic_path_algebra(E);
    require_dimension(d, E.size());
    if (box_size(d, kMaxBoxSize) > kMaxBoxSize)
        throw BudgetError("subdimension box for " + d.str() + " exceeds " + std::to_string(kMaxBoxSize));
    SchofieldOracle oracle(E);
    return GenericDecomposition{aggregate_summands(E, oracle.decompose(d))};
}

void set_memoization(bool enabled) { g_memo_enabled = enabled; }
bool memoization_enabled() { return g_memo_enabled; }

void clear_memo_tables() {
    std::lock_guard lock(g_registry_mu);
    g_registry.clear();
}

} // namespace quiverinv
