#include "quiverinv/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "quiverinv/errors.hpp"

namespace quiverinv {

bool natural_less(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    while (i < a.size() && j < b.size()) {
        const bool da = is_digit(a[i]), db = is_digit(b[j]);
        if (da && db) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && is_digit(a[ie]))
                ++ie;
            while (je < b.size() && is_digit(b[je]))
                ++je;
            // compare numerically without overflow: strip leading zeros, then length, then text
            auto strip = [](std::string_view s) {
                std::size_t k = 0;
                while (k + 1 < s.size() && s[k] == '0')
                    ++k;
                return s.substr(k);
            };
            auto na = strip(a.substr(i, ie - i)), nb = strip(b.substr(j, je - j));
            if (na.size() != nb.size())
                return na.size() < nb.size();
            if (na != nb)
                return na < nb;
            if (ie - i != je - j)
                return ie - i < je - j;
            i = ie;
            j = je;
        } else if (da != db) {
            return da; // numbers sort before text
        } else {
            if (a[i] != b[j])
                return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

// ---------------------------------------------------------------- Quiver

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows) : declared_(std::move(vertices)) {
    vertices_ = declared_;
    std::sort(vertices_.begin(), vertices_.end(),
              [](const std::string &x, const std::string &y) { return natural_less(x, y); });
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].empty())
            throw InputError("empty vertex id");
        if (!index_.emplace(vertices_[i], i).second)
            throw InputError("duplicate vertex id '" + vertices_[i] + "'");
    }
    std::set<std::string> arrow_ids;
    for (auto &a : arrows) {
        if (!arrow_ids.insert(a.id).second)
            throw InputError("duplicate arrow id '" + a.id + "'");
        auto t = find(a.tail), h = find(a.head);
        if (!t || !h)
            throw InputError("arrow '" + a.id + "' uses undeclared vertex");
        arrows_.push_back({a.id, *t, *h});
    }
    std::sort(arrows_.begin(), arrows_.end(),
              [](const IndexedArrow &x, const IndexedArrow &y) { return natural_less(x.id, y.id); });

    // Kahn's algorithm decides acyclicity.
    std::vector<int> indeg(vertices_.size(), 0);
    for (auto &a : arrows_)
        ++indeg[a.head];
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (indeg[i] == 0)
            ready.push_back(i);
    std::size_t seen = 0;
    while (!ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        ++seen;
        for (auto &a : arrows_)
            if (a.tail == v && --indeg[a.head] == 0)
                ready.push_back(a.head);
    }
    acyclic_ = seen == vertices_.size();
}

std::optional<std::size_t> Quiver::find(std::string_view vertex) const {
    auto it = index_.find(vertex);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t Quiver::index_of(std::string_view vertex) const {
    auto i = find(vertex);
    if (!i)
        throw InputError("unknown vertex '" + std::string(vertex) + "'");
    return *i;
}

bool Quiver::connected() const {
    if (vertices_.empty())
        return false;
    std::vector<std::size_t> parent(vertices_.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    for (auto &a : arrows_)
        parent[root(a.tail)] = root(a.head);
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        if (root(i) != root(0))
            return false;
    return true;
}

bool Quiver::has_loops() const {
    return std::any_of(arrows_.begin(), arrows_.end(), [](const IndexedArrow &a) { return a.tail == a.head; });
}

std::int64_t Quiver::arrow_count(std::size_t i, std::size_t j) const {
    return std::count_if(arrows_.begin(), arrows_.end(),
                         [&](const IndexedArrow &a) { return a.tail == i && a.head == j; });
}

std::vector<std::size_t> Quiver::topological_order() const {
    if (!acyclic_)
        throw PreconditionError("quiver has an oriented cycle");
    std::vector<int> indeg(vertices_.size(), 0);
    for (auto &a : arrows_)
        ++indeg[a.head];
    // Smallest ready index first, for a deterministic order.
    std::set<std::size_t> ready;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (indeg[i] == 0)
            ready.insert(i);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        auto v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (auto &a : arrows_)
            if (a.tail == v && --indeg[a.head] == 0)
                ready.insert(a.head);
    }
    return order;
}

bool Quiver::has_long_path(std::size_t i, std::size_t j) const {
    // Vertices reachable from i by >= 1 arrow, then one more step at least.
    std::vector<bool> one(vertices_.size(), false);
    std::vector<std::size_t> stack;
    for (auto &a : arrows_)
        if (a.tail == i && !one[a.head]) {
            one[a.head] = true;
            stack.push_back(a.head);
        }
    std::vector<bool> two(vertices_.size(), false);
    std::vector<std::size_t> frontier;
    for (auto v : stack)
        for (auto &a : arrows_)
            if (a.tail == v && !two[a.head]) {
                two[a.head] = true;
                frontier.push_back(a.head);
            }
    while (!frontier.empty()) {
        auto v = frontier.back();
        frontier.pop_back();
        for (auto &a : arrows_)
            if (a.tail == v && !two[a.head]) {
                two[a.head] = true;
                frontier.push_back(a.head);
            }
    }
    return two[j];
}

std::vector<std::int64_t> Quiver::from_declared(const std::vector<std::int64_t> &declared_values) const {
    if (declared_values.size() != declared_.size())
        throw InputError("expected " + std::to_string(declared_.size()) + " entries, got " +
                         std::to_string(declared_values.size()));
    std::vector<std::int64_t> out(declared_.size());
    for (std::size_t k = 0; k < declared_.size(); ++k)
        out[index_of(declared_[k])] = declared_values[k];
    return out;
}

// ------------------------------------------------- presentation, parsing

BoundQuiverPresentation::BoundQuiverPresentation(
    Quiver q, std::map<std::pair<std::size_t, std::size_t>, std::int64_t> relation_counts)
    : quiver_(std::move(q)) {
    for (auto &[ij, r] : relation_counts) {
        if (r < 0)
            throw InputError("negative relation count");
        if (r == 0)
            continue;
        if (ij.first >= quiver_.num_vertices() || ij.second >= quiver_.num_vertices())
            throw InputError("relation count on unknown vertex");
        if (!quiver_.has_long_path(ij.first, ij.second))
            throw InputError("relations from '" + quiver_.vertices()[ij.first] + "' to '" +
                             quiver_.vertices()[ij.second] + "' but no path of length >= 2 joins them");
        r_[ij] = r;
    }
}

std::int64_t BoundQuiverPresentation::relation_count(std::size_t i, std::size_t j) const {
    auto it = r_.find({i, j});
    return it == r_.end() ? 0 : it->second;
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(const std::string &s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w)
        out.push_back(w);
    return out;
}

// "<tail> -> <head>"
std::pair<std::string, std::string> parse_edge(const std::string &s, std::size_t line) {
    auto arrow = s.find("->");
    if (arrow == std::string::npos)
        throw InputError("line " + std::to_string(line) + ": expected '<tail> -> <head>'");
    auto t = trim(s.substr(0, arrow)), h = trim(s.substr(arrow + 2));
    if (t.empty() || h.empty() || split_ws(t).size() != 1 || split_ws(h).size() != 1)
        throw InputError("line " + std::to_string(line) + ": malformed endpoints");
    return {t, h};
}

} // namespace

BoundQuiverPresentation parse_quiver(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    bool header = false, have_vertices = false;
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<std::tuple<std::string, std::string, std::int64_t>> relations;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty())
            continue;
        if (!header) {
            if (line != "quiver")
                throw InputError("line " + std::to_string(lineno) + ": expected 'quiver' header");
            header = true;
            continue;
        }
        if (line.rfind("vertices:", 0) == 0) {
            if (have_vertices)
                throw InputError("line " + std::to_string(lineno) + ": duplicate vertices line");
            vertices = split_ws(line.substr(9));
            have_vertices = true;
        } else if (line.rfind("arrow ", 0) == 0) {
            auto colon = line.find(':');
            if (colon == std::string::npos)
                throw InputError("line " + std::to_string(lineno) + ": expected 'arrow <id>: <tail> -> <head>'");
            auto id = trim(line.substr(6, colon - 6));
            if (id.empty() || split_ws(id).size() != 1)
                throw InputError("line " + std::to_string(lineno) + ": malformed arrow id");
            auto [t, h] = parse_edge(line.substr(colon + 1), lineno);
            arrows.push_back({id, t, h});
        } else if (line.rfind("relations ", 0) == 0) {
            auto colon = line.rfind(':');
            if (colon == std::string::npos)
                throw InputError("line " + std::to_string(lineno) + ": expected 'relations <i> -> <j>: <count>'");
            auto [t, h] = parse_edge(line.substr(10, colon - 10), lineno);
            auto count = trim(line.substr(colon + 1));
            std::int64_t r = 0;
            try {
                std::size_t used = 0;
                r = std::stoll(count, &used);
                if (used != count.size())
                    throw std::invalid_argument(count);
            } catch (const std::exception &) {
                throw InputError("line " + std::to_string(lineno) + ": bad relation count '" + count + "'");
            }
            relations.emplace_back(t, h, r);
        } else {
            throw InputError("line " + std::to_string(lineno) + ": unrecognized '" + line + "'");
        }
    }
    if (!header)
        throw InputError("empty quiver file");
    if (!have_vertices)
        throw InputError("missing 'vertices:' line");
    Quiver q(vertices, arrows);
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> r;
    for (auto &[t, h, c] : relations)
        r[{q.index_of(t), q.index_of(h)}] += c;
    return BoundQuiverPresentation(std::move(q), std::move(r));
}

std::string print_quiver(const BoundQuiverPresentation &p) {
    const auto &q = p.quiver();
    std::ostringstream out;
    out << "quiver\nvertices:";
    for (auto &v : q.declared_vertices())
        out << ' ' << v;
    out << '\n';
    for (auto &a : q.arrows())
        out << "arrow " << a.id << ": " << q.vertices()[a.tail] << " -> " << q.vertices()[a.head] << '\n';
    for (auto &[ij, r] : p.relation_counts())
        out << "relations " << q.vertices()[ij.first] << " -> " << q.vertices()[ij.second] << ": " << r << '\n';
    return out.str();
}

std::string print_quiver(const Quiver &q) { return print_quiver(BoundQuiverPresentation(q)); }

// ---------------------------------------------------------------- forms

EulerMatrix::EulerMatrix(const Quiver &q) : EulerMatrix(BoundQuiverPresentation(q)) {}

EulerMatrix::EulerMatrix(const BoundQuiverPresentation &p) {
    const auto &q = p.quiver();
    const std::size_t n = q.num_vertices();
    m_ = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m_(i, i) = 1;
    for (auto &a : q.arrows())
        m_(a.tail, a.head) -= 1;
    for (auto &[ij, r] : p.relation_counts())
        m_(ij.first, ij.second) += r;
}

EulerMatrix::EulerMatrix(IntMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols())
        throw InputError("Euler matrix must be square");
}

IntMatrix EulerMatrix::symmetrized() const {
    IntMatrix b(size(), size());
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            b(i, j) = m_(i, j) + m_(j, i);
    return b;
}

std::size_t EulerMatrix::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ size();
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            h = (h ^ static_cast<std::size_t>(m_(i, j) + 1000003 * (i * size() + j))) * 0x100000001b3ULL;
    return h;
}

std::int64_t euler_form(const EulerMatrix &E, const DimVector &d, const DimVector &e) {
    const std::size_t n = E.size();
    if (d.size() != n || e.size() != n)
        throw InputError("euler_form: vectors must have " + std::to_string(n) + " entries");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            s += d[i] * E(i, j) * e[j];
    }
    return s;
}

std::int64_t tits_form(const EulerMatrix &E, const DimVector &d) { return euler_form(E, d, d); }

std::int64_t theta_of(const Weight &theta, const DimVector &d) {
    if (theta.size() != d.size())
        throw InputError("weight and dimension vector have different lengths");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        s += theta[i] * d[i];
    return s;
}

Weight left_weight(const EulerMatrix &E, const DimVector &d) {
    const std::size_t n = E.size();
    if (d.size() != n)
        throw InputError("dimension vector has wrong length");
    Weight w(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            w[j] += d[i] * E(i, j);
    return w;
}

Weight right_weight(const EulerMatrix &E, const DimVector &d) {
    const std::size_t n = E.size();
    if (d.size() != n)
        throw InputError("dimension vector has wrong length");
    Weight w(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w[i] -= E(i, j) * d[j];
    return w;
}

CanonicalWeights canonical_weights(const EulerMatrix &E, const DimVector &d) {
    CanonicalWeights c{left_weight(E, d), right_weight(E, d), {}};
    c.theta = c.left + c.right;
    return c;
}

std::string to_string(RepresentationType t) {
    switch (t) {
    case RepresentationType::finite:
        return "finite";
    case RepresentationType::tame_infinite:
        return "tame_infinite";
    case RepresentationType::wild:
        return "wild";
    }
    return "?";
}

FormSignature symmetric_signature(const IntMatrix &b) {
    const std::size_t n = b.rows();
    RatMatrix m = to_rational(b);
    std::size_t zero_pivots = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const Rational p = m(k, k);
        if (p < 0)
            return FormSignature::other;
        if (p == 0) {
            for (std::size_t j = k + 1; j < n; ++j)
                if (m(k, j) != 0)
                    return FormSignature::other; // a 2x2 minor is negative
            ++zero_pivots;
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0)
                continue;
            Rational f = m(i, k) / p;
            for (std::size_t j = k; j < n; ++j)
                m(i, j) -= f * m(k, j);
        }
    }
    if (zero_pivots == 0)
        return FormSignature::positive_definite;
    return zero_pivots == 1 ? FormSignature::semidefinite_corank1 : FormSignature::other;
}

// ------------------------------------------------------ classification

namespace {

using Graph = std::vector<std::vector<int>>; // symmetric edge multiplicities

Graph underlying_graph(const Quiver &q) {
    Graph g(q.num_vertices(), std::vector<int>(q.num_vertices(), 0));
    for (auto &a : q.arrows()) {
        ++g[a.tail][a.head];
        if (a.tail != a.head)
            ++g[a.head][a.tail];
    }
    return g;
}

std::vector<int> degrees(const Graph &g) {
    std::vector<int> deg;
    for (auto &row : g)
        deg.push_back(std::accumulate(row.begin(), row.end(), 0));
    return deg;
}

bool isomorphic(const Graph &a, const Graph &b) {
    const std::size_t n = a.size();
    if (b.size() != n)
        return false;
    auto da = degrees(a), db = degrees(b);
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return false;
    }
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
        if (i == n)
            return true;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || da[i] != db[j])
                continue;
            bool ok = a[i][i] == b[j][j];
            for (std::size_t k = 0; ok && k < i; ++k)
                ok = a[i][k] == b[j][static_cast<std::size_t>(map[k])];
            if (!ok)
                continue;
            map[i] = static_cast<int>(j);
            used[j] = true;
            if (extend(i + 1))
                return true;
            used[j] = false;
        }
        return false;
    };
    return extend(0);
}

std::vector<std::pair<std::string, Quiver>> catalogue_of_size(std::size_t n) {
    std::vector<std::pair<std::string, Quiver>> c;
    const int k = static_cast<int>(n);
    if (k >= 1)
        c.emplace_back("A" + std::to_string(k), catalogue::type_a(k));
    if (k >= 4)
        c.emplace_back("D" + std::to_string(k), catalogue::type_d(k));
    if (k >= 6 && k <= 8)
        c.emplace_back("E" + std::to_string(k), catalogue::type_e(k));
    if (k >= 2)
        c.emplace_back("A~" + std::to_string(k - 1), catalogue::extended_a(k - 1));
    if (k >= 5)
        c.emplace_back("D~" + std::to_string(k - 1), catalogue::extended_d(k - 1));
    if (k >= 7 && k <= 9)
        c.emplace_back("E~" + std::to_string(k - 1), catalogue::extended_e(k - 1));
    return c;
}

} // namespace

Classification classify_path_algebra(const Quiver &q) {
    if (q.num_vertices() == 0)
        throw PreconditionError("empty quiver");
    if (!q.acyclic())
        throw PreconditionError("classification requires a quiver without oriented cycles");
    if (!q.connected())
        throw PreconditionError("classification requires a connected quiver");

    Classification out;
    const Graph g = underlying_graph(q);
    for (auto &[name, candidate] : catalogue_of_size(q.num_vertices())) {
        if (isomorphic(g, underlying_graph(candidate))) {
            out.type = name.find('~') == std::string::npos ? RepresentationType::finite
                                                           : RepresentationType::tame_infinite;
            out.diagram = name;
            break;
        }
    }

    const auto sig = symmetric_signature(EulerMatrix(q).symmetrized());
    const RepresentationType by_form = sig == FormSignature::positive_definite      ? RepresentationType::finite
                                       : sig == FormSignature::semidefinite_corank1 ? RepresentationType::tame_infinite
                                                                                    : RepresentationType::wild;
    if (by_form != out.type)
        throw InvariantError("graph catalogue says " + to_string(out.type) + " but the Tits form says " +
                             to_string(by_form));
    return out;
}

DimVector null_root(const Quiver &q) {
    if (classify_path_algebra(q).type != RepresentationType::tame_infinite)
        throw PreconditionError("null root requires a Euclidean quiver");
    auto ker = kernel(to_rational(EulerMatrix(q).symmetrized()));
    if (ker.size() != 1)
        throw InvariantError("radical of the symmetrized Tits form is not one-dimensional");
    auto v = primitive_integer(ker[0]);
    if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x < 0; }))
        for (auto &x : v)
            x = -x;
    DimVector d(v);
    if (!d.is_nonnegative())
        throw InvariantError("null root is not sign-coherent");
    return d;
}

// ---------------------------------------------------------------- catalogue

namespace catalogue {

namespace {
std::vector<std::string> numbered(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i)
        v.push_back(std::to_string(i));
    return v;
}

Quiver from_edges(int n, const std::vector<std::pair<int, int>> &edges) {
    std::vector<Arrow> arrows;
    int k = 0;
    for (auto [a, b] : edges) {
        ++k;
        int t = std::min(a, b), h = std::max(a, b);
        arrows.push_back({"a" + std::to_string(k), std::to_string(t), std::to_string(h)});
    }
    return Quiver(numbered(n), arrows);
}
} // namespace

Quiver kronecker(int arrows) {
    std::vector<std::pair<int, int>> e(static_cast<std::size_t>(arrows), {1, 2});
    return from_edges(2, e);
}

Quiver type_a(int n) {
    if (n < 1)
        throw InputError("A_n needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i)
        e.emplace_back(i, i + 1);
    return from_edges(n, e);
}

Quiver type_d(int n) {
    if (n < 4)
        throw InputError("D_n needs n >= 4");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n - 2; ++i)
        e.emplace_back(i, i + 1);
    e.emplace_back(n - 2, n - 1);
    e.emplace_back(n - 2, n);
    return from_edges(n, e);
}

Quiver type_e(int n) {
    if (n < 6 || n > 8)
        throw InputError("E_n needs 6 <= n <= 8");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n - 1; ++i)
        e.emplace_back(i, i + 1);
    e.emplace_back(3, n);
    return from_edges(n, e);
}

Quiver extended_a(int n) {
    if (n < 1)
        throw InputError("A~_n needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        e.emplace_back(i, i + 1);
    e.emplace_back(1, n + 1);
    return from_edges(n + 1, e);
}

Quiver extended_d(int n) {
    if (n < 4)
        throw InputError("D~_n needs n >= 4");
    if (n == 4)
        return star({1, 1, 1, 1});
    // spine 1..n-3, two leaves on each end
    std::vector<std::pair<int, int>> e;
    const int spine = n - 3;
    for (int i = 1; i < spine; ++i)
        e.emplace_back(i, i + 1);
    e.emplace_back(1, spine + 1);
    e.emplace_back(1, spine + 2);
    e.emplace_back(spine, spine + 3);
    e.emplace_back(spine, spine + 4);
    return from_edges(n + 1, e);
}

Quiver extended_e(int n) {
    switch (n) {
    case 6:
        return star({2, 2, 2});
    case 7:
        return star({1, 3, 3});
    case 8:
        return star({1, 2, 5});
    default:
        throw InputError("E~_n needs 6 <= n <= 8");
    }
}

Quiver star(const std::vector<int> &arm_lengths) {
    std::vector<std::pair<int, int>> e;
    int next = 2;
    for (int len : arm_lengths) {
        int prev = 1;
        for (int k = 0; k < len; ++k) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return from_edges(next - 1, e);
}

std::vector<std::pair<std::string, Quiver>> euclidean(int max_rank) {
    std::vector<std::pair<std::string, Quiver>> out;
    for (int n = 1; n <= max_rank; ++n)
        out.emplace_back("A~" + std::to_string(n), extended_a(n));
    for (int n = 4; n <= max_rank; ++n)
        out.emplace_back("D~" + std::to_string(n), extended_d(n));
    for (int n = 6; n <= 8; ++n)
        out.emplace_back("E~" + std::to_string(n), extended_e(n));
    return out;
}

} // namespace catalogue

} // namespace quiverinv
