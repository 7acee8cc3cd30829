#include "quiverinv/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "quiverinv/canonical.hpp"
#include "quiverinv/errors.hpp"
#include "quiverinv/generic_rep.hpp"
#include "quiverinv/semi_invariants.hpp"
#include "quiverinv/stability.hpp"

namespace quiverinv::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string file;
    std::string d, e, t, values;
    int n = 6;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultSIBudget;
    int max_entry = 2;
    int max_n = 40;
    std::vector<std::string> factors;
    bool pretty = false;
    std::string record, check;
};

struct Input {
    bool canonical = false;
    BoundQuiverPresentation pres;
    std::optional<CanonicalAlgebra> alg;
    EulerMatrix E;

    const Quiver &quiver() const { return pres.quiver(); }
    /// The path-algebra quiver; PreconditionError for bound algebras.
    const Quiver &path_quiver() const {
        if (!pres.is_path_algebra())
            throw PreconditionError("this command needs the path algebra of a quiver, not a bound quiver algebra");
        return pres.quiver();
    }
    const CanonicalAlgebra &algebra() const {
        if (!alg)
            throw PreconditionError("this command needs a canonical algebra as input");
        return *alg;
    }
};

struct Context {
    Options opt;
    std::set<std::string> given;
    std::optional<Input> input;
    int exit_code = kOk;

    bool has(const std::string &flag) const { return given.count(flag) > 0; }
    const Input &in() const {
        if (!input)
            throw InputError("missing input file (-f)");
        return *input;
    }
};

std::vector<std::int64_t> parse_list(const std::string &s, const char *what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        try {
            out.push_back(std::stoll(item, &used));
        } catch (const std::logic_error &) {
            throw InputError(std::string("bad ") + what + " entry '" + item + "'");
        }
        if (used != item.size())
            throw InputError(std::string("bad ") + what + " entry '" + item + "'");
    }
    if (out.empty())
        throw InputError(std::string("empty ") + what);
    return out;
}

/// Integer vector in declared vertex order, returned in canonical order.
std::vector<std::int64_t> raw(const Context &c, const std::string &flag, const std::string &text) {
    if (!c.has(flag))
        throw InputError("missing " + flag);
    return c.in().quiver().from_declared(parse_list(text, flag.c_str()));
}

DimVector vec(const Context &c, const std::string &flag, const std::string &text) {
    return DimVector(raw(c, flag, text));
}

DimVector dim(const Context &c, const std::string &flag, const std::string &text) {
    DimVector d = vec(c, flag, text);
    if (!d.is_nonnegative())
        throw InputError(flag + " must be non-negative");
    return d;
}

DimVector dim_d(const Context &c) { return dim(c, "-d", c.opt.d); }
DimVector dim_e(const Context &c) { return dim(c, "-e", c.opt.e); }
Weight weight_t(const Context &c) { return Weight(raw(c, "-t", c.opt.t)); }

template <class Tag> json jv(const LatticeVector<Tag> &v) { return v.values(); }

json summands_json(const std::vector<Summand> &s) {
    json arr = json::array();
    for (const auto &x : s)
        arr.push_back({{"root", jv(x.root)}, {"multiplicity", x.multiplicity}, {"class", to_string(x.cls)}});
    return arr;
}

json matrix_json(const IntMatrix &m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

json fit_json(const PolynomialFit &f) {
    json j{{"status", to_string(f.status)}};
    if (f.status == FitStatus::ok)
        j["degree"] = f.degree;
    if (f.status == FitStatus::violated)
        j["index"] = f.index;
    return j;
}

json logconcave_json(const std::vector<std::uint64_t> &v) {
    const auto lc = log_concavity_check(v);
    json j{{"ok", lc.ok}};
    if (!lc.ok)
        j["index"] = lc.index;
    return j;
}

json verdict_json(const PSVerdict &v) {
    json j{{"verdict", to_string(v.kind)}, {"dims", v.dims}};
    if (v.kind == PSVerdictKind::is_projective_space) {
        j["m"] = v.m;
        j["q"] = to_string(v.q);
    }
    if (!v.reason.empty())
        j["reason"] = v.reason;
    return j;
}

std::vector<std::pair<DimVector, std::int64_t>> parse_factors(const Context &c) {
    if (c.opt.factors.empty())
        throw InputError("local-quiver needs at least one --factor d:multiplicity");
    std::vector<std::pair<DimVector, std::int64_t>> out;
    for (const auto &f : c.opt.factors) {
        const auto colon = f.find(':');
        const std::string dpart = colon == std::string::npos ? f : f.substr(0, colon);
        std::int64_t mult = 1;
        if (colon != std::string::npos)
            mult = parse_list(f.substr(colon + 1), "multiplicity").at(0);
        out.push_back({dim(c, "--factor", dpart), mult});
    }
    return out;
}

using Handler = std::function<json(Context &)>;

struct Command {
    std::string name;
    std::string help;
    std::set<std::string> flags; ///< command-specific flags accepted
    Handler run;
};

const std::vector<Command> &commands() {
    static const std::vector<Command> cmds{
        {"classify", "Dynkin / Euclidean / wild type (or canonical type)", {}, [](Context &c) -> json {
             if (c.in().canonical) {
                 const auto &L = c.in().algebra();
                 return {{"type", to_string(classify_canonical(L))}, {"genus", to_string(virtual_genus(L))}};
             }
             const auto cls = classify_path_algebra(c.in().path_quiver());
             return {{"type", to_string(cls.type)}, {"diagram", cls.diagram}};
         }},
        {"euler", "Euler matrix, or <d,e> / q(d) and the canonical weights of d", {"-d", "-e"}, [](Context &c) -> json {
             const auto &E = c.in().E;
             if (c.has("-d") && c.has("-e"))
                 return {{"value", euler_form(E, vec(c, "-d", c.opt.d), vec(c, "-e", c.opt.e))}};
             if (c.has("-e"))
                 throw InputError("-e needs -d");
             if (c.has("-d")) {
                 const DimVector d = vec(c, "-d", c.opt.d);
                 const auto w = canonical_weights(E, d);
                 return {{"tits", tits_form(E, d)},
                         {"left_weight", jv(w.left)},
                         {"right_weight", jv(w.right)},
                         {"theta", jv(w.theta)}};
             }
             return {{"matrix", matrix_json(E.matrix())}};
         }},
        {"delta", "null root of a Euclidean quiver", {}, [](Context &c) -> json {
             return {{"delta", jv(null_root(c.in().path_quiver()))}};
         }},
        {"candecomp", "canonical decomposition of d", {"-d"}, [](Context &c) -> json {
             const auto dec = canonical_decomposition(c.in().E, dim_d(c));
             return {{"summary", dec.summary()}, {"summands", summands_json(dec.summands)}};
         }},
        {"schur", "whether d is a Schur root", {"-d"}, [](Context &c) -> json {
             const auto d = dim_d(c);
             return {{"schur", is_schur_root(c.in().E, d)}, {"class", to_string(classify_root(c.in().E, d))}};
         }},
        {"stable", "generic (semi-)stability of d for theta (default theta_d)", {"-d", "-t"}, [](Context &c) -> json {
             const auto d = dim_d(c);
             const Weight t = c.has("-t") ? weight_t(c) : canonical_weights(c.in().E, d).theta;
             return {{"theta", jv(t)},
                     {"semistable", is_semistable_generic(c.in().E, d, t)},
                     {"stable", is_stable_generic(c.in().E, d, t)}};
         }},
        {"stable-decomp", "theta-stable decomposition of d", {"-d", "-t"}, [](Context &c) -> json {
             const auto s = theta_stable_decomposition(c.in().E, dim_d(c), weight_t(c));
             return {{"summary", s.summary()}, {"factors", summands_json(s.factors)}};
         }},
        {"eff-cone", "cone of effective weights of d with facets", {"-d"}, [](Context &c) -> json {
             return effective_cone(c.in().E, dim_d(c)).to_json();
         }},
        {"local-quiver", "local quiver of stable factors", {"--factor"}, [](Context &c) -> json {
             const auto lq = local_quiver(c.in().E, parse_factors(c));
             json arrows = json::array();
             for (const auto &a : lq.quiver.arrows())
                 arrows.push_back({{"id", a.id},
                                   {"tail", lq.quiver.vertices()[a.tail]},
                                   {"head", lq.quiver.vertices()[a.head]}});
             return {{"vertices", lq.quiver.vertices()}, {"arrows", arrows}, {"dim", jv(lq.dim)}};
         }},
        {"si-dim", "dim SI(Q,d)_theta", {"-d", "-t"}, [](Context &c) -> json {
             return {{"dim", si_dim(c.in().path_quiver(), dim_d(c), weight_t(c), c.opt.budget)}};
         }},
        {"si-table", "dim SI(Q,d)_{n theta} for n = 0..N with checkers", {"-d", "-t", "-n"}, [](Context &c) -> json {
             const auto tab = si_table(c.in().path_quiver(), dim_d(c), weight_t(c), c.opt.n, c.opt.budget);
             json rows = json::array();
             for (std::size_t k = 0; k < tab.dims.size(); ++k)
                 rows.push_back({{"n", k}, {"dim", tab.dims[k]}});
             return {{"table", rows},
                     {"dims", tab.dims},
                     {"logconcave", logconcave_json(tab.dims)},
                     {"polynomial", fit_json(fit_polynomial(tab.dims))},
                     {"pspace", verdict_json(projective_space_fit(tab.dims))}};
         }},
        {"circ", "d o e through both reciprocity sides", {"-d", "-e"}, [](Context &c) -> json {
             const auto v = circ(c.in().path_quiver(), dim_d(c), dim_e(c), c.opt.budget);
             return {{"value", v.value}, {"via_e", v.via_e}, {"via_d", v.via_d}};
         }},
        {"logconcave", "log-concavity of --values, or of an SI table", {"--values", "-d", "-t", "-n"},
         [](Context &c) -> json {
             std::vector<std::uint64_t> vals;
             if (c.has("--values")) {
                 if (c.has("-d") || c.has("-t"))
                     throw InputError("give either --values or -d/-t");
                 for (auto x : parse_list(c.opt.values, "--values")) {
                     if (x < 0)
                         throw InputError("--values must be non-negative");
                     vals.push_back(static_cast<std::uint64_t>(x));
                 }
             } else {
                 vals = si_table(c.in().path_quiver(), dim_d(c), weight_t(c), c.opt.n, c.opt.budget).dims;
             }
             json j = logconcave_json(vals);
             j["values"] = vals;
             return j;
         }},
        {"wild-search", "search for SI_{2theta} > (SI_theta)^2 on a wild quiver", {"--max-entry", "--max-n"},
         [](Context &c) -> json {
             WildSearchBounds b;
             b.max_entry = c.opt.max_entry;
             b.max_n = c.opt.max_n;
             b.budget = c.opt.budget;
             const auto res = wild_violation_search(c.in().path_quiver(), b);
             if (!res.hit)
                 return {{"found", false}, {"frontier", res.frontier}};
             json j = to_json(*res.hit);
             j["found"] = true;
             return j;
         }},
        {"moduli", "dimension of the moduli space of theta-stables", {"-d", "-t"}, [](Context &c) -> json {
             const auto d = dim_d(c);
             const Weight t = c.has("-t") ? weight_t(c) : canonical_weights(c.in().E, d).theta;
             return {{"theta", jv(t)}, {"dim", moduli_dimension(c.in().E, d, t)}};
         }},
        {"pspace", "projective-space signature of the SI sequence", {"-d", "-t", "-n"}, [](Context &c) -> json {
             return verdict_json(
                 projective_space_verdict(c.in().E, dim_d(c), weight_t(c), c.opt.n, c.opt.budget));
         }},
        {"rational-invariants", "field of rational invariants (tame input)", {"-d"}, [](Context &c) -> json {
             if (c.in().canonical) {
                 if (!c.has("-d"))
                     throw InputError("missing -d");
                 std::vector<DimVector> parts;
                 std::stringstream ss(c.opt.d);
                 std::string part;
                 while (std::getline(ss, part, '+'))
                     parts.push_back(dim(c, "-d", part));
                 const auto p = rational_invariants_canonical(c.in().algebra(), parts);
                 json pairs = json::array();
                 for (const auto &kp : p.pairs)
                     pairs.push_back({{"d1", jv(kp.d1)}, {"d2", jv(kp.d2)}});
                 return {{"n_isotropic", p.n_isotropic}, {"field", p.field_description}, {"pairs", pairs}};
             }
             const auto p = rational_invariants_profile(c.in().path_quiver(), dim_d(c));
             return {{"n_isotropic", p.n_isotropic},
                     {"field", p.field_description},
                     {"transcendence_degree", p.transcendence_degree},
                     {"generic_end_dim", p.generic_end_dim},
                     {"decomposition", p.decomposition.summary()}};
         }},
        {"canonical-info", "construction data of a canonical algebra", {}, [](Context &c) -> json {
             const auto &L = c.in().algebra();
             json lambdas = json::array();
             for (const auto &l : L.lambdas)
                 lambdas.push_back(to_string(l));
             return {{"weights", L.weights},
                     {"lambdas", lambdas},
                     {"m", L.m_lcm},
                     {"genus", to_string(virtual_genus(L))},
                     {"type", to_string(classify_canonical(L))},
                     {"vertices", L.presentation.quiver().vertices()},
                     {"num_arrows", L.presentation.quiver().num_arrows()},
                     {"relations_inf_0", L.presentation.relation_count(L.infinity(), L.zero())},
                     {"h", jv(L.h())},
                     {"euler", matrix_json(L.euler.matrix())},
                     {"coxeter", matrix_json(coxeter_matrix(L))}};
         }},
        {"rr-check", "Riemann-Roch identity for d, e", {"-d", "-e"}, [](Context &c) -> json {
             const auto &L = c.in().algebra();
             const DimVector d = vec(c, "-d", c.opt.d), e = vec(c, "-e", c.opt.e);
             const auto rr = riemann_roch_check(L, d, e);
             if (!rr.ok)
                 c.exit_code = kInternal;
             return {{"ok", rr.ok}, {"lhs", to_string(rr.lhs)}, {"rhs", to_string(rr.rhs)}};
         }},
        {"kronecker-pair", "Kronecker pair below an isotropic d", {"-d"}, [](Context &c) -> json {
             const auto d = dim_d(c);
             const auto p = c.in().canonical ? kronecker_pair(c.in().algebra(), d) : kronecker_pair(c.in().E, d);
             return {{"d1", jv(p.d1)},
                     {"d2", jv(p.d2)},
                     {"pairing", {euler_form(c.in().E, p.d1, p.d2), euler_form(c.in().E, p.d2, p.d1)}}};
         }},
        {"iso-hull", "isotropic hull of d under the Coxeter transformation", {"-d"}, [](Context &c) -> json {
             return {{"hull", jv(isotropic_hull(c.in().algebra(), dim_d(c)))}};
         }},
    };
    return cmds;
}

Input load_input(const std::string &path) {
    std::ifstream f(path);
    if (!f)
        throw InputError("cannot read '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    const std::string text = buf.str();
    // the first meaningful word decides the format
    std::istringstream lines(text);
    std::string line, head;
    while (std::getline(lines, line)) {
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        std::istringstream w(line);
        if (w >> head)
            break;
    }
    Input in;
    if (head == "canonical") {
        in.canonical = true;
        in.alg = parse_canonical(text);
        in.pres = in.alg->presentation;
        in.E = in.alg->euler;
    } else {
        in.pres = parse_quiver(text);
        in.E = EulerMatrix(in.pres);
    }
    return in;
}

json input_json(const Context &c, const std::string &cmd) {
    json j = json::object();
    if (c.input) {
        j["file"] = c.opt.file;
        j["format"] = c.input->canonical ? "canonical" : "quiver";
        j["vertices"] = c.input->quiver().vertices();
    }
    auto put = [&](const std::string &flag, const std::string &key, const json &v) {
        if (c.has(flag))
            j[key] = v;
    };
    put("-d", "d", c.opt.d);
    put("-e", "e", c.opt.e);
    put("-t", "theta", c.opt.t);
    put("-n", "n", c.opt.n);
    put("--values", "values", c.opt.values);
    put("--factor", "factors", c.opt.factors);
    put("--max-entry", "max_entry", c.opt.max_entry);
    put("--max-n", "max_n", c.opt.max_n);
    put("--budget", "budget", c.opt.budget);
    put("--seed", "seed", c.opt.seed);
    (void)cmd;
    return j;
}

std::string dump(const json &j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

} // namespace

const std::vector<std::string> &command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto &c : commands())
            v.push_back(c.name);
        return v;
    }();
    return names;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Context c;
    CLI::App app{"Quiver invariants: generic representations, stability, semi-invariants, canonical algebras"};
    app.require_subcommand(1);
    std::map<std::string, CLI::Option *> opts;
    opts["-f"] = app.add_option("-f,--file", c.opt.file, "input file (quiver format or canonical line)");
    opts["-d"] = app.add_option("-d", c.opt.d, "dimension vector, comma separated, declared vertex order");
    opts["-e"] = app.add_option("-e", c.opt.e, "second dimension vector");
    opts["-t"] = app.add_option("-t", c.opt.t, "weight, comma separated");
    opts["-n"] = app.add_option("-n", c.opt.n, "table length (n = 0..N)")->check(CLI::Range(0, 1000));
    opts["--seed"] = app.add_option("--seed", c.opt.seed, "seed (all commands are deterministic)");
    opts["--budget"] = app.add_option("--budget", c.opt.budget, "enumeration budget per semi-invariant count");
    opts["--values"] = app.add_option("--values", c.opt.values, "comma-separated sequence for logconcave");
    opts["--factor"] = app.add_option("--factor", c.opt.factors, "local-quiver factor d:multiplicity (repeatable)");
    opts["--max-entry"] =
        app.add_option("--max-entry", c.opt.max_entry, "wild-search box bound")->check(CLI::Range(1, 10));
    opts["--max-n"] = app.add_option("--max-n", c.opt.max_n, "wild-search multiplier bound")->check(CLI::Range(1, 1000));
    app.add_flag("--json-pretty", c.opt.pretty, "indent the JSON output");
    app.add_option("--record", c.opt.record, "write the result as a golden file");
    app.add_option("--check", c.opt.check, "compare the result with a golden file");
    std::map<std::string, CLI::App *> subs;
    for (const auto &cmd : commands())
        subs[cmd.name] = app.add_subcommand(cmd.name, cmd.help)->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        out << dump({{"error", {{"kind", "input"}, {"message", e.what()}}}}, c.opt.pretty) << '\n';
        return kInputError;
    }
    const Command *cmd = nullptr;
    for (const auto &x : commands())
        if (subs[x.name]->parsed())
            cmd = &x;
    for (const auto &[flag, o] : opts)
        if (o->count() > 0)
            c.given.insert(flag);

    json doc{{"command", cmd->name}};
    auto fail = [&](int code, const std::string &kind, const std::string &msg) {
        doc["input"] = input_json(c, cmd->name);
        doc["error"] = {{"kind", kind}, {"message", msg}};
        err << "error (" << kind << "): " << msg << '\n';
        out << dump(doc, c.opt.pretty) << '\n';
        return code;
    };

    json result;
    try {
        static const std::set<std::string> common{"-f", "--seed", "--budget"};
        for (const auto &flag : c.given)
            if (!common.count(flag) && !cmd->flags.count(flag))
                throw InputError("flag " + flag + " is not used by '" + cmd->name + "'");
        if (c.has("-f"))
            c.input = load_input(c.opt.file);
        result = cmd->run(c);
    } catch (const InputError &e) {
        return fail(kInputError, "input", e.what());
    } catch (const PreconditionError &e) {
        return fail(kPrecondition, "precondition", e.what());
    } catch (const BudgetError &e) {
        return fail(kBudget, "budget", e.what());
    } catch (const NotFoundError &e) {
        return fail(kInternal, "not_found", e.what());
    } catch (const InvariantError &e) {
        return fail(kInternal, "internal", e.what());
    } catch (const std::exception &e) {
        return fail(kInternal, "internal", e.what());
    }

    doc["input"] = input_json(c, cmd->name);
    doc["result"] = result;
    const std::string golden = result.dump(2) + "\n";
    if (!c.opt.record.empty()) {
        std::ofstream f(c.opt.record, std::ios::binary);
        if (!(f << golden) || !f.flush())
            return fail(kInputError, "input", "cannot write fixture '" + c.opt.record + "'");
        doc["fixture"] = {{"recorded", c.opt.record}};
    }
    if (!c.opt.check.empty()) {
        std::ifstream f(c.opt.check, std::ios::binary);
        if (!f)
            return fail(kInputError, "input", "cannot read fixture '" + c.opt.check + "'");
        std::stringstream buf;
        buf << f.rdbuf();
        const bool same = buf.str() == golden;
        doc["fixture"] = {{"checked", c.opt.check}, {"match", same}};
        if (!same) {
            err << "error: result differs from fixture " << c.opt.check << '\n';
            out << dump(doc, c.opt.pretty) << '\n';
            return kInternal;
        }
    }
    out << dump(doc, c.opt.pretty) << '\n';
    return c.exit_code;
}

} // namespace quiverinv::cli
