#include "chev/algebra.hpp"
#include "chev/any_ring.hpp"
#include "chev/automorphisms.hpp"
#include "chev/group.hpp"
#include "chev/involution.hpp"
#include "chev/replay.hpp"
#include "chev/roots.hpp"
#include "chev/steinberg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace chev;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string system = "b2";
    std::string ring = "zloc:5";
    std::string elem;
    std::string format = "text";
    std::string step = "all";
    std::string spec;
    int samples = 100;
    int draws = 20;
    std::uint64_t seed = 1;
};

std::string table(const std::vector<std::vector<std::string>>& rows)
{
    std::size_t w = 1;
    for (const auto& r : rows)
        for (const auto& c : r)
            w = std::max(w, c.size());
    std::ostringstream out;
    for (const auto& r : rows) {
        for (std::size_t j = 0; j < r.size(); ++j)
            out << (j ? " " : "") << std::string(w - r[j].size(), ' ') << r[j];
        out << "\n";
    }
    return out.str();
}

void emit(const Options& o, const json& j, const std::string& text)
{
    if (o.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

SystemType system_of(const Options& o)
{
    try {
        return parse_system(o.system);
    } catch (const std::exception& e) {
        throw usage_error(e.what());
    }
}

AnyRing ring_of(const Options& o, SystemType sys, std::vector<long> need = {})
{
    if (sys == SystemType::G2)
        need.push_back(3);
    try {
        return make_ring(o.ring, need);
    } catch (const ring_error& e) {
        std::string msg = e.what();
        if (sys == SystemType::G2 && msg.find('3') != std::string::npos)
            msg += " (G2 requires 1/3 in the coefficient ring)";
        throw usage_error(msg);
    }
}

template <class R>
Matrix<R> parse_product(const ChevalleyGroup<R>& g, const std::string& s)
{
    if (s.empty())
        throw usage_error("--elem is required");
    Matrix<R> m = g.identity();
    std::size_t start = 0;
    while (start <= s.size()) {
        auto end = s.find('*', start);
        auto piece = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
        try {
            m = m * eval_word(g, parse_generator(g, piece));
        } catch (const std::exception& e) {
            throw usage_error(e.what());
        }
        if (end == std::string::npos)
            break;
        start = end + 1;
    }
    return m;
}

json matrix_json(const std::vector<std::vector<std::string>>& rows)
{
    json j = json::array();
    for (const auto& r : rows)
        j.push_back(r);
    return j;
}

// ---- roots ----

int cmd_roots(const Options& o)
{
    const RootSystem& rs = root_system(system_of(o));
    json j;
    j["system"] = rs.name();
    j["dim"] = rs.dim();
    json roots = json::array();
    std::ostringstream text;
    text << rs.name() << ": " << rs.num_roots() << " roots, basis dimension " << rs.dim() << "\n";
    std::vector<std::vector<std::string>> rows = {{"pos", "root", "coords", "ambient", "height", "length2"}};
    for (std::size_t i = 0; i < rs.num_roots(); ++i) {
        Root r = rs.roots()[i];
        json e;
        e["position"] = i + 1;
        e["name"] = rs.root_name(r);
        e["coords"] = {r.a, r.b};
        e["ambient"] = rs.ambient_name(r);
        e["height"] = r.height();
        e["positive"] = rs.is_positive(r);
        e["length2"] = rs.length2(r);
        roots.push_back(e);
        rows.push_back({std::to_string(i + 1), rs.root_name(r),
                        "(" + std::to_string(r.a) + "," + std::to_string(r.b) + ")", rs.ambient_name(r),
                        std::to_string(r.height()), std::to_string(rs.length2(r))});
    }
    rows.push_back({std::to_string(rs.num_roots() + 1), "h1", "", "", "", ""});
    rows.push_back({std::to_string(rs.num_roots() + 2), "h2", "", "", "", ""});
    j["roots"] = roots;
    j["cartan_positions"] = {rs.num_roots() + 1, rs.num_roots() + 2};
    j["weyl_order"] = rs.weyl_enumerate().size();
    text << table(rows) << "Weyl group order " << rs.weyl_enumerate().size() << "\n";
    emit(o, j, text.str());
    return 0;
}

// ---- constants ----

int cmd_constants(const Options& o)
{
    SystemType sys = system_of(o);
    const RootSystem& rs = root_system(sys);
    const StructureTable& st = structure_table(sys);
    json table_j = json::array();
    std::vector<std::vector<std::string>> rows = {{"alpha", "beta", "alpha+beta", "N"}};
    for (Root a : rs.roots())
        for (Root b : rs.roots())
            if (rs.contains(a + b)) {
                table_j.push_back({{"alpha", rs.root_name(a)},
                                   {"beta", rs.root_name(b)},
                                   {"sum", rs.root_name(a + b)},
                                   {"n", st.N(a, b)}});
                rows.push_back({rs.root_name(a), rs.root_name(b), rs.root_name(a + b), std::to_string(st.N(a, b))});
            }
    json es = json::array();
    for (const auto& [a, b] : st.extraspecial())
        es.push_back({rs.root_name(a), rs.root_name(b)});
    auto checks = verify_chevalley_basis(st);
    json cj = json::array();
    std::ostringstream text;
    text << table(rows) << "sign solutions: " << st.sign_solutions() << "\n";
    for (const auto& c : checks.entries) {
        cj.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        text << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    json j;
    j["system"] = rs.name();
    j["n"] = table_j;
    j["extraspecial"] = es;
    j["sign_solutions"] = st.sign_solutions();
    j["checks"] = cj;
    j["status"] = checks.all_pass() ? "pass" : "fail";
    emit(o, j, text.str());
    return checks.all_pass() ? 0 : 1;
}

// ---- gen ----

int cmd_gen(const Options& o)
{
    SystemType sys = system_of(o);
    auto any = ring_of(o, sys);
    return std::visit(
        [&](const auto& r) {
            using R = std::decay_t<decltype(r)>;
            ChevalleyGroup<R> g(r, sys);
            auto m = parse_product(g, o.elem);
            auto s = m.strings();
            json j;
            j["system"] = g.system().name();
            j["ring"] = r.name();
            j["elem"] = o.elem;
            j["matrix"] = matrix_json(s);
            emit(o, j, table(s));
            return 0;
        },
        any);
}

// ---- relations ----

json tally_json(const RelationTally& t)
{
    json j;
    j["checks"] = t.checks;
    j["failures"] = t.failures;
    if (t.failures)
        j["first_failure"] = t.first_failure;
    return j;
}

int cmd_relations(const Options& o)
{
    SystemType sys = system_of(o);
    auto any = ring_of(o, sys);
    if (o.samples < 1 || o.draws < 1)
        throw usage_error("--samples and --draws must be positive");
    return std::visit(
        [&](const auto& r) {
            using R = std::decay_t<decltype(r)>;
            ChevalleyGroup<R> g(r, sys);
            Rng rng(o.seed);
            auto cc = commutator_constants(sys, o.draws, rng);
            auto signs = reflection_signs(sys);
            auto rep = check_steinberg(g, o.samples, rng, cc.table, signs);
            bool ok = rep.all_pass() && cc.integral && cc.independent;
            json j;
            j["system"] = rep.system;
            j["ring"] = rep.ring;
            j["samples"] = o.samples;
            j["seed"] = o.seed;
            json rel;
            std::ostringstream text;
            text << rep.system << " over " << rep.ring << ", " << o.samples << " draws per root or pair\n";
            for (const auto& [k, t] : rep.relations) {
                rel[k] = tally_json(t);
                text << (t.failures ? "FAIL " : "PASS ") << k << ": " << t.checks << " checks";
                if (t.failures)
                    text << ", " << t.failures << " failures, first: " << t.first_failure;
                text << "\n";
            }
            j["relations"] = rel;
            j["commutator_constants"] = {
                {"draws", cc.draws}, {"integral", cc.integral}, {"independent", cc.independent}};
            text << (cc.integral && cc.independent ? "PASS " : "FAIL ") << "commutator constants: integral "
                 << (cc.integral ? "yes" : "no") << ", independent of (t, u) over " << cc.draws << " draws "
                 << (cc.independent ? "yes" : "no") << "\n";
            for (const auto& p : cc.problems)
                text << "  " << p << "\n";
            j["status"] = ok ? "pass" : "fail";
            emit(o, j, text.str());
            return ok ? 0 : 1;
        },
        any);
}

// ---- split ----

int cmd_split(const Options& o)
{
    SystemType sys = system_of(o);
    auto any = ring_of(o, sys, {2});
    return std::visit(
        [&](const auto& r) {
            using R = std::decay_t<decltype(r)>;
            ChevalleyGroup<R> g(r, sys);
            auto a = parse_product(g, o.elem);
            if (!is_involution(a))
                throw usage_error("element is not an involution");
            auto s = split_module(a);
            auto cols = [](const std::vector<std::size_t>& v) {
                std::vector<std::size_t> out;
                for (auto c : v)
                    out.push_back(c + 1);
                return out;
            };
            json j;
            j["system"] = g.system().name();
            j["ring"] = r.name();
            j["elem"] = o.elem;
            j["rank0"] = s.rank0;
            j["rank1"] = s.rank1;
            j["columns0"] = cols(s.columns0);
            j["columns1"] = cols(s.columns1);
            j["basis_invertible"] = s.basis_invertible;
            std::ostringstream text;
            text << "ranks (" << s.rank0 << ", " << s.rank1 << ")\n";
            text << "basis invertible: " << (s.basis_invertible ? "yes" : "no") << "\n";
            emit(o, j, text.str());
            return s.basis_invertible && s.rank0 + s.rank1 == a.rows() ? 0 : 1;
        },
        any);
}

// ---- autocheck ----

json load_spec(const std::string& s)
{
    if (s.empty())
        throw usage_error("--spec is required");
    std::string text = s;
    if (s.front() != '{') {
        std::ifstream in(s);
        if (!in)
            throw usage_error("cannot read spec file '" + s + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const std::exception& e) {
        throw usage_error(std::string("bad spec JSON: ") + e.what());
    }
}

template <class R>
RingAutomorphism<R> ring_map(const R& r, const json& step)
{
    auto name = step.value("map", std::string("identity"));
    if (name == "identity")
        return identity_automorphism<R>();
    if constexpr (std::is_same_v<R, Dual>) {
        if (name == "eps-scale")
            return dual_scaling(r, step.value("c", 1));
    }
    if constexpr (std::is_same_v<R, Fq2>) {
        if (name == "frobenius")
            return frobenius(r);
    }
    throw usage_error("ring map '" + name + "' is not available over " + r.name());
}

template <class R>
Matrix<R> matrix_from_json(const R& r, const json& rows)
{
    std::vector<std::vector<typename R::elem>> v;
    for (const auto& row : rows) {
        std::vector<typename R::elem> rr;
        for (const auto& c : row)
            rr.push_back(r.parse(c.is_string() ? c.template get<std::string>() : c.dump()));
        v.push_back(std::move(rr));
    }
    Matrix<R> m(r, v.size(), v.empty() ? 0 : v[0].size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].size() != m.cols())
            throw usage_error("ragged matrix in spec");
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = v[i][j];
    }
    return m;
}

int cmd_autocheck(const Options& o)
{
    auto spec = load_spec(o.spec);
    Options oo = o;
    oo.system = spec.value("system", o.system);
    oo.ring = spec.value("ring", o.ring);
    SystemType sys = system_of(oo);
    auto any = ring_of(oo, sys);
    return std::visit(
        [&](const auto& r) {
            using R = std::decay_t<decltype(r)>;
            ChevalleyGroup<R> g(r, sys);
            StandardAutoSpec<R> f;
            json steps = json::array();
            for (const auto& s : spec.value("steps", json::array())) {
                auto kind = s.value("kind", std::string());
                if (kind == "ring") {
                    f.steps.push_back(ring_map(r, s));
                } else if (kind == "inner") {
                    Matrix<R> m = s.contains("matrix") ? matrix_from_json(r, s["matrix"])
                                                       : parse_product(g, s.value("elem", std::string()));
                    if (m.rows() != g.dim() || !m.square())
                        throw usage_error("inner matrix has the wrong size");
                    if (!try_inverse(m))
                        throw usage_error("inner matrix is not invertible");
                    f.steps.push_back(m);
                } else {
                    throw usage_error("unknown step kind '" + kind + "'");
                }
                steps.push_back(s);
            }
            if (spec.contains("central"))
                for (const auto& [k, v] : spec["central"].items())
                    f.central.scalar[k] = r.parse(v.is_string() ? v.template get<std::string>() : v.dump());
            Rng rng(o.seed);
            CheckReport rep;
            try {
                rep = verify_automorphism(g, f, std::min(o.samples, 20), rng);
            } catch (const ring_error& e) {
                throw usage_error(e.what());
            }
            json j;
            j["system"] = g.system().name();
            j["ring"] = r.name();
            j["steps"] = steps;
            json checks = json::array();
            std::ostringstream text;
            for (const auto& c : rep.entries) {
                checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                text << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
            }
            j["checks"] = checks;
            j["status"] = rep.all_pass() ? "pass" : "fail";
            emit(o, j, text.str());
            return rep.all_pass() ? 0 : 1;
        },
        any);
}

// ---- replay ----

int cmd_replay(const Options& o)
{
    std::vector<StepReport> reps;
    try {
        reps = replay(o.step);
    } catch (const data_error& e) {
        throw usage_error(e.what());
    }
    bool ok = true;
    json arr = json::array();
    std::ostringstream text;
    for (const auto& r : reps) {
        ok = ok && r.pass;
        json j;
        j["step"] = r.step;
        j["status"] = r.pass ? "pass" : "fail";
        json d;
        for (const auto& [k, v] : r.details)
            d[k] = v;
        j["details"] = d;
        if (r.step == "det76")
            j["value"] = d["det"];
        if (!r.notes.empty())
            j["notes"] = r.notes;
        if (!r.certificate.empty())
            j["certificate"] = r.certificate;
        arr.push_back(j);
        text << (r.pass ? "PASS " : "FAIL ") << r.step << "\n";
        for (const auto& [k, v] : r.details)
            text << "  " << k << ": " << v << "\n";
        for (const auto& n : r.notes)
            text << "  note: " << n << "\n";
    }
    if (o.format == "json")
        std::cout << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    else
        std::cout << text.str();
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Adjoint Chevalley groups of type B2 and G2 over local rings"};
    app.require_subcommand(1);
    Options o;
    bool as_json = false;
    auto common = [&](CLI::App* c, bool ring) {
        c->add_option("--system", o.system, "b2 or g2")->capture_default_str();
        if (ring)
            c->add_option("--ring", o.ring, "zmod:p^k, fp:p, zloc:p, dual:p, fq:p^2, jet:m or q")->capture_default_str();
        c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
        c->add_flag("--json", as_json, "same as --format json");
        c->add_option("--seed", o.seed, "seed for random draws")->capture_default_str();
    };
    auto* roots = app.add_subcommand("roots", "ordered root list");
    common(roots, false);
    auto* constants = app.add_subcommand("constants", "structure constants N_{alpha,beta}");
    common(constants, false);
    auto* gen = app.add_subcommand("gen", "matrix of a generator or product of generators");
    common(gen, true);
    gen->add_option("--elem", o.elem, "x:<root>:<t>, w:<root>:<t>, h:<root>:<t>, joined by *")->required();
    auto* rel = app.add_subcommand("relations", "check the Steinberg relations R1-R6");
    common(rel, true);
    rel->add_option("--samples", o.samples, "random draws per root or root pair")->capture_default_str();
    rel->add_option("--draws", o.draws, "draws used to solve the commutator constants")->capture_default_str();
    auto* split = app.add_subcommand("split", "split the module by an involution");
    common(split, true);
    split->add_option("--elem", o.elem, "involution, e.g. h:a1:-1")->required();
    auto* autoc = app.add_subcommand("autocheck", "verify a composition of standard automorphisms");
    common(autoc, true);
    autoc->add_option("--spec", o.spec, "JSON text or a path to a JSON file")->required();
    autoc->add_option("--samples", o.samples, "random ring elements sampled")->capture_default_str();
    auto* rep = app.add_subcommand("replay", "replay the explicit computations");
    common(rep, false);
    rep->add_option("--step", o.step, "golden, patterns, det76, lemma2, g2-sanity or all")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (as_json)
        o.format = "json";
    try {
        if (*roots)
            return cmd_roots(o);
        if (*constants)
            return cmd_constants(o);
        if (*gen)
            return cmd_gen(o);
        if (*rel)
            return cmd_relations(o);
        if (*split)
            return cmd_split(o);
        if (*autoc)
            return cmd_autocheck(o);
        return cmd_replay(o);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ring_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
