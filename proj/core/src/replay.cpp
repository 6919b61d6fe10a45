#include "chev/replay.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace chev {

Matrix<Rationals> swap_matrix(const RootSystem& rs)
{
    Rationals q;
    const std::size_t n = rs.dim();
    Matrix<Rationals> s(q, n, n);
    for (std::size_t i = 0; i < rs.num_roots(); ++i)
        s(i, static_cast<std::size_t>(rs.index(-rs.roots()[i]))) = 1;
    s(n - 2, n - 2) = 1;
    s(n - 1, n - 1) = 1;
    return s;
}

Convention make_convention(SystemType sys, Matrix<Rationals> t)
{
    auto ti = try_inverse(t);
    if (!ti)
        throw data_error("convention matrix is singular");
    auto s = swap_matrix(root_system(sys));
    Convention c{sys, t, *ti, s, t * s, s * *ti};
    return c;
}

const Convention& committed_convention(SystemType sys)
{
    static std::mutex mu;
    static std::map<SystemType, Convention> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(sys);
    if (it != cache.end())
        return it->second;
    std::string path = "convention/" + std::string(sys == SystemType::B2 ? "b2" : "g2") + ".txt";
    auto tm = load_text_matrix(path);
    Rationals q;
    Matrix<Rationals> t(q, tm.rows(), tm.cols());
    for (std::size_t i = 0; i < tm.rows(); ++i)
        for (std::size_t j = 0; j < tm.cols(); ++j)
            t(i, j) = parse_rational(tm.cells[i][j]);
    if (t.rows() != root_system(sys).dim() || !t.square())
        throw data_error(path + ": wrong dimension");
    return cache.emplace(sys, make_convention(sys, t)).first->second;
}

std::vector<std::string> fixture_names()
{
    std::vector<std::string> out;
    for (const auto& p : data_files("fixtures/")) {
        auto stem = p.substr(9);
        out.push_back(stem.substr(0, stem.size() - 4));
    }
    return out;
}

FixtureSpec load_fixture(const std::string& name)
{
    auto names = fixture_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw data_error("unknown fixture '" + name + "'");
    auto tm = load_text_matrix("fixtures/" + name + ".txt");
    SystemType sys = parse_system(tm.get("system"));
    const RootSystem& rs = root_system(sys);
    Rationals q;
    Matrix<Rationals> m(q, tm.rows(), tm.cols());
    for (std::size_t i = 0; i < tm.rows(); ++i)
        for (std::size_t j = 0; j < tm.cols(); ++j)
            m(i, j) = parse_rational(tm.cells[i][j]);
    if (!m.square() || m.rows() != rs.dim())
        throw data_error(tm.path + ": wrong dimension");
    const auto& kind = tm.get("kind");
    if (kind != "x" && kind != "w" && kind != "h")
        throw data_error(tm.path + ": unknown kind '" + kind + "'");
    return {name, sys, kind[0], rs.parse(tm.get("root")), tm.get("param"), m};
}

std::vector<std::string> fixture_sanity(const FixtureSpec& f)
{
    std::vector<std::string> bad;
    const auto& m = f.matrix;
    const std::size_t n = m.rows();
    auto one = Matrix<Rationals>::identity(m.ring(), n);
    if (det_berkowitz(m) == 0) {
        bad.push_back("singular");
        return bad;
    }
    if (f.kind == 'w') {
        auto sq = m * m;
        if (!(sq * sq).is_identity())
            bad.push_back("w^4 != 1");
        bool signed_identity = sq.is_diagonal();
        for (std::size_t i = 0; i < n && signed_identity; ++i)
            signed_identity = sq(i, i) == 1 || sq(i, i) == -1;
        if (!signed_identity)
            bad.push_back("w^2 is not a diagonal matrix of signs");
    } else if (f.kind == 'x') {
        if (!matrix_power(m - one, static_cast<long>(n)).is_zero())
            bad.push_back("x - 1 is not nilpotent");
    } else if (!m.is_diagonal()) {
        bad.push_back("h is not diagonal");
    }
    return bad;
}

namespace {

template <class R>
Matrix<R> generate(const ChevalleyGroup<R>& g, const FixtureSpec& f)
{
    auto t = g.ring().parse(f.param);
    switch (f.kind) {
    case 'x':
        return g.x(f.root, t);
    case 'w':
        return g.w(f.root, t);
    default:
        return g.h(f.root, t);
    }
}

std::string sys_key(SystemType s)
{
    return s == SystemType::B2 ? "b2" : "g2";
}

}  // namespace

ConventionSolve solve_convention(SystemType sys)
{
    Rationals q;
    ChevalleyGroup<Rationals> g(q, sys);
    const std::size_t n = g.dim();
    auto s = swap_matrix(g.system());
    std::vector<std::pair<Matrix<Rationals>, Matrix<Rationals>>> pairs;  // (S M^t S, printed)
    ConventionSolve out;
    for (const auto& name : fixture_names()) {
        if (name.substr(0, 2) != sys_key(sys))
            continue;
        auto f = load_fixture(name);
        if (!fixture_sanity(f).empty())
            continue;
        out.used.push_back(name);
        pairs.emplace_back(s * generate(g, f).transpose() * s, f.matrix);
    }
    // Unknown T flattened row-major; equation (T Q - P T)(i, j) = 0. T is
    // also required to be diagonal on root positions, with a free 2 x 2
    // block on h1, h2: the G2 fixtures alone only pin T down to a pencil.
    const std::size_t nr = g.system().num_roots();
    std::size_t shape_rows = n * n - nr - 4;
    Matrix<Rationals> a(q, pairs.size() * n * n + shape_rows, n * n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && (i < nr || j < nr))
                a(row++, i * n + j) = 1;
    for (const auto& [qm, pm] : pairs)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, ++row)
                for (std::size_t k = 0; k < n; ++k) {
                    if (qm(k, j) != 0)
                        a(row, i * n + k) += qm(k, j);
                    if (pm(i, k) != 0)
                        a(row, k * n + j) -= pm(i, k);
                }
    auto ker = nullspace(a);
    out.nullity = ker.size();
    if (ker.size() == 1) {
        Matrix<Rationals> t(q, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                t(i, j) = ker[0][i * n + j];
        mpq_class scale = t(n - 2, n - 2);
        if (scale != 0) {
            t = t.scaled(1 / scale);
            out.t = t;
            try {
                out.matches_committed = t == committed_convention(sys).t;
            } catch (const data_error&) {
                out.matches_committed = false;
            }
        }
    }
    return out;
}

std::string to_string(GoldenResult::Outcome o)
{
    switch (o) {
    case GoldenResult::Outcome::exact:
        return "exact";
    case GoldenResult::Outcome::reconciled:
        return "reconciled";
    default:
        return "mismatch";
    }
}

GoldenResult golden_compare(const std::string& name)
{
    auto f = load_fixture(name);
    GoldenResult res;
    res.name = name;
    res.sanity_failures = fixture_sanity(f);
    ZLoc r(5);
    ChevalleyGroup<ZLoc> g(r, f.system);
    const auto& conv = committed_convention(f.system);
    auto gen = generate(g, f);
    auto pm = f.matrix.map_to(r, [&](const mpq_class& v) { return r.from_mpq(v); });
    if (f.kind == 'w' && res.sanity_failures.empty()) {
        // With the convention fixed: w^2 = P(h(-1)).
        if (pm * pm != printed(conv, g.h(f.root, r.neg(r.one()))))
            res.sanity_failures.push_back("w^2 != h(-1)");
    }
    auto pg = printed(conv, gen);
    if (gen == pm)
        res.outcome = GoldenResult::Outcome::exact;
    else if (pg == pm)
        res.outcome = GoldenResult::Outcome::reconciled;
    for (std::size_t i = 0; i < pm.rows(); ++i)
        for (std::size_t j = 0; j < pm.cols(); ++j)
            if (!r.eq(pg(i, j), pm(i, j)))
                res.diff.emplace_back(i + 1, j + 1);
    return res;
}

// ---- patterns ----

std::vector<std::string> pattern_names()
{
    return {"x_e2", "x_e1e2", "c_t", "g2_x1", "g2_x2", "g2_d2"};
}

namespace {

std::string pattern_path(const std::string& name)
{
    if (name == "x_e2")
        return "patterns/b2_x_e2.txt";
    if (name == "x_e1e2")
        return "patterns/b2_x_e1e2.txt";
    if (name == "c_t")
        return "patterns/b2_c_t.txt";
    if (name == "g2_x1" || name == "g2_x2" || name == "g2_d2")
        return "patterns/g2_" + name.substr(3) + ".txt";
    throw data_error("unknown pattern '" + name + "'");
}

// The printed true generator named by a pattern header, e.g. "x:e2:1".
Matrix<Rationals> printed_generator(SystemType sys, const std::string& spec, long t)
{
    Rationals q;
    ChevalleyGroup<Rationals> g(q, sys);
    std::string s = spec;
    auto pos = s.rfind(":t");
    if (pos != std::string::npos && pos + 2 == s.size())
        s = s.substr(0, pos + 1) + std::to_string(t);
    return printed(committed_convention(sys), eval_word(g, parse_generator(g, s)));
}

Matrix<Jet> instantiate(const Pattern& p, const Jet& jet, const std::map<std::string, Jet::elem>& value)
{
    Matrix<Jet> m(jet, p.rows(), p.cols());
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) {
            const auto& e = p.cells[i][j];
            auto acc = jet.from_mpq(e.constant);
            for (const auto& [name, k] : e.terms)
                acc = jet.add(acc, jet.scaled(value.at(name), k));
            m(i, j) = acc;
        }
    return m;
}

}  // namespace

BuiltPattern build_pattern(const std::string& name, long t)
{
    BuiltPattern b;
    b.name = name;
    b.source = load_pattern(pattern_path(name));
    b.system = parse_system(b.source.meta.at("system"));
    b.unknowns = b.source.unknowns();
    b.truth = printed_generator(b.system, b.source.meta.at("generator"), t);
    if (b.source.rows() != b.truth.rows() || b.source.cols() != b.truth.cols())
        throw data_error(b.source.path + ": pattern shape does not match the generator");
    std::map<std::string, Jet::elem> value;
    if (name == "x_e2" || name == "x_e1e2") {
        // Shared coordinates y1..y76 for both B2 patterns.
        auto assign = load_assignments("patterns/b2_unknowns.txt");
        int m = 0;
        for (const auto& [k, e] : assign)
            for (const auto& [y, c] : e.terms)
                m = std::max(m, std::stoi(y.substr(1)));
        b.ring = Jet(m);
        for (const auto& u : b.unknowns) {
            auto it = assign.find(u);
            if (it == assign.end())
                throw data_error("no y-coordinate for unknown '" + u + "'");
            auto v = b.ring.from_mpq(it->second.constant);
            for (const auto& [y, c] : it->second.terms)
                v = b.ring.add(v, b.ring.scaled(b.ring.symbol(std::stoi(y.substr(1))), c));
            value[u] = v;
            b.base[u] = it->second.constant;
        }
    } else {
        // One coordinate per unknown; base values solved from the true generator.
        const std::size_t m = b.unknowns.size();
        std::map<std::string, std::size_t> col;
        for (std::size_t k = 0; k < m; ++k)
            col[b.unknowns[k]] = k;
        Rationals q;
        const std::size_t n = b.truth.rows();
        Matrix<Rationals> a(q, n * b.truth.cols(), m);
        std::vector<mpq_class> rhs(a.rows());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < b.truth.cols(); ++j) {
                const auto& e = b.source.cells[i][j];
                for (const auto& [u, k] : e.terms)
                    a(i * b.truth.cols() + j, col[u]) = k;
                rhs[i * b.truth.cols() + j] = b.truth(i, j) - e.constant;
            }
        auto sol = solve(a, rhs);
        b.free_bases = m - rank(a);
        b.ring = Jet(static_cast<int>(m));
        for (std::size_t k = 0; k < m; ++k) {
            mpq_class base = sol ? (*sol)[k] : mpq_class(0);
            b.base[b.unknowns[k]] = base;
            value[b.unknowns[k]] = b.ring.add(b.ring.from_mpq(base), b.ring.symbol(static_cast<int>(k) + 1));
        }
    }
    b.matrix = instantiate(b.source, b.ring, value);
    std::set<int> used;
    for (const auto& [u, v] : value)
        for (const auto& [k, c] : v.y)
            used.insert(k);
    b.coordinates = used.size();
    Rationals q;
    b.specializes = b.matrix.map_to(q, [](const JetElem& e) { return e.c; }) == b.truth;
    return b;
}

// ---- steps ----

namespace {

std::string yes(bool b)
{
    return b ? "yes" : "no";
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ")
{
    std::string out;
    for (const auto& s : v)
        out += (out.empty() ? "" : sep) + s;
    return out;
}

}  // namespace

StepReport replay_golden()
{
    StepReport rep;
    rep.step = "golden";
    bool ok = true;
    for (SystemType sys : {SystemType::B2, SystemType::G2}) {
        auto cs = solve_convention(sys);
        rep.add("convention_" + sys_key(sys) + "_nullity", std::to_string(cs.nullity));
        rep.add("convention_" + sys_key(sys) + "_matches_committed", yes(cs.matches_committed));
        ok = ok && cs.matches_committed;
    }
    for (const auto& name : fixture_names()) {
        auto g = golden_compare(name);
        std::string v = to_string(g.outcome);
        if (g.quarantined())
            v += "; quarantined: " + join(g.sanity_failures, ", ") + "; " + std::to_string(g.diff.size()) +
                 " entries differ";
        rep.add(name, v);
        // A fixture is acceptable if it matches, or fails sanity and is quarantined.
        bool fine = g.outcome != GoldenResult::Outcome::mismatch ? !g.quarantined() : g.quarantined();
        ok = ok && fine;
        if (g.quarantined())
            rep.notes.push_back(name + " is quarantined as a suspected misprint");
    }
    rep.pass = ok;
    return rep;
}

StepReport replay_patterns()
{
    StepReport rep;
    rep.step = "patterns";
    bool ok = true;
    for (const auto& name : pattern_names()) {
        std::vector<long> ts = name == "c_t" ? std::vector<long>{2, 3, -1} : std::vector<long>{2};
        for (long t : ts) {
            auto b = build_pattern(name, t);
            std::string key = name == "c_t" ? "c_t(t=" + std::to_string(t) + ")" : name;
            std::string v = std::to_string(b.unknowns.size()) + " unknowns, " + std::to_string(b.coordinates) +
                            " free coordinates, specializes: " + yes(b.specializes);
            if (b.free_bases)
                v += ", " + std::to_string(b.free_bases) + " unknowns not fixed by the generator";
            rep.add(key, v);
            ok = ok && b.specializes;
        }
    }
    for (const auto& c : b2_residuals()) {
        rep.add(c.id + "_constant_part_zero", yes(c.constant_zero));
        ok = ok && c.constant_zero;
    }
    rep.pass = ok;
    return rep;
}

StepReport replay_det76()
{
    StepReport rep;
    rep.step = "det76";
    auto ls = linear_system_76();
    mpz_class target;
    mpz_ui_pow_ui(target.get_mpz_t(), 2, 36);
    rep.add("shape", std::to_string(ls.rows) + "x" + std::to_string(ls.cols));
    rep.add("entries_bounded", yes(ls.entries_bounded));
    rep.add("det", ls.det.get_str());
    rep.add("rank_q", std::to_string(ls.rank_q));
    rep.add("rank_f5", std::to_string(ls.rank_f5));
    rep.add("rank_f7", std::to_string(ls.rank_f7));
    rep.add("unique_zero_solution_f5", yes(ls.unique_f5));
    rep.add("unique_zero_solution_f7", yes(ls.unique_f7));
    rep.add("full_system_rows", std::to_string(ls.full_rows));
    rep.add("full_system_rank_q", std::to_string(ls.full_rank_q));
    rep.add("centralizer_dim", std::to_string(ls.centralizer_dim));
    rep.add("inner_solutions_dim", std::to_string(ls.inner_dim));
    rep.add("inner_solutions_in_kernel", yes(ls.inner_in_kernel));
    rep.add("kernel_spanned_by_inner", yes(ls.kernel_is_inner));
    bool square = ls.rows == 76 && ls.cols == 76;
    rep.pass = square && ls.entries_bounded && abs(ls.det) == target;
    if (!rep.pass && ls.kernel_is_inner)
        rep.notes.push_back("the system is rank deficient: its kernel is spanned by first-order conjugations "
                            "by matrices commuting with the fixed generators");
    return rep;
}

StepReport replay_lemma2()
{
    StepReport rep;
    rep.step = "lemma2";
    auto words = lemma2_stored_words();
    auto r = lemma2_verify(words);
    rep.add("seed_identity", yes(r.seed_ok));
    rep.add("index_claim", r.index_claim);
    rep.add("index_claim_as_written", yes(r.index_claim_as_written));
    rep.add("dimension", std::to_string(r.dimension));
    rep.add("rank_q", std::to_string(r.rank_q));
    rep.add("certificate_words", std::to_string(words.size()));
    rep.add("certificate_det", r.det.get_str());
    rep.add("units_integral", yes(r.units_integral));
    rep.add("certificate_reproduced_by_search", yes(lemma2_search() == words));
    if (!r.stall.empty())
        rep.add("stall", r.stall);
    rep.certificate = lemma2_certificate_text(words);
    rep.pass = r.seed_ok && r.dimension == 100 && r.rank_q == 100 && r.units_integral;
    return rep;
}

StepReport replay_g2_sanity()
{
    StepReport rep;
    rep.step = "g2-sanity";
    bool ok = true;
    std::vector<std::string> excluded;
    for (const auto& c : g2_sanity()) {
        std::string v = c.evaluated ? (c.holds ? "holds" : "fails") : "excluded";
        if (!c.note.empty())
            v += " (" + c.note + ")";
        rep.add(c.id, v);
        if (c.evaluated)
            ok = ok && c.holds;
        else
            excluded.push_back(c.id);
    }
    rep.add("excluded", excluded.empty() ? "none" : join(excluded));
    rep.pass = ok;
    return rep;
}

const std::vector<std::string>& replay_steps()
{
    static const std::vector<std::string> steps = {"golden", "patterns", "det76", "lemma2", "g2-sanity"};
    return steps;
}

std::vector<StepReport> replay(const std::string& step)
{
    std::vector<StepReport> out;
    for (const auto& s : replay_steps()) {
        if (step != "all" && step != s)
            continue;
        if (s == "golden")
            out.push_back(replay_golden());
        else if (s == "patterns")
            out.push_back(replay_patterns());
        else if (s == "det76")
            out.push_back(replay_det76());
        else if (s == "lemma2")
            out.push_back(replay_lemma2());
        else
            out.push_back(replay_g2_sanity());
    }
    if (out.empty())
        throw data_error("unknown replay step '" + step + "'");
    return out;
}

}  // namespace chev
