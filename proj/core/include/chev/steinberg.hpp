#pragma once

#include "chev/algebra.hpp"
#include "chev/group.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chev {

// One factor x_{i alpha + j beta}(c t^i u^j) of the commutator formula.
struct CommutatorTerm {
    Root root;
    int i = 0;
    int j = 0;
    long long c = 0;
};

// Keyed by (index of alpha, index of beta) for non-opposite pairs.
using CommutatorTable = std::map<std::pair<int, int>, std::vector<CommutatorTerm>>;

// Roots i alpha + j beta (i, j > 0), in height-increasing order (i + j, then i).
std::vector<CommutatorTerm> commutator_support(const RootSystem& rs, Root alpha, Root beta);

struct CommutatorConstants {
    CommutatorTable table;
    bool integral = true;
    bool independent = true;  // same values for every (t, u) draw
    int draws = 0;
    std::vector<std::string> problems;
};

// Solves for c_ij over Z localized at 5, once per draw of units (t, u).
CommutatorConstants commutator_constants(SystemType t, int draws, Rng& rng);

// The sign c in w_alpha x_beta(t) w_alpha^{-1} = x_{w_alpha(beta)}(c t).
using ReflectionSigns = std::map<std::pair<int, int>, int>;
ReflectionSigns reflection_signs(SystemType t);

// Reads the factors of a commutator left to right: returns the parameters
// s_k such that comm = prod x_{root_k}(s_k), or nullopt if it does not factor.
template <class R>
std::optional<std::vector<typename R::elem>> peel_commutator(const ChevalleyGroup<R>& g, Matrix<R> comm,
                                                              const std::vector<CommutatorTerm>& support)
{
    const R& r = g.ring();
    const RootSystem& rs = g.system();
    std::vector<typename R::elem> out;
    for (const auto& term : support) {
        int row = rs.index(term.root);
        bool done = false;
        for (int k = 0; k < 2 && !done; ++k) {
            int p = rs.pairing(term.root, rs.simple(k));
            auto ip = r.inv(r.from_int(p));
            if (p == 0 || !ip)
                continue;
            auto s = r.neg(r.mul(comm(row, rs.cartan_position(k)), *ip));
            comm = g.x(term.root, r.neg(s)) * comm;
            out.push_back(s);
            done = true;
        }
        if (!done)
            return std::nullopt;
    }
    if (!comm.is_identity())
        return std::nullopt;
    return out;
}

struct RelationTally {
    long checks = 0;
    long failures = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok) {
            if (failures == 0)
                first_failure = what;
            ++failures;
        }
    }
};

struct SteinbergReport {
    std::string ring;
    std::string system;
    int samples = 0;
    std::map<std::string, RelationTally> relations;  // "R1".."R6"
    bool all_pass() const
    {
        for (const auto& [k, v] : relations)
            if (v.failures)
                return false;
        return true;
    }
};

// R1-R6 for every root (pair) with `samples` random draws each.
template <class R>
SteinbergReport check_steinberg(const ChevalleyGroup<R>& g, int samples, Rng& rng, const CommutatorTable& c2,
                                const ReflectionSigns& c5)
{
    using E = typename R::elem;
    const R& r = g.ring();
    const RootSystem& rs = g.system();
    const auto& roots = rs.roots();
    SteinbergReport rep;
    rep.ring = r.name();
    rep.system = rs.name();
    rep.samples = samples;
    for (const char* k : {"R1", "R2", "R3", "R4", "R5", "R6"})
        rep.relations[k];
    auto tag = [&](Root a, Root b) { return "(" + rs.root_name(a) + ", " + rs.root_name(b) + ")"; };
    const E one = r.one(), mone = r.neg(r.one());

    for (Root a : roots) {
        auto name = rs.root_name(a);
        const auto w1 = g.w(a, one);
        const auto hm1 = g.h(a, mone);
        rep.relations["R3"].record(w1 * w1 == hm1, "w^2 = h(-1) at " + name);
        rep.relations["R3"].record(matrix_power(w1, 4).is_identity(), "w^4 = 1 at " + name);
        for (int s = 0; s < samples; ++s) {
            E t = r.random(rng), u = r.random(rng);
            rep.relations["R1"].record(g.x(a, t) * g.x(a, u) == g.x(a, r.add(t, u)), "x(t)x(u) = x(t+u) at " + name);
            E v = r.random_unit(rng);
            auto wv = g.w(a, v);
            bool ok = wv == g.h(a, v) * w1 && wv * g.w(a, r.neg(v)) == g.identity() &&
                      g.w(-a, r.neg(unit_inverse(r, v))) == wv;
            rep.relations["R3"].record(ok, "w(t) = h(t) w(1) at " + name);
        }
    }

    for (std::size_t ia = 0; ia < roots.size(); ++ia)
        for (std::size_t ib = 0; ib < roots.size(); ++ib) {
            Root a = roots[ia], b = roots[ib];
            const auto wa = g.w(a, one);
            const auto wa_inv = g.w(a, mone);
            const Root wb = rs.reflect(a, b);
            const int c = c5.at({static_cast<int>(ia), static_cast<int>(ib)});
            const int pr = rs.pairing(b, a);
            for (int s = 0; s < samples; ++s) {
                E t = r.random(rng), u = r.random(rng);
                E v = r.random_unit(rng);
                if (b != a && b != -a) {
                    auto comm = g.x(a, t) * g.x(b, u) * g.x(a, r.neg(t)) * g.x(b, r.neg(u));
                    auto prod = g.identity();
                    for (const auto& term : c2.at({static_cast<int>(ia), static_cast<int>(ib)}))
                        prod = prod * g.x(term.root, r.mul(r.from_int(term.c),
                                                           r.mul(ring_pow(r, t, term.i), ring_pow(r, u, term.j))));
                    rep.relations["R2"].record(comm == prod, "commutator at " + tag(a, b));
                }
                rep.relations["R4"].record(wa * g.h(b, v) * wa_inv == g.h(wb, v), "w h w^-1 at " + tag(a, b));
                rep.relations["R5"].record(wa * g.x(b, t) * wa_inv == g.x(wb, r.mul(r.from_int(c), t)),
                                           "w x w^-1 at " + tag(a, b));
                auto hv = g.h(a, v);
                rep.relations["R6"].record(hv * g.x(b, u) * g.h(a, unit_inverse(r, v)) ==
                                               g.x(b, r.mul(ring_pow(r, v, pr), u)),
                                           "h x h^-1 at " + tag(a, b));
            }
        }
    return rep;
}

}  // namespace chev
