#include "chev/steinberg.hpp"

#include <algorithm>

namespace chev {

std::vector<CommutatorTerm> commutator_support(const RootSystem& rs, Root alpha, Root beta)
{
    std::vector<CommutatorTerm> out;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            Root g = i * alpha + j * beta;
            if (rs.contains(g))
                out.push_back({g, i, j, 0});
        }
    std::stable_sort(out.begin(), out.end(), [](const CommutatorTerm& x, const CommutatorTerm& y) {
        return x.i + x.j != y.i + y.j ? x.i + x.j < y.i + y.j : x.i < y.i;
    });
    return out;
}

CommutatorConstants commutator_constants(SystemType type, int draws, Rng& rng)
{
    ZLoc r(5);
    ChevalleyGroup<ZLoc> g(r, type);
    const RootSystem& rs = g.system();
    const auto& roots = rs.roots();
    CommutatorConstants out;
    out.draws = draws;
    for (std::size_t ia = 0; ia < roots.size(); ++ia)
        for (std::size_t ib = 0; ib < roots.size(); ++ib) {
            Root a = roots[ia], b = roots[ib];
            if (a == b || a == -b)
                continue;
            auto support = commutator_support(rs, a, b);
            std::vector<mpq_class> first;
            for (int d = 0; d < draws; ++d) {
                mpq_class t = d == 0 ? mpq_class(1) : r.random_unit(rng);
                mpq_class u = d == 0 ? mpq_class(1) : r.random_unit(rng);
                auto comm = g.x(a, t) * g.x(b, u) * g.x(a, -t) * g.x(b, -u);
                auto s = peel_commutator(g, comm, support);
                if (!s) {
                    out.integral = false;
                    out.problems.push_back("commutator does not factor at (" + rs.root_name(a) + ", " +
                                           rs.root_name(b) + ")");
                    break;
                }
                std::vector<mpq_class> c;
                for (std::size_t k = 0; k < support.size(); ++k) {
                    mpq_class den = ring_pow(r, t, support[k].i) * ring_pow(r, u, support[k].j);
                    c.push_back((*s)[k] / den);
                }
                if (d == 0)
                    first = c;
                else if (c != first)
                    out.independent = false;
            }
            for (std::size_t k = 0; k < first.size(); ++k) {
                if (first[k].get_den() != 1) {
                    out.integral = false;
                    out.problems.push_back("non-integral constant at (" + rs.root_name(a) + ", " + rs.root_name(b) + ")");
                }
                support[k].c = first[k].get_num().get_si();
            }
            out.table[{static_cast<int>(ia), static_cast<int>(ib)}] = support;
        }
    return out;
}

ReflectionSigns reflection_signs(SystemType type)
{
    Rationals q;
    ChevalleyGroup<Rationals> g(q, type);
    const RootSystem& rs = g.system();
    const auto& roots = rs.roots();
    ReflectionSigns out;
    for (std::size_t ia = 0; ia < roots.size(); ++ia) {
        auto wa = g.w(roots[ia], 1);
        auto wi = g.w(roots[ia], -1);
        for (std::size_t ib = 0; ib < roots.size(); ++ib) {
            Root wb = rs.reflect(roots[ia], roots[ib]);
            auto lhs = wa * g.x(roots[ib], 1) * wi;
            int c = lhs == g.x(wb, 1) ? 1 : lhs == g.x(wb, -1) ? -1 : 0;
            out[{static_cast<int>(ia), static_cast<int>(ib)}] = c;
        }
    }
    return out;
}

}  // namespace chev
