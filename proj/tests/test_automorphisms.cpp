#include "doctest.h"
#include "support.hpp"

#include "chev/automorphisms.hpp"

using namespace chev;

namespace {

template <class R>
bool covariant(gen::Source& s, const ChevalleyGroup<R>& g, const RingAutomorphism<R>& rho)
{
    const auto& roots = g.system().roots();
    Root a = roots[s.in(0, static_cast<long long>(roots.size()) - 1)];
    auto t = gen::any(s, g.ring());
    return ring_auto_apply(rho, g.x(a, t)) == g.x(a, rho.map(t));
}

// Commutant of the whole torus over F_p, from every h_alpha(t), t in F_p^*.
// For diagonal h the equation (A h - h A)_ij = 0 reads A_ij (h_jj - h_ii) = 0,
// so the system is assembled entrywise and handed to an exact nullspace.
std::vector<std::vector<bool>> full_torus_commutant(long p, SystemType type, std::size_t& dim)
{
    ZModPk f(p, 1);
    ChevalleyGroup<ZModPk> g(f, type);
    const std::size_t n = g.dim();
    std::vector<std::vector<std::int64_t>> rows;
    for (Root a : g.system().roots())
        for (long t = 1; t < p; ++t) {
            auto h = g.h(a, f.from_int(t));
            REQUIRE(h.is_diagonal());
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    auto c = f.sub(h(j, j), h(i, i));
                    if (c == 0)
                        continue;
                    std::vector<std::int64_t> row(n * n, 0);
                    row[i * n + j] = c;
                    rows.push_back(std::move(row));
                }
        }
    Matrix<ZModPk> sys(f, rows.size(), n * n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n * n; ++c)
            sys(r, c) = rows[r][c];
    auto ns = nullspace(sys);
    dim = ns.size();
    std::vector<std::vector<bool>> free(n, std::vector<bool>(n, false));
    for (const auto& v : ns)
        for (std::size_t c = 0; c < n * n; ++c)
            if (v[c] != 0)
                free[c / n][c % n] = true;
    return free;
}

}  // namespace

TEST_CASE("ring automorphisms act entrywise on root elements")
{
    for (auto t : {SystemType::B2, SystemType::G2}) {
        Dual d(5);
        ChevalleyGroup<Dual> gd(d, t);
        for (long c : {1L, 2L, 3L, 4L})
            CHECK(gen::for_all(100, 70 + c, [&](auto& s) { return covariant(s, gd, dual_scaling(d, c)); }) == -1);
        Fq2 q(5);
        ChevalleyGroup<Fq2> gq(q, t);
        CHECK(gen::for_all(100, 75, [&](auto& s) { return covariant(s, gq, frobenius(q)); }) == -1);
    }
}

TEST_CASE("ring map checks")
{
    Dual d(7);
    std::vector<DualElem> sample;
    for (long a = 0; a < 7; ++a)
        for (long b = 0; b < 7; b += 3)
            sample.push_back(d.make(a, b));
    CHECK(verify_ring_map(d, dual_scaling(d, 3).map, sample).all_pass());
    CHECK_THROWS_AS(dual_scaling(d, 7), ring_error);
    // Squaring is not additive on F_7[e].
    auto sq = [&](const DualElem& x) { return d.mul(x, x); };
    CHECK_FALSE(verify_ring_map(d, sq, sample).all_pass());
    // Killing eps is a ring map but not injective.
    auto kill = [](const DualElem& x) { return DualElem{x.a, 0}; };
    auto rep = verify_ring_map(d, kill, sample);
    CHECK_FALSE(rep.all_pass());
    for (const auto& e : rep.entries)
        CHECK(e.pass == (e.name != "injective_on_sample"));
}

TEST_CASE("standard automorphism specs pass the relation checks")
{
    Rng rng(5);
    Fq2 q(5);
    ChevalleyGroup<Fq2> g(q, SystemType::B2);
    StandardAutoSpec<Fq2> f;
    f.steps.push_back(frobenius(q));
    f.steps.push_back(g.x(Root{1, 0}, q.make(1, 2)) * g.w(Root{0, 1}, q.one()));
    f.central.scalar["x:a1"] = q.from_int(2);
    auto rep = verify_automorphism(g, f, 4, rng);
    for (const auto& e : rep.entries) {
        CAPTURE(e.name);
        CHECK(e.pass);
    }
}

TEST_CASE("a diagonal matrix off the torus is not a Lie automorphism")
{
    ZModPk f(7, 1);
    ChevalleyGroup<ZModPk> g(f, SystemType::G2);
    auto d = g.identity();
    d(0, 0) = 2;
    CHECK_FALSE(is_lie_automorphism(g, d));
    CHECK(is_lie_automorphism(g, g.torus({f.from_int(2), f.from_int(3)})));
    CHECK(is_lie_automorphism(g, g.w(Root{3, 1}, f.one())));
}

TEST_CASE("torus commutant shape matches the full-torus nullspace")
{
    for (long p : {5L, 7L, 11L})
        for (auto t : {SystemType::B2, SystemType::G2}) {
            CAPTURE(p);
            auto shape = torus_commutant_shape(p, t);
            std::size_t dim = 0;
            auto oracle = full_torus_commutant(p, t, dim);
            CHECK(shape.free == oracle);
            CHECK(shape.dimension == dim);
            const std::size_t m = root_system(t).num_roots();
            CHECK(shape.cartan_block_full);
            CHECK(shape.off_blocks_zero);
            if (p == 5 && t == SystemType::B2) {
                // Long roots pair evenly with every root and F_5^* has order 4,
                // so the torus cannot tell beta from -beta for long beta.
                CHECK(dim == m + 4 + 4);
                CHECK_FALSE(shape.root_block_diagonal);
                CHECK(shape.free[4][5]);
                CHECK(shape.free[6][7]);
                continue;
            }
            CHECK(dim == m + 4);
            CHECK(shape.root_block_diagonal);
        }
    CHECK_THROWS_AS(torus_commutant_shape(3, SystemType::B2), ring_error);
}
