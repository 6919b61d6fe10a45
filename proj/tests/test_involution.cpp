#include "doctest.h"
#include "support.hpp"

#include "chev/group.hpp"
#include "chev/involution.hpp"

using namespace chev;

namespace {

// Trace of an idempotent over Z/p^k is its rank reduced mod p^k.
template <class R>
long trace_rank(const Matrix<R>& e)
{
    const R& r = e.ring();
    auto t = r.zero();
    for (std::size_t i = 0; i < e.rows(); ++i)
        t = r.add(t, e(i, i));
    return static_cast<long>(t);
}

// b = g a g^-1 with g a product of root elements at parameters in J.
bool congruence_pair(gen::Source& s, const ZModPk& r, SystemType t)
{
    ChevalleyGroup<ZModPk> g(r, t);
    const auto& rs = g.system();
    Root h_root = rs.roots()[s.in(0, static_cast<long long>(rs.num_roots()) - 1)];
    auto a = g.h(h_root, r.from_int(-1));
    auto c = g.identity();
    for (int k = 0; k < 4; ++k) {
        Root x_root = rs.roots()[s.in(0, static_cast<long long>(rs.num_roots()) - 1)];
        c = c * g.x(x_root, gen::radical(s, r, r.p()));
    }
    if (s.coin())  // conjugate a by a Weyl element too, so a is not always diagonal
        a = conjugate(g.w(rs.roots()[s.in(0, static_cast<long long>(rs.num_roots()) - 1)], r.one()), a);
    auto b = conjugate(c, a);
    auto lb = lift_basis(a, b);
    long ra = trace_rank(lb.source.e);
    long rb = trace_rank(idempotent_of(b));
    const long m = r.modulus();
    return lb.rank0_a == lb.rank0_b && lb.rank1_a == lb.rank1_b && static_cast<long>(lb.rank0_a) % m == ra &&
           static_cast<long>(lb.rank0_b) % m == rb && lb.rank0_a + lb.rank1_a == g.dim() &&
           lb.transition_is_identity_mod_J && lb.transition_unit_det && lb.adapted && lb.source.basis_invertible;
}

}  // namespace

TEST_CASE("split ranks of h_a1(-1) for B2 over Z/25")
{
    ZModPk r(5, 2);
    ChevalleyGroup<ZModPk> g(r, SystemType::B2);
    auto a = g.h(Root{1, 0}, r.from_int(-1));
    auto s = split_module(a);
    long plus = 0, minus = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        plus += a(i, i) == 1;
        minus += a(i, i) == r.from_int(-1);
    }
    CHECK(s.rank0 == 6);
    CHECK(s.rank1 == 4);
    CHECK(static_cast<long>(s.rank0) == plus);
    CHECK(static_cast<long>(s.rank1) == minus);
    CHECK(s.basis_invertible);
}

TEST_CASE("congruence-conjugated involutions have equal split ranks")
{
    for (auto t : {SystemType::B2, SystemType::G2}) {
        CHECK(gen::for_all(50, 61, [&](auto& s) { return congruence_pair(s, ZModPk(3, 2), t); }) == -1);
        CHECK(gen::for_all(50, 62, [&](auto& s) { return congruence_pair(s, ZModPk(5, 2), t); }) == -1);
    }
}

TEST_CASE("splitting needs an involution and a unit 2")
{
    ZModPk r(5, 2);
    ChevalleyGroup<ZModPk> g(r, SystemType::B2);
    CHECK_THROWS_AS(idempotent_of(g.x(Root{1, 0}, r.one())), involution_error);
    ZModPk r2(2, 3);
    auto m = Matrix<ZModPk>::identity(r2, 3);
    m(0, 0) = r2.from_int(-1);
    CHECK_THROWS_AS(idempotent_of(m), involution_error);
    auto a = g.h(Root{1, 0}, r.from_int(-1));
    auto b = g.h(Root{1, 1}, r.from_int(-1));
    CHECK_THROWS_AS(lift_basis(a, b), involution_error);
}
