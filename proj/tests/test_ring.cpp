#include "doctest.h"
#include "support.hpp"

#include "chev/any_ring.hpp"
#include "chev/ring.hpp"

using namespace chev;

namespace {

template <class R>
bool ring_axioms(gen::Source& s, const R& r)
{
    auto a = gen::any(s, r), b = gen::any(s, r), c = gen::any(s, r);
    bool ok = r.eq(r.add(a, b), r.add(b, a)) && r.eq(r.mul(a, b), r.mul(b, a)) &&
              r.eq(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c))) &&
              r.eq(r.add(r.add(a, b), c), r.add(a, r.add(b, c))) &&
              r.eq(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c))) &&
              r.is_zero(r.add(a, r.neg(a))) && r.eq(r.sub(a, b), r.add(a, r.neg(b))) &&
              r.eq(r.mul(a, r.one()), a);
    auto ia = r.inv(a);
    if (r.is_unit(a))
        ok = ok && ia && r.eq(r.mul(a, *ia), r.one());
    else
        ok = ok && !ia;
    return ok;
}

// Units are exactly the elements with nonzero residue, and residue is multiplicative.
template <class R>
bool local_ring(gen::Source& s, const R& r)
{
    auto a = gen::any(s, r), b = gen::any(s, r);
    auto k = r.residue_field();
    bool unit_iff = r.is_unit(a) == !k.is_zero(r.residue(a));
    bool hom = k.eq(r.residue(r.mul(a, b)), k.mul(r.residue(a), r.residue(b))) &&
               k.eq(r.residue(r.add(a, b)), k.add(r.residue(a), r.residue(b)));
    return unit_iff && hom;
}

}  // namespace

TEST_CASE("ring axioms on generated elements")
{
    CHECK(gen::for_all(300, 1, [](auto& s) { return ring_axioms(s, ZModPk(5, 2)); }) == -1);
    CHECK(gen::for_all(300, 2, [](auto& s) { return ring_axioms(s, ZModPk(3, 2)); }) == -1);
    CHECK(gen::for_all(300, 3, [](auto& s) { return ring_axioms(s, ZModPk(7, 1)); }) == -1);
    CHECK(gen::for_all(300, 4, [](auto& s) { return ring_axioms(s, ZLoc(5)); }) == -1);
    CHECK(gen::for_all(300, 5, [](auto& s) { return ring_axioms(s, Dual(5)); }) == -1);
    CHECK(gen::for_all(300, 6, [](auto& s) { return ring_axioms(s, Fq2(5)); }) == -1);
    CHECK(gen::for_all(300, 7, [](auto& s) { return ring_axioms(s, Fq2(7)); }) == -1);
    CHECK(gen::for_all(300, 8, [](auto& s) { return ring_axioms(s, Rationals()); }) == -1);
}

TEST_CASE("local rings: unit iff residue nonzero")
{
    CHECK(gen::for_all(300, 11, [](auto& s) { return local_ring(s, ZModPk(5, 2)); }) == -1);
    CHECK(gen::for_all(300, 12, [](auto& s) { return local_ring(s, ZModPk(3, 2)); }) == -1);
    CHECK(gen::for_all(300, 13, [](auto& s) { return local_ring(s, ZLoc(5)); }) == -1);
    CHECK(gen::for_all(300, 14, [](auto& s) { return local_ring(s, Dual(7)); }) == -1);
}

TEST_CASE("zmod reduces integers and rationals")
{
    ZModPk r(5, 2);
    CHECK(r.modulus() == 25);
    CHECK(r.from_int(-1) == 24);
    CHECK(r.from_int(51) == 1);
    CHECK(r.mul(r.from_mpq(mpq_class(1, 2)), 2) == 1);
    CHECK_THROWS_AS(r.from_mpq(mpq_class(1, 5)), ring_error);
    CHECK(r.is_unit(r.from_int(7)));
    CHECK_FALSE(r.is_unit(r.from_int(10)));
}

TEST_CASE("zloc rejects denominators divisible by p")
{
    ZLoc r(5);
    CHECK_THROWS_AS(r.from_mpq(mpq_class(2, 15)), ring_error);
    CHECK(r.is_unit(mpq_class(3, 7)));
    CHECK_FALSE(r.is_unit(mpq_class(10, 3)));
    CHECK(r.residue(mpq_class(1, 2)) == 3);
    CHECK_FALSE(r.inv(mpq_class(5)).has_value());
}

TEST_CASE("dual numbers square eps to zero")
{
    Dual r(5);
    CHECK(r.is_zero(r.mul(r.eps(), r.eps())));
    auto x = r.make(2, 3);
    auto ix = r.inv(x);
    REQUIRE(ix);
    // (a + b e)^-1 = a^-1 - b a^-2 e
    CHECK(*ix == r.make(3, -3 * 3 * 3));
    CHECK_FALSE(r.inv(r.eps()).has_value());
    CHECK(r.str(r.make(1, -1)) == "1+4e");
    CHECK(r.parse("1+4e") == r.make(1, 4));
}

TEST_CASE("fq frobenius is an involutive ring map fixing the prime field")
{
    for (long p : {5L, 7L, 11L}) {
        Fq2 q(p);
        int bad = gen::for_all(200, 20 + p, [&](auto& s) {
            auto a = gen::any(s, q), b = gen::any(s, q);
            // Oracle: x^p computed by repeated multiplication.
            return q.eq(q.frobenius(a), ring_pow(q, a, p)) &&
                   q.eq(q.frobenius(q.mul(a, b)), q.mul(q.frobenius(a), q.frobenius(b))) &&
                   q.eq(q.frobenius(q.frobenius(a)), a);
        });
        CHECK(bad == -1);
        for (long c = 0; c < p; ++c)
            CHECK(q.eq(q.frobenius(q.from_int(c)), q.from_int(c)));
        // gen^2 is the non-residue, so F_p[i] is a field.
        CHECK(q.mul(q.gen(), q.gen()) == q.from_int(q.nonresidue()));
        long count = 0;
        for (long a = 0; a < p; ++a)
            for (long b = 0; b < p; ++b)
                count += q.is_zero(q.make(a, b)) || q.inv(q.make(a, b)).has_value();
        CHECK(count == p * p);
    }
}

TEST_CASE("jet ring truncates at degree two")
{
    Jet j(3);
    auto y1 = j.symbol(1), y2 = j.symbol(2);
    CHECK(j.is_zero(j.mul(y1, y2)));
    CHECK(j.is_zero(j.mul(y1, y1)));
    auto u = j.add(j.from_int(2), j.scaled(y2, 3));
    auto [c, lin] = j.linear_coeffs(u);
    CHECK(c == 2);
    CHECK(lin == std::vector<mpq_class>{0, 3, 0});
    auto iu = j.inv(u);
    REQUIRE(iu);
    CHECK(j.eq(j.mul(u, *iu), j.one()));
    CHECK_FALSE(j.inv(y1).has_value());
    CHECK_THROWS_AS(j.symbol(4), ring_error);
    CHECK(j.eq(j.parse(j.str(u)), u));
}

TEST_CASE("ring descriptors")
{
    for (const char* s : {"zmod:5^2", "fp:7", "zloc:5", "dual:5", "fq:5^2", "jet:76", "q"})
        CHECK(to_string(parse_descriptor(s)) == s);
    CHECK_THROWS_AS(parse_descriptor("zmod:6^2"), ring_error);
    CHECK_THROWS_AS(parse_descriptor("fq:5^3"), ring_error);
    CHECK_THROWS_AS(parse_descriptor("zmod:5"), ring_error);
    CHECK_THROWS_AS(parse_descriptor("poly:5"), ring_error);
    CHECK_THROWS_AS(make_ring("zmod:3^2", {2, 3}), ring_error);
    CHECK_NOTHROW(make_ring("zmod:5^2", {2, 3}));
    CHECK(ring_name(make_ring("dual:7")) == "dual:7");
}

TEST_CASE("every element of a local ring with 1/2 is a sum of two units")
{
    ZModPk r(5, 2);
    for (long v = 0; v < 25; ++v) {
        auto [u1, u2] = sum_of_two_units(r, r.from_int(v));
        CHECK(r.is_unit(u1));
        CHECK(r.is_unit(u2));
        CHECK(r.add(u1, u2) == v);
    }
}
