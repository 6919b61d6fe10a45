#pragma once

// Hand-rolled generators for the property tests. Elements are built from raw
// integers through from_int / make / from_mpq, never through the rings' own
// random(), so a bug in those cannot hide itself.

#include "chev/ring.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace gen {

class Source {
public:
    explicit Source(std::uint64_t seed) : g_(seed) {}

    long long in(long long lo, long long hi)  // inclusive
    {
        return std::uniform_int_distribution<long long>(lo, hi)(g_);
    }
    bool coin() { return in(0, 1) == 1; }
    std::mt19937_64& engine() { return g_; }

private:
    std::mt19937_64 g_;
};

// Small integers, with the edge values 0, 1, -1 over-represented.
inline long long small_int(Source& s)
{
    switch (s.in(0, 7)) {
    case 0: return 0;
    case 1: return 1;
    case 2: return -1;
    default: return s.in(-60, 60);
    }
}

inline long long coprime_to(Source& s, long p, long long lo, long long hi)
{
    for (;;) {
        long long v = s.in(lo, hi);
        if (v % p != 0)
            return v;
    }
}

inline chev::ZModPk::elem any(Source& s, const chev::ZModPk& r) { return r.from_int(small_int(s)); }

inline chev::ZLoc::elem any(Source& s, const chev::ZLoc& r)
{
    mpq_class v(static_cast<long>(small_int(s)), static_cast<long>(coprime_to(s, r.p(), 1, 40)));
    v.canonicalize();
    return r.from_mpq(v);
}

inline chev::DualElem any(Source& s, const chev::Dual& r) { return r.make(small_int(s), small_int(s)); }
inline chev::DualElem any(Source& s, const chev::Fq2& r) { return r.make(small_int(s), small_int(s)); }

inline mpq_class any(Source& s, const chev::Rationals&)
{
    mpq_class v(static_cast<long>(small_int(s)), static_cast<long>(s.in(1, 12)));
    v.canonicalize();
    return v;
}

template <class R>
typename R::elem unit(Source& s, const R& r)
{
    for (;;) {
        auto v = any(s, r);
        if (r.is_unit(v))
            return v;
    }
}

// Element of the maximal ideal: p times anything.
template <class R>
typename R::elem radical(Source& s, const R& r, long p)
{
    return r.mul(r.from_int(p), any(s, r));
}

// Runs prop on n generated cases; stops at the first failure and reports the case index.
template <class F>
int for_all(int n, std::uint64_t seed, F&& prop)
{
    Source s(seed);
    for (int i = 0; i < n; ++i)
        if (!prop(s))
            return i;
    return -1;
}

}  // namespace gen
