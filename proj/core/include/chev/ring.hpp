#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chev {

class ring_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

bool is_prime(long n);
mpq_class parse_rational(std::string_view s);
long mod_inverse(long a, long m);  // 0 if not invertible

// Z/p^k. fp:p is the k = 1 case.
class ZModPk {
public:
    using elem = std::int64_t;
    using residue_ring = ZModPk;

    ZModPk(long p, int k);

    long p() const { return p_; }
    int k() const { return k_; }
    std::int64_t modulus() const { return mod_; }
    bool is_field() const { return k_ == 1; }
    std::string name() const;

    elem zero() const { return 0; }
    elem one() const { return 1 % mod_; }
    elem from_int(long long v) const;
    elem from_mpz(const mpz_class& v) const;
    elem from_mpq(const mpq_class& v) const;

    elem add(elem a, elem b) const { elem s = a + b; return s >= mod_ ? s - mod_ : s; }
    elem sub(elem a, elem b) const { elem s = a - b; return s < 0 ? s + mod_ : s; }
    elem neg(elem a) const { return a == 0 ? 0 : mod_ - a; }
    elem mul(elem a, elem b) const { return static_cast<elem>((__int128)a * b % mod_); }

    bool eq(elem a, elem b) const { return a == b; }
    bool is_zero(elem a) const { return a == 0; }
    bool is_unit(elem a) const { return a % p_ != 0; }
    std::optional<elem> inv(elem a) const;

    residue_ring residue_field() const { return ZModPk(p_, 1); }
    std::int64_t residue(elem a) const { return a % p_; }

    std::string str(elem a) const { return std::to_string(a); }
    elem parse(std::string_view s) const { return from_mpq(parse_rational(s)); }

    elem random(Rng& g) const;
    elem random_unit(Rng& g) const;
    elem random_nonunit(Rng& g) const;

private:
    long p_;
    int k_;
    std::int64_t mod_;
};

// Rationals; the residue field of the jet ring.
class Rationals {
public:
    using elem = mpq_class;
    using residue_ring = Rationals;

    bool is_field() const { return true; }
    std::string name() const { return "q"; }

    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
    elem from_mpz(const mpz_class& v) const { return mpq_class(v); }
    elem from_mpq(const mpq_class& v) const { return v; }

    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem neg(const elem& a) const { return -a; }
    elem mul(const elem& a, const elem& b) const { return a * b; }

    bool eq(const elem& a, const elem& b) const { return a == b; }
    bool is_zero(const elem& a) const { return sgn(a) == 0; }
    bool is_unit(const elem& a) const { return sgn(a) != 0; }
    std::optional<elem> inv(const elem& a) const;

    residue_ring residue_field() const { return {}; }
    elem residue(const elem& a) const { return a; }

    std::string str(const elem& a) const { return a.get_str(); }
    elem parse(std::string_view s) const { return parse_rational(s); }

    elem random(Rng& g) const;
    elem random_unit(Rng& g) const;
    elem random_nonunit(Rng&) const { return 0; }
};

// Rationals with denominator prime to p.
class ZLoc {
public:
    using elem = mpq_class;
    using residue_ring = ZModPk;

    explicit ZLoc(long p);

    long p() const { return p_; }
    bool is_field() const { return false; }
    std::string name() const { return "zloc:" + std::to_string(p_); }

    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
    elem from_mpz(const mpz_class& v) const { return mpq_class(v); }
    elem from_mpq(const mpq_class& v) const;

    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem neg(const elem& a) const { return -a; }
    elem mul(const elem& a, const elem& b) const { return a * b; }

    bool eq(const elem& a, const elem& b) const { return a == b; }
    bool is_zero(const elem& a) const { return sgn(a) == 0; }
    bool is_unit(const elem& a) const;
    std::optional<elem> inv(const elem& a) const;

    residue_ring residue_field() const { return ZModPk(p_, 1); }
    std::int64_t residue(const elem& a) const;

    std::string str(const elem& a) const { return a.get_str(); }
    elem parse(std::string_view s) const { return from_mpq(parse_rational(s)); }

    elem random(Rng& g) const;
    elem random_unit(Rng& g) const;
    elem random_nonunit(Rng& g) const;

private:
    long p_;
};

struct DualElem {
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend bool operator==(const DualElem&, const DualElem&) = default;
};

// F_p[e]/(e^2).
class Dual {
public:
    using elem = DualElem;
    using residue_ring = ZModPk;

    explicit Dual(long p);

    long p() const { return p_; }
    bool is_field() const { return false; }
    std::string name() const { return "dual:" + std::to_string(p_); }

    elem zero() const { return {}; }
    elem one() const { return {1, 0}; }
    elem eps() const { return {0, 1}; }
    elem make(long long a, long long b) const { return {f_.from_int(a), f_.from_int(b)}; }
    elem from_int(long long v) const { return {f_.from_int(v), 0}; }
    elem from_mpz(const mpz_class& v) const { return {f_.from_mpz(v), 0}; }
    elem from_mpq(const mpq_class& v) const { return {f_.from_mpq(v), 0}; }

    elem add(elem x, elem y) const { return {f_.add(x.a, y.a), f_.add(x.b, y.b)}; }
    elem sub(elem x, elem y) const { return {f_.sub(x.a, y.a), f_.sub(x.b, y.b)}; }
    elem neg(elem x) const { return {f_.neg(x.a), f_.neg(x.b)}; }
    elem mul(elem x, elem y) const
    {
        return {f_.mul(x.a, y.a), f_.add(f_.mul(x.a, y.b), f_.mul(x.b, y.a))};
    }

    bool eq(elem x, elem y) const { return x == y; }
    bool is_zero(elem x) const { return x.a == 0 && x.b == 0; }
    bool is_unit(elem x) const { return x.a != 0; }
    std::optional<elem> inv(elem x) const;

    residue_ring residue_field() const { return f_; }
    std::int64_t residue(elem x) const { return x.a; }

    std::string str(elem x) const;
    elem parse(std::string_view s) const;

    elem random(Rng& g) const { return {f_.random(g), f_.random(g)}; }
    elem random_unit(Rng& g) const { return {f_.random_unit(g), f_.random(g)}; }
    elem random_nonunit(Rng& g) const { return {0, f_.random(g)}; }

private:
    long p_;
    ZModPk f_;
};

// F_{p^2} = F_p[i]/(i^2 - r), r the least quadratic non-residue.
class Fq2 {
public:
    using elem = DualElem;
    using residue_ring = Fq2;

    explicit Fq2(long p);

    long p() const { return p_; }
    long nonresidue() const { return r_; }
    bool is_field() const { return true; }
    std::string name() const { return "fq:" + std::to_string(p_) + "^2"; }

    elem zero() const { return {}; }
    elem one() const { return {1, 0}; }
    elem gen() const { return {0, 1}; }
    elem make(long long a, long long b) const { return {f_.from_int(a), f_.from_int(b)}; }
    elem from_int(long long v) const { return {f_.from_int(v), 0}; }
    elem from_mpz(const mpz_class& v) const { return {f_.from_mpz(v), 0}; }
    elem from_mpq(const mpq_class& v) const { return {f_.from_mpq(v), 0}; }

    elem add(elem x, elem y) const { return {f_.add(x.a, y.a), f_.add(x.b, y.b)}; }
    elem sub(elem x, elem y) const { return {f_.sub(x.a, y.a), f_.sub(x.b, y.b)}; }
    elem neg(elem x) const { return {f_.neg(x.a), f_.neg(x.b)}; }
    elem mul(elem x, elem y) const;

    bool eq(elem x, elem y) const { return x == y; }
    bool is_zero(elem x) const { return x.a == 0 && x.b == 0; }
    bool is_unit(elem x) const { return !is_zero(x); }
    std::optional<elem> inv(elem x) const;
    elem frobenius(elem x) const { return {x.a, f_.neg(x.b)}; }

    residue_ring residue_field() const { return *this; }
    elem residue(elem x) const { return x; }

    std::string str(elem x) const;
    elem parse(std::string_view s) const;

    elem random(Rng& g) const { return {f_.random(g), f_.random(g)}; }
    elem random_unit(Rng& g) const;
    elem random_nonunit(Rng&) const { return {}; }

private:
    long p_;
    long r_;
    ZModPk f_;
};

struct JetElem {
    mpq_class c;
    std::vector<std::pair<int, mpq_class>> y;  // sorted by symbol, no zero coefficients
    friend bool operator==(const JetElem& u, const JetElem& v) { return u.c == v.c && u.y == v.y; }
};

// Q[y_1..y_m] truncated at degree two: y_i y_j = 0 for all i, j.
class Jet {
public:
    using elem = JetElem;
    using residue_ring = Rationals;

    explicit Jet(int m);

    int symbols() const { return m_; }
    bool is_field() const { return false; }
    std::string name() const { return "jet:" + std::to_string(m_); }

    elem zero() const { return {}; }
    elem one() const { return {1, {}}; }
    elem symbol(int i) const;  // 1-based
    elem from_int(long long v) const { return {mpq_class(static_cast<long>(v)), {}}; }
    elem from_mpz(const mpz_class& v) const { return {mpq_class(v), {}}; }
    elem from_mpq(const mpq_class& v) const { return {v, {}}; }

    elem add(const elem& u, const elem& v) const;
    elem sub(const elem& u, const elem& v) const;
    elem neg(const elem& u) const;
    elem mul(const elem& u, const elem& v) const;

    bool eq(const elem& u, const elem& v) const { return u == v; }
    bool is_zero(const elem& u) const { return sgn(u.c) == 0 && u.y.empty(); }
    bool is_unit(const elem& u) const { return sgn(u.c) != 0; }
    std::optional<elem> inv(const elem& u) const;

    residue_ring residue_field() const { return {}; }
    mpq_class residue(const elem& u) const { return u.c; }

    // a = constant + sum coeffs[i] y_{i+1}
    std::pair<mpq_class, std::vector<mpq_class>> linear_coeffs(const elem& u) const;

    std::string str(const elem& u) const;
    elem parse(std::string_view s) const;

    elem random(Rng& g) const;
    elem random_unit(Rng& g) const;
    elem random_nonunit(Rng& g) const;

    elem scaled(const elem& u, const mpq_class& s) const;

private:
    int m_;
};

template <class R>
typename R::elem ring_pow(const R& r, typename R::elem a, long e)
{
    if (e < 0) {
        auto ia = r.inv(a);
        if (!ia)
            throw ring_error("negative power of a non-unit");
        a = *ia;
        e = -e;
    }
    auto out = r.one();
    while (e > 0) {
        if (e & 1)
            out = r.mul(out, a);
        a = r.mul(a, a);
        e >>= 1;
    }
    return out;
}

template <class R>
typename R::elem unit_inverse(const R& r, const typename R::elem& a)
{
    auto ia = r.inv(a);
    if (!ia)
        throw ring_error("element " + r.str(a) + " is not a unit in " + r.name());
    return *ia;
}

// a = u1 + u2 with both units; needs 1/2.
template <class R>
std::pair<typename R::elem, typename R::elem> sum_of_two_units(const R& r, const typename R::elem& a)
{
    if (r.is_unit(a)) {
        // a - 1 or a + 1 is a unit: if both were in J so would be 2.
        auto am = r.sub(a, r.one());
        if (r.is_unit(am))
            return {r.one(), am};
        auto two = r.from_int(2);
        return {r.mul(a, unit_inverse(r, two)), r.mul(a, unit_inverse(r, two))};
    }
    return {r.one(), r.sub(a, r.one())};
}

}  // namespace chev
