#include "chev/ring.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace chev {

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

long mod_inverse(long a, long m)
{
    long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1 != 0) {
        long q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1)
        return 0;
    return ((x % m) + m) % m;
}

mpq_class parse_rational(std::string_view s)
{
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t.push_back(c);
    if (t.empty())
        throw ring_error("empty ring element");
    if (t[0] == '+')
        t.erase(0, 1);
    auto slash = t.find('/');
    auto digits = [](std::string_view d) {
        std::size_t i = (!d.empty() && d[0] == '-') ? 1 : 0;
        return i < d.size() && std::all_of(d.begin() + i, d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!digits(num) || !digits(den) || den[0] == '-')
        throw ring_error("malformed ring element '" + std::string(s) + "'");
    mpz_class d(den);
    if (d == 0)
        throw ring_error("zero denominator in '" + std::string(s) + "'");
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

// ---- ZModPk

ZModPk::ZModPk(long p, int k) : p_(p), k_(k), mod_(1)
{
    if (!is_prime(p))
        throw ring_error(std::to_string(p) + " is not prime");
    if (k < 1)
        throw ring_error("exponent must be at least 1");
    for (int i = 0; i < k; ++i) {
        if (mod_ > (std::int64_t{1} << 40) / p)
            throw ring_error("modulus too large");
        mod_ *= p;
    }
}

std::string ZModPk::name() const
{
    if (k_ == 1)
        return "fp:" + std::to_string(p_);
    return "zmod:" + std::to_string(p_) + "^" + std::to_string(k_);
}

ZModPk::elem ZModPk::from_int(long long v) const
{
    elem r = static_cast<elem>(v % mod_);
    return r < 0 ? r + mod_ : r;
}

ZModPk::elem ZModPk::from_mpz(const mpz_class& v) const
{
    mpz_class r = v % mpz_class(std::to_string(mod_));
    if (r < 0)
        r += mpz_class(std::to_string(mod_));
    return static_cast<elem>(r.get_si());
}

ZModPk::elem ZModPk::from_mpq(const mpq_class& v) const
{
    elem d = from_mpz(v.get_den());
    auto di = inv(d);
    if (!di)
        throw ring_error("denominator of " + v.get_str() + " is not a unit in " + name());
    return mul(from_mpz(v.get_num()), *di);
}

std::optional<ZModPk::elem> ZModPk::inv(elem a) const
{
    if (!is_unit(a))
        return std::nullopt;
    return mod_inverse(a, mod_);
}

ZModPk::elem ZModPk::random(Rng& g) const
{
    return std::uniform_int_distribution<elem>(0, mod_ - 1)(g);
}

ZModPk::elem ZModPk::random_unit(Rng& g) const
{
    for (;;) {
        elem a = random(g);
        if (is_unit(a))
            return a;
    }
}

ZModPk::elem ZModPk::random_nonunit(Rng& g) const
{
    return mul(from_int(p_), random(g));
}

// ---- Rationals

namespace {

mpq_class small_fraction(Rng& g, long num_bound, long den_bound, long avoid_p)
{
    std::uniform_int_distribution<long> nd(-num_bound, num_bound), dd(1, den_bound);
    long d = dd(g);
    while (avoid_p > 0 && d % avoid_p == 0)
        d = dd(g);
    mpq_class q(nd(g), d);
    q.canonicalize();
    return q;
}

}  // namespace

std::optional<Rationals::elem> Rationals::inv(const elem& a) const
{
    if (sgn(a) == 0)
        return std::nullopt;
    return 1 / a;
}

Rationals::elem Rationals::random(Rng& g) const
{
    return small_fraction(g, 40, 20, 0);
}

Rationals::elem Rationals::random_unit(Rng& g) const
{
    for (;;) {
        auto a = random(g);
        if (sgn(a) != 0)
            return a;
    }
}

// ---- ZLoc

ZLoc::ZLoc(long p) : p_(p)
{
    if (!is_prime(p))
        throw ring_error(std::to_string(p) + " is not prime");
}

ZLoc::elem ZLoc::from_mpq(const mpq_class& v) const
{
    if (mpz_divisible_ui_p(v.get_den().get_mpz_t(), p_))
        throw ring_error(v.get_str() + " does not lie in " + name());
    return v;
}

bool ZLoc::is_unit(const elem& a) const
{
    return sgn(a) != 0 && !mpz_divisible_ui_p(a.get_num().get_mpz_t(), p_);
}

std::optional<ZLoc::elem> ZLoc::inv(const elem& a) const
{
    if (!is_unit(a))
        return std::nullopt;
    return 1 / a;
}

std::int64_t ZLoc::residue(const elem& a) const
{
    ZModPk f(p_, 1);
    return f.from_mpq(a);
}

ZLoc::elem ZLoc::random(Rng& g) const
{
    return small_fraction(g, 40, 20, p_);
}

ZLoc::elem ZLoc::random_unit(Rng& g) const
{
    for (;;) {
        auto a = random(g);
        if (is_unit(a))
            return a;
    }
}

ZLoc::elem ZLoc::random_nonunit(Rng& g) const
{
    return mpq_class(p_) * random(g);
}

// ---- Dual

Dual::Dual(long p) : p_(p), f_(p, 1) {}

std::optional<Dual::elem> Dual::inv(elem x) const
{
    auto ia = f_.inv(x.a);
    if (!ia)
        return std::nullopt;
    return elem{*ia, f_.neg(f_.mul(x.b, f_.mul(*ia, *ia)))};
}

std::string Dual::str(elem x) const
{
    if (x.b == 0)
        return std::to_string(x.a);
    std::string e = std::to_string(x.b) + "e";
    if (x.a == 0)
        return e;
    return std::to_string(x.a) + "+" + e;
}

namespace {

// "a", "be", "a+be", "a-be" with the given unit symbol.
std::pair<mpq_class, mpq_class> parse_two_part(std::string_view s, char sym)
{
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t.push_back(c);
    if (t.empty() || t.back() != sym)
        return {parse_rational(t), 0};
    t.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = t.size(); i-- > 1;)
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != '/') {
            split = i;
            break;
        }
    std::string a = split == std::string::npos ? "0" : t.substr(0, split);
    std::string b = split == std::string::npos ? t : t.substr(split);
    if (b.empty() || b == "+")
        b = "1";
    else if (b == "-")
        b = "-1";
    return {parse_rational(a), parse_rational(b)};
}

}  // namespace

Dual::elem Dual::parse(std::string_view s) const
{
    auto [a, b] = parse_two_part(s, 'e');
    return {f_.from_mpq(a), f_.from_mpq(b)};
}

// ---- Fq2

Fq2::Fq2(long p) : p_(p), r_(0), f_(p, 1)
{
    if (p == 2)
        throw ring_error("fq:2^2 is not supported");
    for (long c = 2; c < p; ++c) {
        if (ring_pow(f_, f_.from_int(c), (p - 1) / 2) == f_.from_int(-1)) {
            r_ = c;
            break;
        }
    }
}

Fq2::elem Fq2::mul(elem x, elem y) const
{
    auto re = f_.add(f_.mul(x.a, y.a), f_.mul(f_.from_int(r_), f_.mul(x.b, y.b)));
    auto im = f_.add(f_.mul(x.a, y.b), f_.mul(x.b, y.a));
    return {re, im};
}

std::optional<Fq2::elem> Fq2::inv(elem x) const
{
    if (is_zero(x))
        return std::nullopt;
    auto norm = f_.sub(f_.mul(x.a, x.a), f_.mul(f_.from_int(r_), f_.mul(x.b, x.b)));
    auto ni = *f_.inv(norm);
    return elem{f_.mul(x.a, ni), f_.neg(f_.mul(x.b, ni))};
}

std::string Fq2::str(elem x) const
{
    if (x.b == 0)
        return std::to_string(x.a);
    std::string e = std::to_string(x.b) + "i";
    if (x.a == 0)
        return e;
    return std::to_string(x.a) + "+" + e;
}

Fq2::elem Fq2::parse(std::string_view s) const
{
    auto [a, b] = parse_two_part(s, 'i');
    return {f_.from_mpq(a), f_.from_mpq(b)};
}

Fq2::elem Fq2::random_unit(Rng& g) const
{
    for (;;) {
        auto a = random(g);
        if (!is_zero(a))
            return a;
    }
}

// ---- Jet

Jet::Jet(int m) : m_(m)
{
    if (m < 0)
        throw ring_error("negative symbol count");
}

Jet::elem Jet::symbol(int i) const
{
    if (i < 1 || i > m_)
        throw ring_error("symbol y" + std::to_string(i) + " out of range");
    return {0, {{i, 1}}};
}

Jet::elem Jet::add(const elem& u, const elem& v) const
{
    elem r;
    r.c = u.c + v.c;
    r.y.reserve(u.y.size() + v.y.size());
    auto i = u.y.begin(), j = v.y.begin();
    while (i != u.y.end() || j != v.y.end()) {
        if (j == v.y.end() || (i != u.y.end() && i->first < j->first)) {
            r.y.push_back(*i++);
        } else if (i == u.y.end() || j->first < i->first) {
            r.y.push_back(*j++);
        } else {
            mpq_class s = i->second + j->second;
            if (sgn(s) != 0)
                r.y.emplace_back(i->first, s);
            ++i;
            ++j;
        }
    }
    return r;
}

Jet::elem Jet::neg(const elem& u) const
{
    elem r{-u.c, u.y};
    for (auto& t : r.y)
        t.second = -t.second;
    return r;
}

Jet::elem Jet::sub(const elem& u, const elem& v) const
{
    return add(u, neg(v));
}

Jet::elem Jet::scaled(const elem& u, const mpq_class& s) const
{
    if (sgn(s) == 0)
        return {};
    elem r{u.c * s, u.y};
    for (auto& t : r.y)
        t.second *= s;
    return r;
}

Jet::elem Jet::mul(const elem& u, const elem& v) const
{
    if (u.y.empty())
        return scaled(v, u.c);
    if (v.y.empty())
        return scaled(u, v.c);
    elem a = scaled(v, u.c);
    elem b = scaled(u, v.c);
    b.c = 0;
    return add(a, b);
}

std::optional<Jet::elem> Jet::inv(const elem& u) const
{
    if (sgn(u.c) == 0)
        return std::nullopt;
    mpq_class ic = 1 / u.c;
    elem r{ic, {}};
    r.y = u.y;
    mpq_class f = -ic * ic;
    for (auto& t : r.y)
        t.second *= f;
    return r;
}

std::pair<mpq_class, std::vector<mpq_class>> Jet::linear_coeffs(const elem& u) const
{
    std::vector<mpq_class> v(m_);
    for (const auto& [i, c] : u.y)
        v[i - 1] = c;
    return {u.c, v};
}

std::string Jet::str(const elem& u) const
{
    std::string s;
    if (sgn(u.c) != 0 || u.y.empty())
        s = u.c.get_str();
    for (const auto& [i, c] : u.y) {
        std::string coef;
        if (c == 1)
            coef = s.empty() ? "" : "+";
        else if (c == -1)
            coef = "-";
        else
            coef = (sgn(c) > 0 && !s.empty() ? "+" : "") + c.get_str();
        s += coef + "y" + std::to_string(i);
    }
    return s;
}

Jet::elem Jet::parse(std::string_view s) const
{
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t.push_back(c);
    if (t.empty())
        throw ring_error("empty jet element");
    elem out;
    std::size_t pos = 0;
    while (pos < t.size()) {
        std::size_t end = pos + 1;
        while (end < t.size() && !((t[end] == '+' || t[end] == '-') && t[end - 1] != '/'))
            ++end;
        std::string term = t.substr(pos, end - pos);
        auto y = term.find('y');
        if (y == std::string::npos) {
            out = add(out, from_mpq(parse_rational(term)));
        } else {
            std::string coef = term.substr(0, y);
            if (!coef.empty() && coef.back() == '*')
                coef.pop_back();
            if (coef.empty() || coef == "+")
                coef = "1";
            else if (coef == "-")
                coef = "-1";
            int idx = std::stoi(term.substr(y + 1));
            out = add(out, scaled(symbol(idx), parse_rational(coef)));
        }
        pos = end;
    }
    return out;
}

Jet::elem Jet::random(Rng& g) const
{
    elem r = from_int(std::uniform_int_distribution<int>(-9, 9)(g));
    if (m_ == 0)
        return r;
    std::uniform_int_distribution<int> pick(1, m_), coef(-5, 5), count(0, 3);
    int n = count(g);
    for (int i = 0; i < n; ++i)
        r = add(r, scaled(symbol(pick(g)), coef(g)));
    return r;
}

Jet::elem Jet::random_unit(Rng& g) const
{
    for (;;) {
        auto a = random(g);
        if (is_unit(a))
            return a;
    }
}

Jet::elem Jet::random_nonunit(Rng& g) const
{
    auto a = random(g);
    a.c = 0;
    return a;
}

}  // namespace chev
