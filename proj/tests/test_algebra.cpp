#include "doctest.h"

#include "chev/algebra.hpp"

#include <map>

using namespace chev;

namespace {

using Vec = std::map<int, long long>;

Vec bracket(const StructureTable& st, const Vec& u, const Vec& v)
{
    Vec out;
    for (auto [i, a] : u)
        for (auto [j, b] : v)
            for (auto [k, c] : st.bracket(i, j))
                out[k] += a * b * c;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Vec basis(int i) { return {{i, 1}}; }

Vec add(Vec u, const Vec& v)
{
    for (auto [k, c] : v)
        u[k] += c;
    std::erase_if(u, [](const auto& kv) { return kv.second == 0; });
    return u;
}

int string_p(const RootSystem& rs, Root alpha, Root beta)
{
    int p = 0;
    while (rs.contains(beta - (p + 1) * alpha))
        ++p;
    return p;
}

}  // namespace

TEST_CASE("structure constants are +-(p+1)")
{
    for (auto t : {SystemType::B2, SystemType::G2}) {
        const auto& st = structure_table(t);
        const auto& rs = st.system();
        for (Root a : rs.roots())
            for (Root b : rs.roots()) {
                CAPTURE(rs.root_name(a));
                CAPTURE(rs.root_name(b));
                if (!rs.contains(a + b)) {
                    CHECK(st.N(a, b) == 0);
                    continue;
                }
                long long n = st.N(a, b);
                CHECK((n == string_p(rs, a, b) + 1 || n == -(string_p(rs, a, b) + 1)));
                CHECK(st.N(b, a) == -n);
                // N_{-a,-b} = -N_{a,b} in a Chevalley basis.
                CHECK(st.N(-a, -b) == -n);
            }
    }
}

TEST_CASE("jacobi identity on every basis triple")
{
    for (auto t : {SystemType::B2, SystemType::G2}) {
        const auto& st = structure_table(t);
        const int n = static_cast<int>(st.dim());
        int failures = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    auto a = bracket(st, basis(i), bracket(st, basis(j), basis(k)));
                    auto b = bracket(st, basis(j), bracket(st, basis(k), basis(i)));
                    auto c = bracket(st, basis(k), bracket(st, basis(i), basis(j)));
                    failures += !add(add(a, b), c).empty();
                }
        CHECK(failures == 0);
    }
}

TEST_CASE("cartan elements act by the pairing")
{
    for (auto t : {SystemType::B2, SystemType::G2}) {
        const auto& st = structure_table(t);
        const auto& rs = st.system();
        for (int i = 0; i < 2; ++i)
            for (Root b : rs.roots()) {
                auto v = st.bracket(static_cast<int>(rs.cartan_position(i)), rs.index(b));
                if (rs.pairing(b, rs.simple(i)) == 0) {
                    CHECK(v.empty());
                    continue;
                }
                REQUIRE(v.size() == 1);
                CHECK(v[0].first == rs.index(b));
                CHECK(v[0].second == rs.pairing(b, rs.simple(i)));
            }
    }
}

TEST_CASE("signs are unique and extraspecial pairs positive")
{
    for (auto t : {SystemType::B2, SystemType::G2}) {
        const auto& st = structure_table(t);
        CHECK(st.sign_solutions() == 1);
        CHECK(st.extraspecial().size() == st.system().positive().size() - 2);
        for (auto [a, b] : st.extraspecial())
            CHECK(st.N(a, b) > 0);
        CHECK(verify_chevalley_basis(st).all_pass());
    }
}

TEST_CASE("a flipped sign is caught")
{
    const auto& st = structure_table(SystemType::G2);
    auto bad = st.with_flipped_sign(Root{1, 0}, Root{1, 1});
    CHECK_FALSE(verify_chevalley_basis(bad).all_pass());
}

TEST_CASE("divided powers times k! are powers of ad")
{
    for (auto t : {SystemType::B2, SystemType::G2}) {
        const auto& st = structure_table(t);
        const auto& rs = st.system();
        for (Root a : rs.roots()) {
            const IntMat& ad = st.ad_root(a);
            IntMat pw = int_identity(st.dim());
            long long fact = 1;
            for (int k = 1; k <= 4; ++k) {
                pw = int_mul(pw, ad);
                fact *= k;
                IntMat scaled = st.divided_power(a, k);
                for (auto& row : scaled)
                    for (auto& v : row)
                        v *= fact;
                CHECK(scaled == pw);
            }
            // Nilpotent of order at most 4.
            CHECK(int_is_zero(int_mul(pw, ad)));
        }
    }
}
