#include "chev/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

namespace chev {

IntMat int_identity(std::size_t n)
{
    IntMat m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b)
{
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMat c(n, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

IntMat int_sub(const IntMat& a, const IntMat& b)
{
    IntMat c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            c[i][j] -= b[i][j];
    return c;
}

bool int_is_zero(const IntMat& a)
{
    for (const auto& row : a)
        for (auto v : row)
            if (v != 0)
                return false;
    return true;
}

namespace {

struct PairClass {
    int rep_i, rep_j;
    int sign;  // N(i, j) = sign * N(rep)
};

// Bracket of basis positions given possibly incomplete root-root constants.
// Unknown constants are marked by n[i][j] == 0 for i + j a root; returns nullopt then.
std::optional<BasisCombo> bracket_partial(const RootSystem& rs, const std::vector<std::vector<long long>>& n,
                                          int i, int j)
{
    const int m = static_cast<int>(rs.num_roots());
    BasisCombo out;
    if (i >= m && j >= m)
        return out;
    if (i >= m) {
        int c = rs.pairing(rs.roots()[j], rs.simple(i - m));
        if (c)
            out.push_back({j, c});
        return out;
    }
    if (j >= m) {
        int c = -rs.pairing(rs.roots()[i], rs.simple(j - m));
        if (c)
            out.push_back({i, c});
        return out;
    }
    Root a = rs.roots()[i], b = rs.roots()[j];
    Root s = a + b;
    if (s.is_zero()) {
        auto [c1, c2] = rs.coroot(a);
        if (c1)
            out.push_back({m, c1});
        if (c2)
            out.push_back({m + 1, c2});
        return out;
    }
    int k = rs.index_of(s);
    if (k < 0)
        return out;
    if (n[i][j] == 0)
        return std::nullopt;
    out.push_back({k, n[i][j]});
    return out;
}

// Jacobi sum for a basis triple; nullopt if some needed constant is unknown.
std::optional<std::map<int, long long>> jacobi_sum(const RootSystem& rs, const std::vector<std::vector<long long>>& n,
                                                   int x, int y, int z)
{
    std::map<int, long long> acc;
    auto term = [&](int u, int v, int w) -> bool {
        auto inner = bracket_partial(rs, n, v, w);
        if (!inner)
            return false;
        for (auto [k, c] : *inner) {
            auto outer = bracket_partial(rs, n, u, k);
            if (!outer)
                return false;
            for (auto [l, d] : *outer)
                acc[l] += c * d;
        }
        return true;
    };
    if (!term(x, y, z) || !term(y, z, x) || !term(z, x, y))
        return std::nullopt;
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second == 0 ? acc.erase(it) : std::next(it);
    return acc;
}

}  // namespace

StructureTable::StructureTable(const RootSystem& rs) : rs_(&rs)
{
    const int m = static_cast<int>(rs.num_roots());
    const auto& roots = rs.roots();

    // Classes of ordered pairs (a, b), a + b a root, under swap and negation.
    std::map<std::pair<int, int>, PairClass> cls;
    std::vector<std::pair<int, int>> reps;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (!rs.contains(roots[i] + roots[j]))
                continue;
            int ni = rs.index(-roots[i]), nj = rs.index(-roots[j]);
            std::vector<std::pair<std::pair<int, int>, int>> orbit = {
                {{i, j}, 1}, {{j, i}, -1}, {{ni, nj}, -1}, {{nj, ni}, 1}};
            auto best = *std::min_element(orbit.begin(), orbit.end());
            cls[{i, j}] = {best.first.first, best.first.second, best.second};
            if (best.first == std::make_pair(i, j))
                reps.push_back({i, j});
        }

    // Extraspecial pair for each non-simple positive xi: least alpha (by height,
    // then list order) with xi - alpha positive.
    std::vector<Root> by_height = rs.positive();
    std::stable_sort(by_height.begin(), by_height.end(),
                     [](Root x, Root y) { return x.height() < y.height(); });
    std::map<std::pair<int, int>, int> forced;
    for (Root xi : rs.positive()) {
        if (xi.height() == 1)
            continue;
        for (Root a : by_height) {
            Root rest = xi - a;
            if (rs.is_positive(rest) && rs.contains(rest)) {
                extraspecial_.push_back({a, rest});
                const auto& c = cls.at({rs.index(a), rs.index(rest)});
                forced[{c.rep_i, c.rep_j}] = c.sign;
                break;
            }
        }
    }

    std::vector<long long> magnitude(reps.size());
    for (std::size_t r = 0; r < reps.size(); ++r)
        magnitude[r] = rs.root_string(roots[reps[r].first], roots[reps[r].second]).first + 1;

    std::vector<std::vector<long long>> n(m, std::vector<long long>(m, 0));
    auto assign = [&](std::size_t r, int sign) {
        for (auto& [key, c] : cls)
            if (c.rep_i == reps[r].first && c.rep_j == reps[r].second)
                n[key.first][key.second] = sign * c.sign * magnitude[r];
    };
    auto consistent = [&]() {
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y)
                for (int z = y + 1; z < m; ++z) {
                    auto s = jacobi_sum(rs, n, x, y, z);
                    if (s && !s->empty())
                        return false;
                }
        return true;
    };

    std::vector<std::vector<long long>> found;
    std::function<void(std::size_t)> search = [&](std::size_t r) {
        if (r == reps.size()) {
            ++solutions_;
            if (found.empty())
                found = n;
            return;
        }
        for (int sign : {1, -1}) {
            auto f = forced.find(reps[r]);
            if (f != forced.end() && f->second != sign)
                continue;
            assign(r, sign);
            if (consistent())
                search(r + 1);
            assign(r, 0);
        }
    };
    search(0);
    if (solutions_ == 0)
        throw std::logic_error("no consistent sign assignment for " + rs.name());
    n_ = std::move(found);
    build_matrices();
}

void StructureTable::build_matrices()
{
    const int d = static_cast<int>(rs_->dim());
    const int m = static_cast<int>(rs_->num_roots());
    ad_.assign(d, IntMat(d, std::vector<long long>(d, 0)));
    for (int b = 0; b < d; ++b)
        for (int j = 0; j < d; ++j) {
            auto c = bracket_partial(*rs_, n_, b, j);
            if (!c)
                throw std::logic_error("incomplete structure table");
            for (auto [i, v] : *c)
                ad_[b][i][j] = v;
        }
    dp_.assign(m, {});
    for (int r = 0; r < m; ++r) {
        dp_[r].push_back(int_identity(d));
        for (int k = 1; k <= 4; ++k) {
            IntMat p = int_mul(ad_[r], dp_[r].back());
            for (auto& row : p)
                for (auto& v : row) {
                    if (v % k != 0)
                        throw std::logic_error("divided power is not integral");
                    v /= k;
                }
            dp_[r].push_back(std::move(p));
        }
    }
}

long long StructureTable::N(Root alpha, Root beta) const
{
    int i = rs_->index_of(alpha), j = rs_->index_of(beta);
    if (i < 0 || j < 0)
        return 0;
    return n_[i][j];
}

BasisCombo StructureTable::bracket(int i, int j) const
{
    return *bracket_partial(*rs_, n_, i, j);
}

StructureTable StructureTable::with_flipped_sign(Root alpha, Root beta) const
{
    StructureTable t = *this;
    int i = rs_->index(alpha), j = rs_->index(beta);
    t.n_[i][j] = -t.n_[i][j];
    t.n_[j][i] = -t.n_[j][i];
    t.build_matrices();
    return t;
}

const StructureTable& structure_table(SystemType t)
{
    static const StructureTable b2(root_system(SystemType::B2));
    static const StructureTable g2(root_system(SystemType::G2));
    return t == SystemType::B2 ? b2 : g2;
}

bool CheckReport::all_pass() const
{
    return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass; });
}

void CheckReport::add(std::string name, bool pass, std::string detail)
{
    entries.push_back({std::move(name), pass, std::move(detail)});
}

namespace {

std::string basis_name(const RootSystem& rs, int i)
{
    const int m = static_cast<int>(rs.num_roots());
    if (i >= m)
        return "h" + std::to_string(i - m + 1);
    return "x[" + rs.root_name(rs.roots()[i]) + "]";
}

}  // namespace

CheckReport verify_chevalley_basis(const StructureTable& t)
{
    const RootSystem& rs = t.system();
    const int m = static_cast<int>(rs.num_roots());
    const int d = static_cast<int>(rs.dim());
    CheckReport rep;

    bool ok = t.bracket(m, m + 1).empty() && t.bracket(m + 1, m).empty();
    rep.add("cartan_commute", ok);

    ok = true;
    std::string bad;
    for (int i = 0; i < 2 && ok; ++i)
        for (int j = 0; j < m; ++j) {
            auto c = t.bracket(m + i, j);
            int want = rs.pairing(rs.roots()[j], rs.simple(i));
            long long got = c.empty() ? 0 : c[0].second;
            if (got != want || (!c.empty() && c[0].first != j)) {
                ok = false;
                bad = "[h" + std::to_string(i + 1) + ", " + basis_name(rs, j) + "]";
                break;
            }
        }
    rep.add("cartan_action", ok, bad);

    ok = true;
    bad.clear();
    for (int j = 0; j < m; ++j) {
        auto c = t.bracket(j, rs.index(-rs.roots()[j]));
        for (auto [k, v] : c)
            if (k < m) {
                ok = false;
                bad = basis_name(rs, j);
            }
        // Also the h_beta expansion must match the coroot.
        auto [c1, c2] = rs.coroot(rs.roots()[j]);
        long long g1 = 0, g2 = 0;
        for (auto [k, v] : c)
            (k == m ? g1 : g2) += v;
        if (g1 != c1 || g2 != c2) {
            ok = false;
            bad = basis_name(rs, j);
        }
    }
    rep.add("opposite_brackets_in_cartan", ok, bad);

    ok = true;
    bad.clear();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Root a = rs.roots()[i], b = rs.roots()[j];
            if (!rs.contains(a + b))
                continue;
            long long want = rs.root_string(a, b).first + 1;
            if (std::llabs(t.N_index(i, j)) != want || t.N_index(i, j) != -t.N_index(j, i)) {
                ok = false;
                bad = "N(" + rs.root_name(a) + ", " + rs.root_name(b) + ")";
            }
        }
    rep.add("structure_constants", ok, bad);

    ok = true;
    bad.clear();
    for (int x = 0; x < d && ok; ++x)
        for (int y = 0; y < d && ok; ++y)
            for (int z = 0; z < d && ok; ++z) {
                std::map<int, long long> acc;
                auto add_term = [&](int u, int v, int w) {
                    for (auto [k, c] : t.bracket(v, w))
                        for (auto [l, e] : t.bracket(u, k))
                            acc[l] += c * e;
                };
                add_term(x, y, z);
                add_term(y, z, x);
                add_term(z, x, y);
                for (auto [l, v] : acc)
                    if (v != 0) {
                        ok = false;
                        bad = "(" + basis_name(rs, x) + ", " + basis_name(rs, y) + ", " + basis_name(rs, z) + ")";
                        break;
                    }
            }
    rep.add("jacobi", ok, bad);

    ok = true;
    bad.clear();
    for (int x = 0; x < d && ok; ++x)
        for (int y = 0; y < d && ok; ++y) {
            IntMat lhs = int_sub(int_mul(t.ad(x), t.ad(y)), int_mul(t.ad(y), t.ad(x)));
            IntMat rhs(d, std::vector<long long>(d, 0));
            for (auto [k, c] : t.bracket(x, y))
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j)
                        rhs[i][j] += c * t.ad(k)[i][j];
            if (lhs != rhs) {
                ok = false;
                bad = "(" + basis_name(rs, x) + ", " + basis_name(rs, y) + ")";
            }
        }
    rep.add("adjoint_homomorphism", ok, bad);

    ok = true;
    bad.clear();
    for (int r = 0; r < m; ++r) {
        IntMat p = int_identity(d);
        for (int k = 0; k < 5; ++k)
            p = int_mul(p, t.ad(r));
        if (!int_is_zero(p)) {
            ok = false;
            bad = basis_name(rs, r);
        }
    }
    rep.add("nilpotent", ok, bad);
    return rep;
}

}  // namespace chev
