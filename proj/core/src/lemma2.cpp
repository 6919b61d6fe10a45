#include "chev/replay.hpp"

#include <sstream>

namespace chev {

namespace {

struct Lemma2Gens {
    std::vector<std::string> labels;
    std::vector<Matrix<Rationals>> mats;
};

const Lemma2Gens& lemma2_generators()
{
    static const Lemma2Gens gens = [] {
        Rationals q;
        ChevalleyGroup<Rationals> g(q, SystemType::B2);
        const auto& c = committed_convention(SystemType::B2);
        const auto& rs = g.system();
        Lemma2Gens out;
        out.labels.push_back("1");
        out.mats.push_back(g.identity());
        for (Root a : rs.roots()) {
            auto name = rs.ambient_name(a);
            out.labels.push_back("x_{" + name + "}(1)");
            out.mats.push_back(printed(c, g.x(a, 1)));
            out.labels.push_back("w_{" + name + "}(1)");
            out.mats.push_back(printed(c, g.w(a, 1)));
            out.labels.push_back("h_{" + name + "}(-1)");
            out.mats.push_back(printed(c, g.h(a, -1)));
        }
        return out;
    }();
    return gens;
}

Matrix<Rationals> word_matrix(const std::vector<int>& w)
{
    const auto& gens = lemma2_generators();
    auto m = gens.mats[0];
    for (int k : w)
        m = m * gens.mats.at(static_cast<std::size_t>(k));
    return m;
}

Matrix<Rationals> unit(std::size_t n, std::size_t i, std::size_t j)  // 1-based
{
    Matrix<Rationals> e(Rationals(), n, n);
    e(i - 1, j - 1) = 1;
    return e;
}

bool in_zloc5(const mpq_class& v)
{
    return mpz_divisible_ui_p(v.get_den_mpz_t(), 5) == 0;
}

std::string describe(const Matrix<Rationals>& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) {
                if (!out.empty())
                    out += " + ";
                out += m(i, j).get_str() + "*E_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
            }
    return out.empty() ? "0" : out;
}

}  // namespace

std::vector<std::vector<int>> lemma2_search()
{
    const auto& gens = lemma2_generators();
    const std::size_t n = gens.mats[0].rows();
    const std::size_t target = n * n;
    ZModPk f(5, 1);
    // Echelon rows over F_5 with their pivot columns, for independence tests.
    std::vector<std::vector<std::int64_t>> echelon;
    std::vector<std::size_t> pivots;
    auto reduce = [&](std::vector<std::int64_t> v) {
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            auto c = v[pivots[r]];
            if (c == 0)
                continue;
            for (std::size_t k = 0; k < v.size(); ++k)
                v[k] = f.sub(v[k], f.mul(c, echelon[r][k]));
        }
        return v;
    };
    auto try_add = [&](const Matrix<Rationals>& m) {
        std::vector<std::int64_t> v;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                v.push_back(f.from_mpq(m(i, j)));
        v = reduce(std::move(v));
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0)
            ++p;
        if (p == v.size())
            return false;
        auto inv = *f.inv(v[p]);
        for (auto& x : v)
            x = f.mul(x, inv);
        // Keep rows reduced at the new pivot.
        for (auto& row : echelon) {
            auto c = row[p];
            if (c != 0)
                for (std::size_t k = 0; k < row.size(); ++k)
                    row[k] = f.sub(row[k], f.mul(c, v[k]));
        }
        echelon.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    };

    std::vector<std::vector<int>> words = {{}};
    std::vector<Matrix<Rationals>> mats = {gens.mats[0]};
    try_add(mats[0]);
    for (std::size_t b = 0; b < words.size() && words.size() < target; ++b)
        for (std::size_t g = 1; g < gens.mats.size() && words.size() < target; ++g) {
            auto m = mats[b] * gens.mats[g];
            if (try_add(m)) {
                auto w = words[b];
                w.push_back(static_cast<int>(g));
                words.push_back(std::move(w));
                mats.push_back(std::move(m));
            }
        }
    return words;
}

Lemma2Report lemma2_verify(const std::vector<std::vector<int>>& words)
{
    const auto& gens = lemma2_generators();
    Lemma2Report rep;
    rep.generators = gens.labels;
    rep.words = words;
    Rationals q;
    ChevalleyGroup<Rationals> g(q, SystemType::B2);
    const auto& rs = g.system();
    const auto& c = committed_convention(SystemType::B2);
    const std::size_t n = g.dim();
    const auto one = g.identity();

    auto xs = printed(c, g.x(rs.parse("e1+e2"), 1)) - one;
    rep.seed_ok = xs * xs == unit(n, 5, 6).scaled(-2);

    auto img = printed(c, g.w(rs.parse("e1"), 1)) * unit(n, 5, 6);
    rep.index_claim = "w_{e1} E_{5,6} = " + describe(img);
    rep.index_claim_as_written = img.nonzeros() == 1 && img(7, 4) != 0;

    std::vector<Matrix<Rationals>> mats;
    for (const auto& w : words)
        mats.push_back(word_matrix(w));
    // Column k holds the entries of word k.
    Matrix<Rationals> cm(q, n * n, mats.size());
    bool entries_local = true;
    for (std::size_t k = 0; k < mats.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                cm(i * n + j, k) = mats[k](i, j);
                entries_local = entries_local && in_zloc5(mats[k](i, j));
            }
    ZModPk f(5, 1);
    if (entries_local)
        rep.dimension = rank(cm.map_to(f, [&](const mpq_class& v) { return f.from_mpq(v); }));
    rep.rank_q = rank(cm);
    if (cm.square()) {
        auto d = det(cm);
        rep.det = d.get_num();
        rep.units_integral = entries_local && d != 0 && in_zloc5(d) && in_zloc5(1 / d);
    }
    if (rep.dimension < n * n)
        rep.stall = "closure spans dimension " + std::to_string(rep.dimension) + " of " + std::to_string(n * n);
    return rep;
}

std::vector<std::vector<int>> lemma2_stored_words()
{
    std::istringstream in{std::string(data_file("certificates/lemma2_b2.txt"))};
    std::string line;
    std::vector<std::vector<int>> out;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::vector<int> w;
        for (int k; ls >> k;)
            if (k != 0)
                w.push_back(k);
        out.push_back(std::move(w));
    }
    return out;
}

std::string lemma2_certificate_text(const std::vector<std::vector<int>>& words)
{
    const auto& gens = lemma2_generators();
    std::ostringstream out;
    out << "# Words in the B2 generators whose Z_(5)-span is M_10(Z_(5)).\n";
    out << "# Generator indices:";
    for (std::size_t k = 0; k < gens.labels.size(); ++k)
        out << (k % 6 == 0 ? "\n#  " : "  ") << k << " = " << gens.labels[k];
    out << "\n# One word per line, multiplied left to right; 0 is the empty word.\n";
    for (const auto& w : words) {
        if (w.empty())
            out << "0";
        for (std::size_t k = 0; k < w.size(); ++k)
            out << (k ? " " : "") << w[k];
        out << "\n";
    }
    return out.str();
}

}  // namespace chev
