#include "chev/replay.hpp"

#include <sstream>

namespace chev {

namespace {

std::vector<std::pair<int, int>> parse_positions(const std::string& line)
{
    std::vector<std::pair<int, int>> out;
    std::size_t i = 0;
    while ((i = line.find('(', i)) != std::string::npos) {
        auto comma = line.find(',', i);
        auto close = line.find(')', i);
        out.emplace_back(std::stoi(line.substr(i + 1, comma - i - 1)), std::stoi(line.substr(comma + 1, close - comma - 1)));
        i = close;
    }
    return out;
}

std::map<std::string, std::vector<std::pair<int, int>>> load_positions()
{
    std::map<std::string, std::vector<std::pair<int, int>>> out;
    std::istringstream in{std::string(data_file("patterns/b2_positions.txt"))};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        auto sp = line.find(' ');
        out[line.substr(0, sp)] = parse_positions(line.substr(sp));
    }
    return out;
}

struct B2World {
    Jet jet{0};
    Matrix<Jet> a{Jet(0), 0, 0}, b{Jet(0), 0, 0};  // x_e2 and x_e1+e2 patterns
    Matrix<Jet> h{Jet(0), 0, 0};                    // h_{e1+e2}(-1)
    Matrix<Jet> w2{Jet(0), 0, 0}, w2i{Jet(0), 0, 0};  // w_{e2}(1) and inverse
    Matrix<Jet> wa{Jet(0), 0, 0}, wai{Jet(0), 0, 0};  // w_{e1-e2}(1) and inverse
    Matrix<Rationals> a0{Rationals(), 0, 0}, b0{Rationals(), 0, 0};
    Matrix<Rationals> hq{Rationals(), 0, 0}, w2q{Rationals(), 0, 0}, waq{Rationals(), 0, 0};
};

B2World b2_world()
{
    B2World w;
    auto pa = build_pattern("x_e2");
    auto pb = build_pattern("x_e1e2");
    w.jet = pa.ring;
    w.a = pa.matrix;
    w.b = pb.matrix;
    w.a0 = pa.truth;
    w.b0 = pb.truth;
    Rationals q;
    ChevalleyGroup<Rationals> g(q, SystemType::B2);
    const auto& rs = g.system();
    const auto& c = committed_convention(SystemType::B2);
    auto lift = [&](const Matrix<Rationals>& m) {
        return m.map_to(w.jet, [&](const mpq_class& v) { return w.jet.from_mpq(v); });
    };
    w.hq = printed(c, g.h(rs.parse("e1+e2"), -1));
    w.w2q = printed(c, g.w(rs.parse("e2"), 1));
    w.waq = printed(c, g.w(rs.parse("e1-e2"), 1));
    w.h = lift(w.hq);
    w.w2 = lift(w.w2q);
    w.w2i = lift(printed(c, g.w(rs.parse("e2"), -1)));
    w.wa = lift(w.waq);
    w.wai = lift(printed(c, g.w(rs.parse("e1-e2"), -1)));
    return w;
}

template <class R>
std::vector<std::pair<std::string, Matrix<R>>> b2_conditions(const Matrix<R>& a, const Matrix<R>& b, const Matrix<R>& h,
                                                             const Matrix<R>& w2, const Matrix<R>& w2i,
                                                             const Matrix<R>& wa, const Matrix<R>& wai)
{
    const auto one = Matrix<R>::identity(a.ring(), a.rows());
    auto x3 = w2 * b * w2i;  // x_{e1-e2}
    auto x1 = wa * a * wai;  // x_{e1}
    return {
        {"Con1", a * h * a * h - one},
        {"Con2", b * x3 - x3 * b},
        {"Con3", b * a - a * b},
        {"Con4", b * b * a * x1 - x1 * a},
        {"Con5", x3 * wa * x3 * wai * x3 - wa},
    };
}

const std::map<std::string, std::string>& b2_words()
{
    static const std::map<std::string, std::string> words = {
        {"Con1", "x_e2 h_{e1+e2}(-1) x_e2 h_{e1+e2}(-1) = 1"},
        {"Con2", "x_{e1+e2} (w_e2 x_{e1+e2} w_e2^-1) = (w_e2 x_{e1+e2} w_e2^-1) x_{e1+e2}"},
        {"Con3", "x_{e1+e2} x_e2 = x_e2 x_{e1+e2}"},
        {"Con4", "x_{e1+e2}^2 x_e2 x_e1 = x_e1 x_e2, x_e1 = w_{e1-e2} x_e2 w_{e1-e2}^-1"},
        {"Con5", "x_{e1-e2} w_{e1-e2} x_{e1-e2} w_{e1-e2}^-1 x_{e1-e2} = w_{e1-e2}, x_{e1-e2} = w_e2 x_{e1+e2} w_e2^-1"},
    };
    return words;
}

template <class R>
std::size_t rank_mod(const std::vector<std::vector<mpq_class>>& rows, const R& f)
{
    Matrix<R> m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = f.from_mpq(rows[i][j]);
    return rank(m);
}

Matrix<Rationals> to_q(const std::vector<std::vector<mpq_class>>& rows, std::size_t cols)
{
    Rationals q;
    Matrix<Rationals> m(q, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    return m;
}

}  // namespace

std::vector<ConditionResidual> b2_residuals()
{
    auto w = b2_world();
    auto pos = load_positions();
    std::vector<ConditionResidual> out;
    for (auto& [id, m] : b2_conditions(w.a, w.b, w.h, w.w2, w.w2i, w.wa, w.wai)) {
        ConditionResidual c;
        c.id = id;
        c.word = b2_words().at(id);
        c.positions = pos.at(id);
        bool zero = true;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                zero = zero && m(i, j).c == 0;
        c.constant_zero = zero;
        c.residual = std::move(m);
        out.push_back(std::move(c));
    }
    return out;
}

LinearSystem76 linear_system_76()
{
    auto w = b2_world();
    auto res = b2_residuals();
    LinearSystem76 ls;
    const int m = w.jet.symbols();
    for (int k = 1; k <= m; ++k)
        ls.columns.push_back("y" + std::to_string(k));
    ls.cols = static_cast<std::size_t>(m);
    std::vector<std::vector<mpq_class>> full;
    for (const auto& c : res) {
        for (auto [i, j] : c.positions) {
            ls.matrix.push_back(w.jet.linear_coeffs(c.residual(i - 1, j - 1)).second);
            ls.row_tags.push_back(c.id + "(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
        for (std::size_t i = 0; i < c.residual.rows(); ++i)
            for (std::size_t j = 0; j < c.residual.cols(); ++j)
                full.push_back(w.jet.linear_coeffs(c.residual(i, j)).second);
    }
    ls.rows = ls.matrix.size();
    ls.entries_bounded = true;
    for (const auto& row : ls.matrix)
        for (const auto& v : row)
            ls.entries_bounded = ls.entries_bounded && v.get_den() == 1 && abs(v) <= 2;

    auto mq = to_q(ls.matrix, ls.cols);
    ls.rank_q = rank(mq);
    if (ls.rows == ls.cols)
        ls.det = det(mq).get_num();  // integral when entries are integers; 0 when singular
    ls.rank_f5 = rank_mod(ls.matrix, ZModPk(5, 1));
    ls.rank_f7 = rank_mod(ls.matrix, ZModPk(7, 1));
    ls.unique_f5 = ls.rank_f5 == ls.cols;
    ls.unique_f7 = ls.rank_f7 == ls.cols;

    auto fq = to_q(full, ls.cols);
    ls.full_rows = full.size();
    ls.full_rank_q = rank(fq);

    // Centralizer of h, w2, wa in M_10(Q): Z g - g Z = 0.
    Rationals q;
    const std::size_t n = w.a0.rows();
    std::vector<const Matrix<Rationals>*> fixed = {&w.hq, &w.w2q, &w.waq};
    Matrix<Rationals> cz(q, fixed.size() * n * n, n * n);
    std::size_t row = 0;
    for (const auto* g : fixed)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, ++row)
                for (std::size_t k = 0; k < n; ++k) {
                    cz(row, i * n + k) += (*g)(k, j);
                    cz(row, k * n + j) -= (*g)(i, k);
                }
    auto cent = nullspace(cz);
    ls.centralizer_dim = cent.size();

    // Tangent map y -> (A(y) - A0, B(y) - B0).
    Matrix<Rationals> tangent(q, 2 * n * n, ls.cols);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto ca = w.jet.linear_coeffs(w.a(i, j)).second;
            auto cb = w.jet.linear_coeffs(w.b(i, j)).second;
            for (std::size_t k = 0; k < ls.cols; ++k) {
                tangent(i * n + j, k) = ca[k];
                tangent(n * n + i * n + j, k) = cb[k];
            }
        }
    std::vector<std::vector<mpq_class>> inner;
    for (const auto& zv : cent) {
        Matrix<Rationals> z(q, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                z(i, j) = zv[i * n + j];
        auto da = z * w.a0 - w.a0 * z;
        auto db = z * w.b0 - w.b0 * z;
        std::vector<mpq_class> rhs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                rhs.push_back(da(i, j));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                rhs.push_back(db(i, j));
        auto y = solve(tangent, rhs);
        if (y)
            inner.push_back(*y);
    }
    if (!inner.empty()) {
        auto im = to_q(inner, ls.cols);
        ls.inner_dim = rank(im);
        ls.inner_in_kernel = (fq * im.transpose()).is_zero();
    }
    ls.kernel_is_inner = ls.inner_in_kernel && ls.full_rank_q + ls.inner_dim == ls.cols;
    return ls;
}

}  // namespace chev
