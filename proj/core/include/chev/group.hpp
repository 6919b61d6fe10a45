#pragma once

#include "chev/algebra.hpp"
#include "chev/matrix.hpp"
#include "chev/ring.hpp"
#include "chev/roots.hpp"

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace chev {

// Values of a character of the root lattice on the simple roots.
template <class R>
struct TorusCharacter {
    typename R::elem on_a1;
    typename R::elem on_a2;
};

// Adjoint elementary Chevalley group over R, realized in GL_n(R).
template <class R>
class ChevalleyGroup {
public:
    using E = typename R::elem;
    using M = Matrix<R>;

    ChevalleyGroup(const R& r, SystemType t) : r_(r), rs_(&root_system(t)), st_(&structure_table(t))
    {
        const std::size_t n = rs_->dim();
        sparse_dp_.resize(rs_->num_roots());
        for (std::size_t a = 0; a < rs_->num_roots(); ++a)
            for (int k = 1; k <= 4; ++k) {
                const IntMat& d = st_->divided_power(rs_->roots()[a], k);
                std::vector<std::tuple<int, int, E>> entries;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if (d[i][j] != 0)
                            entries.emplace_back(static_cast<int>(i), static_cast<int>(j), r_.from_int(d[i][j]));
                sparse_dp_[a].push_back(std::move(entries));
            }
    }

    const R& ring() const { return r_; }
    const RootSystem& system() const { return *rs_; }
    const StructureTable& table() const { return *st_; }
    std::size_t dim() const { return rs_->dim(); }
    M identity() const { return M::identity(r_, dim()); }

    // exp(t ad x_alpha) = sum_k t^k (ad x_alpha)^k / k!
    M x(Root alpha, const E& t) const
    {
        M m = identity();
        const auto& dps = sparse_dp_[rs_->index(alpha)];
        E tk = r_.one();
        for (int k = 1; k <= 4; ++k) {
            tk = r_.mul(tk, t);
            if (r_.is_zero(tk))
                break;
            for (const auto& [i, j, v] : dps[k - 1])
                m(i, j) = r_.add(m(i, j), r_.mul(v, tk));
        }
        return m;
    }

    M w(Root alpha, const E& t) const
    {
        E ti = unit_inverse(r_, t);
        return x(alpha, t) * x(-alpha, r_.neg(ti)) * x(alpha, t);
    }

    // h_alpha(t) = w_alpha(t) w_alpha(1)^{-1}, using w_alpha(1)^{-1} = w_alpha(-1).
    M h(Root alpha, const E& t) const { return w(alpha, t) * w(alpha, r_.neg(r_.one())); }

    E character_value(const TorusCharacter<R>& chi, Root beta) const
    {
        return r_.mul(ring_pow(r_, chi.on_a1, beta.a), ring_pow(r_, chi.on_a2, beta.b));
    }

    M torus(const TorusCharacter<R>& chi) const
    {
        if (!r_.is_unit(chi.on_a1) || !r_.is_unit(chi.on_a2))
            throw ring_error("torus character values must be units");
        M m = identity();
        for (std::size_t i = 0; i < rs_->num_roots(); ++i)
            m(i, i) = character_value(chi, rs_->roots()[i]);
        return m;
    }

    // chi_{alpha,u}(lambda) = u^{<lambda, alpha>}
    TorusCharacter<R> character_of(Root alpha, const E& u) const
    {
        return {ring_pow(r_, u, rs_->pairing(rs_->simple(0), alpha)),
                ring_pow(r_, u, rs_->pairing(rs_->simple(1), alpha))};
    }

    // A - 1 has all entries in J.
    bool in_congruence(const M& a) const
    {
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                E d = i == j ? r_.sub(a(i, j), r_.one()) : a(i, j);
                if (r_.is_unit(d))
                    return false;
            }
        return true;
    }

    Matrix<typename R::residue_ring> reduce_mod_J(const M& a) const { return a.residue(); }

private:
    R r_;
    const RootSystem* rs_;
    const StructureTable* st_;
    std::vector<std::vector<std::vector<std::tuple<int, int, E>>>> sparse_dp_;
};

template <class R>
Matrix<R> conjugate(const Matrix<R>& g, const Matrix<R>& a)
{
    return g * a * inverse(g);
}

template <class R>
Matrix<R> commutator(const Matrix<R>& a, const Matrix<R>& b)
{
    return a * b * inverse(a) * inverse(b);
}

// Expression tree over generators, literals, products and inverses.
template <class R>
class Word {
public:
    using E = typename R::elem;
    enum class Kind { x, w, h, torus, literal, product, inverse };

    static Word x(Root a, E t) { return leaf(Kind::x, a, std::move(t)); }
    static Word w(Root a, E t) { return leaf(Kind::w, a, std::move(t)); }
    static Word h(Root a, E t) { return leaf(Kind::h, a, std::move(t)); }
    static Word torus(TorusCharacter<R> chi)
    {
        Word out(Kind::torus);
        out.chi_ = std::make_shared<TorusCharacter<R>>(std::move(chi));
        return out;
    }
    static Word literal(Matrix<R> m, std::string label = {})
    {
        Word out(Kind::literal);
        out.lit_ = std::make_shared<Matrix<R>>(std::move(m));
        out.label_ = std::move(label);
        return out;
    }

    friend Word operator*(const Word& a, const Word& b)
    {
        Word out(Kind::product);
        out.kids_ = {a, b};
        return out;
    }

    Word inv() const
    {
        Word out(Kind::inverse);
        out.kids_ = {*this};
        return out;
    }

    Kind kind() const { return kind_; }
    Root root() const { return root_; }
    const E& param() const { return *param_; }
    const TorusCharacter<R>& character() const { return *chi_; }
    const Matrix<R>& matrix() const { return *lit_; }
    const std::string& label() const { return label_; }
    const std::vector<Word>& children() const { return kids_; }

    // Every leaf in left-to-right order.
    void leaves(std::vector<const Word*>& out) const
    {
        if (kind_ == Kind::product || kind_ == Kind::inverse) {
            for (const auto& k : kids_)
                k.leaves(out);
        } else {
            out.push_back(this);
        }
    }

private:
    explicit Word(Kind k) : kind_(k) {}
    static Word leaf(Kind k, Root a, E t)
    {
        Word out(k);
        out.root_ = a;
        out.param_ = std::make_shared<E>(std::move(t));
        return out;
    }

    Kind kind_;
    Root root_;
    std::shared_ptr<E> param_;
    std::shared_ptr<TorusCharacter<R>> chi_;
    std::shared_ptr<Matrix<R>> lit_;
    std::string label_;
    std::vector<Word> kids_;
};

template <class R>
Matrix<R> eval_word(const ChevalleyGroup<R>& g, const Word<R>& w)
{
    using K = typename Word<R>::Kind;
    const R& r = g.ring();
    switch (w.kind()) {
    case K::x:
        return g.x(w.root(), w.param());
    case K::w:
        return g.w(w.root(), w.param());
    case K::h:
        return g.h(w.root(), w.param());
    case K::torus:
        return g.torus(w.character());
    case K::literal:
        return w.matrix();
    case K::product:
        return eval_word(g, w.children()[0]) * eval_word(g, w.children()[1]);
    case K::inverse: {
        const auto& c = w.children()[0];
        // Generator inverses are known in closed form.
        if (c.kind() == K::x)
            return g.x(c.root(), r.neg(c.param()));
        if (c.kind() == K::w)
            return g.w(c.root(), r.neg(c.param()));
        if (c.kind() == K::h)
            return g.h(c.root(), unit_inverse(r, c.param()));
        return inverse(eval_word(g, c));
    }
    }
    throw std::logic_error("bad word");
}

// "x:<root>:<t>", "w:<root>:<t>", "h:<root>:<t>"
template <class R>
Word<R> parse_generator(const ChevalleyGroup<R>& g, std::string_view s)
{
    auto c1 = s.find(':');
    auto c2 = c1 == std::string_view::npos ? c1 : s.find(':', c1 + 1);
    if (c2 == std::string_view::npos)
        throw ring_error("element must look like x:<root>:<t>, got '" + std::string(s) + "'");
    auto kind = s.substr(0, c1);
    Root a = g.system().parse(s.substr(c1 + 1, c2 - c1 - 1));
    auto t = g.ring().parse(s.substr(c2 + 1));
    if (kind == "x")
        return Word<R>::x(a, t);
    if (kind == "w" || kind == "h") {
        if (!g.ring().is_unit(t))
            throw ring_error("parameter of " + std::string(kind) + " must be a unit");
        return kind == "w" ? Word<R>::w(a, t) : Word<R>::h(a, t);
    }
    throw ring_error("unknown generator kind '" + std::string(kind) + "'");
}

}  // namespace chev
