#pragma once

#include "chev/matrix.hpp"
#include "chev/ring.hpp"

#include <stdexcept>
#include <vector>

namespace chev {

class involution_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class R>
struct ModuleSplitting {
    Matrix<R> e;                        // idempotent (1 + a) / 2
    std::vector<std::size_t> columns0;  // columns of e forming a basis of eV
    std::vector<std::size_t> columns1;  // columns of 1 - e forming a basis of (1 - e)V
    Matrix<R> basis;                    // basis0 then basis1, as columns
    std::size_t rank0 = 0;
    std::size_t rank1 = 0;
    bool basis_invertible = false;
};

template <class R>
bool is_involution(const Matrix<R>& a)
{
    return a.square() && (a * a).is_identity();
}

template <class R>
Matrix<R> idempotent_of(const Matrix<R>& a)
{
    if (!is_involution(a))
        throw involution_error("matrix is not an involution");
    const R& r = a.ring();
    auto half = r.inv(r.from_int(2));
    if (!half)
        throw involution_error("2 is not a unit in " + r.name());
    return (Matrix<R>::identity(r, a.rows()) + a).scaled(*half);
}

namespace detail {

// Columns of p whose residues are a basis of the residue column space.
template <class R>
std::vector<std::size_t> residue_pivots(const Matrix<R>& p)
{
    auto res = p.residue();
    return rref_in_place(res);
}

template <class R>
Matrix<R> columns_of(const std::vector<const Matrix<R>*>& src, const std::vector<std::vector<std::size_t>>& cols)
{
    const R& r = src[0]->ring();
    std::size_t total = 0;
    for (const auto& c : cols)
        total += c.size();
    Matrix<R> out(r, src[0]->rows(), total);
    std::size_t k = 0;
    for (std::size_t s = 0; s < src.size(); ++s)
        for (auto c : cols[s]) {
            for (std::size_t i = 0; i < out.rows(); ++i)
                out(i, k) = (*src[s])(i, c);
            ++k;
        }
    return out;
}

}  // namespace detail

// V = eV + (1 - e)V with explicit free bases. Over a local ring eV is free and
// any columns of e whose residues span the residue image form a basis of it.
template <class R>
ModuleSplitting<R> split_module(const Matrix<R>& a)
{
    const R& r = a.ring();
    auto e = idempotent_of(a);
    auto f = Matrix<R>::identity(r, a.rows()) - e;
    ModuleSplitting<R> s{e, detail::residue_pivots(e), detail::residue_pivots(f), Matrix<R>(r, 0, 0)};
    s.rank0 = s.columns0.size();
    s.rank1 = s.columns1.size();
    s.basis = detail::columns_of<R>({&e, &f}, {s.columns0, s.columns1});
    s.basis_invertible = s.basis.square() && r.is_unit(det(s.basis));
    return s;
}

template <class R>
struct LiftedBasis {
    ModuleSplitting<R> source;  // splitting of a
    Matrix<R> lifted;           // f_i as columns, adapted to b
    Matrix<R> transition;       // source.basis^{-1} * lifted
    std::size_t rank0_a = 0, rank1_a = 0, rank0_b = 0, rank1_b = 0;
    bool transition_is_identity_mod_J = false;
    bool transition_unit_det = false;
    bool adapted = false;  // e_b f_i = f_i on the first block, 0 on the second
};

// Given involutions a, b with equal residues, carries the split basis of a
// over to b: f_i = e_b e_i on the first block and (1 - e_b) e_i on the second.
template <class R>
LiftedBasis<R> lift_basis(const Matrix<R>& a, const Matrix<R>& b)
{
    if (a.residue() != b.residue())
        throw involution_error("involutions differ modulo J");
    const R& r = a.ring();
    const std::size_t n = a.rows();
    auto sa = split_module(a);
    auto sb = split_module(b);
    auto eb = sb.e;
    auto fb = Matrix<R>::identity(r, n) - eb;
    Matrix<R> lifted(r, n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& proj = k < sa.rank0 ? eb : fb;
        for (std::size_t i = 0; i < n; ++i) {
            auto acc = r.zero();
            for (std::size_t j = 0; j < n; ++j)
                if (!r.is_zero(proj(i, j)) && !r.is_zero(sa.basis(j, k)))
                    acc = r.add(acc, r.mul(proj(i, j), sa.basis(j, k)));
            lifted(i, k) = acc;
        }
    }
    LiftedBasis<R> out{sa, lifted, Matrix<R>(r, 0, 0)};
    out.rank0_a = sa.rank0;
    out.rank1_a = sa.rank1;
    out.rank0_b = sb.rank0;
    out.rank1_b = sb.rank1;
    auto inv = try_inverse(sa.basis);
    if (inv) {
        out.transition = *inv * lifted;
        out.transition_is_identity_mod_J = out.transition.residue().is_identity();
        out.transition_unit_det = r.is_unit(det(out.transition));
    }
    bool ok = true;
    auto img = eb * lifted;
    for (std::size_t k = 0; k < n && ok; ++k)
        for (std::size_t i = 0; i < n && ok; ++i) {
            auto want = k < sa.rank0 ? lifted(i, k) : r.zero();
            ok = r.eq(img(i, k), want);
        }
    out.adapted = ok;
    return out;
}

}  // namespace chev
