#include "chev/automorphisms.hpp"

namespace chev {

CommutantShape torus_commutant_shape(long p, SystemType type)
{
    if (!is_prime(p) || p < 5)
        throw ring_error("torus commutant shape needs a prime p >= 5");
    ZModPk f(p, 1);
    ChevalleyGroup<ZModPk> g(f, type);
    const RootSystem& rs = g.system();
    const std::size_t n = g.dim();
    CommutantShape out;
    out.n = n;
    out.sampled_t = {2, 3};

    // Unknown A_ij at column i * n + j; each equation is (A h - h A)_ij = 0.
    std::vector<std::vector<std::int64_t>> rows;
    for (Root a : rs.roots())
        for (long t : out.sampled_t) {
            auto h = g.h(a, f.from_int(t));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    std::vector<std::int64_t> row(n * n, 0);
                    // (A h)_ij = sum_k A_ik h_kj, (h A)_ij = sum_k h_ik A_kj
                    for (std::size_t k = 0; k < n; ++k) {
                        row[i * n + k] = f.add(row[i * n + k], h(k, j));
                        row[k * n + j] = f.sub(row[k * n + j], h(i, k));
                    }
                    bool any = false;
                    for (auto v : row)
                        any = any || v != 0;
                    if (any)
                        rows.push_back(std::move(row));
                }
        }
    Matrix<ZModPk> sys(f, rows.size(), n * n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n * n; ++c)
            sys(r, c) = rows[r][c];
    auto basis = nullspace(sys);
    out.dimension = basis.size();
    out.free.assign(n, std::vector<bool>(n, false));
    for (const auto& v : basis)
        for (std::size_t c = 0; c < n * n; ++c)
            if (v[c] != 0)
                out.free[c / n][c % n] = true;

    const std::size_t m = rs.num_roots();
    bool diag = true, full = true, off = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool root_i = i < m, root_j = j < m;
            if (root_i && root_j)
                diag = diag && out.free[i][j] == (i == j);
            else if (!root_i && !root_j)
                full = full && out.free[i][j];
            else
                off = off && !out.free[i][j];
        }
    out.root_block_diagonal = diag;
    out.cartan_block_full = full;
    out.off_blocks_zero = off;
    return out;
}

}  // namespace chev
