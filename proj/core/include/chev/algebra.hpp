#pragma once

#include "chev/roots.hpp"

#include <string>
#include <utility>
#include <vector>

namespace chev {

using IntMat = std::vector<std::vector<long long>>;

IntMat int_identity(std::size_t n);
IntMat int_mul(const IntMat& a, const IntMat& b);
IntMat int_sub(const IntMat& a, const IntMat& b);
bool int_is_zero(const IntMat& a);

// Sparse basis vector: (basis position, coefficient).
using BasisCombo = std::vector<std::pair<int, long long>>;

// Structure constants of a Chevalley basis x_beta (beta in the root list), h_1, h_2.
class StructureTable {
public:
    // Signs fixed by positivity on extraspecial pairs; the rest is forced by Jacobi.
    explicit StructureTable(const RootSystem& rs);

    const RootSystem& system() const { return *rs_; }
    std::size_t dim() const { return rs_->dim(); }

    // N_{alpha beta}; 0 when alpha + beta is not a root.
    long long N(Root alpha, Root beta) const;
    long long N_index(int i, int j) const { return n_[i][j]; }

    // [b_i, b_j] for basis positions i, j.
    BasisCombo bracket(int i, int j) const;

    // (ad b)_{ij} = coefficient of b_i in [b, b_j].
    const IntMat& ad(int basis_pos) const { return ad_[basis_pos]; }
    const IntMat& ad_root(Root r) const { return ad_[rs_->index(r)]; }
    const IntMat& ad_cartan(int i) const { return ad_[rs_->num_roots() + i]; }

    // (ad x_r)^k / k!, k = 0..4; integral for a Chevalley basis.
    const IntMat& divided_power(Root r, int k) const { return dp_[rs_->index(r)][k]; }

    // The extraspecial pairs used to fix signs, one per non-simple positive root.
    const std::vector<std::pair<Root, Root>>& extraspecial() const { return extraspecial_; }
    // Number of sign assignments satisfying Jacobi with the extraspecial constraint.
    int sign_solutions() const { return solutions_; }

    // Copy with N_{alpha beta} and N_{beta alpha} negated (for fault injection).
    StructureTable with_flipped_sign(Root alpha, Root beta) const;

private:
    void build_matrices();

    const RootSystem* rs_;
    std::vector<std::vector<long long>> n_;
    std::vector<IntMat> ad_;
    std::vector<std::vector<IntMat>> dp_;
    std::vector<std::pair<Root, Root>> extraspecial_;
    int solutions_ = 0;
};

const StructureTable& structure_table(SystemType t);

struct CheckEntry {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckEntry> entries;
    bool all_pass() const;
    void add(std::string name, bool pass, std::string detail = {});
};

// Recomputes every Chevalley basis property from the table's constants.
CheckReport verify_chevalley_basis(const StructureTable& t);

}  // namespace chev
