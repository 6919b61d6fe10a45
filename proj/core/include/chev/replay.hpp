#pragma once

#include "chev/data.hpp"
#include "chev/group.hpp"
#include "chev/matrix.hpp"
#include "chev/ring.hpp"
#include "chev/roots.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chev {

// Printed matrices are related to generated ones by P(M) = T S M^t S T^{-1},
// where S swaps each pair (beta, -beta) and fixes h1, h2. P reverses products.
struct Convention {
    SystemType system;
    Matrix<Rationals> t;
    Matrix<Rationals> t_inv;
    Matrix<Rationals> s;
    Matrix<Rationals> left;   // T S
    Matrix<Rationals> right;  // S T^{-1}
};

Matrix<Rationals> swap_matrix(const RootSystem& rs);
Convention make_convention(SystemType sys, Matrix<Rationals> t);
const Convention& committed_convention(SystemType sys);  // data/convention/<sys>.txt

template <class R>
Matrix<R> printed(const Convention& c, const Matrix<R>& m)
{
    const R& r = m.ring();
    auto lift = [&](const mpq_class& v) { return r.from_mpq(v); };
    return c.left.map_to(r, lift) * m.transpose() * c.right.map_to(r, lift);
}

// Fixture metadata: kind x|w|h, root, parameter.
struct FixtureSpec {
    std::string name;  // file stem, e.g. "b2_w_e1-e2"
    SystemType system;
    char kind;
    Root root;
    std::string param;
    Matrix<Rationals> matrix;
};

std::vector<std::string> fixture_names();
FixtureSpec load_fixture(const std::string& name);

// Group-theoretic identities a printed generator must satisfy whatever the
// basis convention: invertible, w^4 = 1 with w^2 a signed identity, x - 1
// nilpotent, h diagonal.
std::vector<std::string> fixture_sanity(const FixtureSpec& f);

struct ConventionSolve {
    std::vector<std::string> used;    // fixtures entering the solve
    std::size_t nullity = 0;          // of T -> T Q - Printed T on the allowed shape
    std::optional<Matrix<Rationals>> t;  // normalised by T(h1, h1) = 1 when nullity is 1
    bool matches_committed = false;
};

ConventionSolve solve_convention(SystemType sys);

struct GoldenResult {
    std::string name;
    enum class Outcome { exact, reconciled, mismatch } outcome = Outcome::mismatch;
    std::vector<std::string> sanity_failures;  // non-empty means quarantined
    std::vector<std::pair<std::size_t, std::size_t>> diff;  // 1-based, against P(generated)
    bool quarantined() const { return !sanity_failures.empty(); }
};

std::string to_string(GoldenResult::Outcome o);
GoldenResult golden_compare(const std::string& name);

// Symbolic patterns over the jet ring.
struct BuiltPattern {
    std::string name;
    SystemType system;
    Pattern source;
    std::vector<std::string> unknowns;
    std::size_t coordinates = 0;            // jet symbols actually used
    std::map<std::string, mpq_class> base;  // value of each unknown at y = 0
    std::size_t free_bases = 0;             // unknowns not pinned by the true generator
    Jet ring{0};
    Matrix<Jet> matrix{Jet(0), 0, 0};
    Matrix<Rationals> truth{Rationals(), 0, 0};  // printed true generator
    bool specializes = false;                      // matrix at y = 0 equals truth
};

std::vector<std::string> pattern_names();
// t is the torus parameter for c_t and ignored otherwise.
BuiltPattern build_pattern(const std::string& name, long t = 2);

struct ConditionResidual {
    std::string id;
    std::string word;
    Matrix<Jet> residual{Jet(0), 0, 0};
    std::vector<std::pair<int, int>> positions;  // 1-based
    bool constant_zero = false;
};

std::vector<ConditionResidual> b2_residuals();

struct LinearSystem76 {
    std::vector<std::vector<mpq_class>> matrix;
    std::vector<std::string> row_tags;
    std::vector<std::string> columns;
    std::size_t rows = 0, cols = 0;
    bool entries_bounded = false;  // all integers in {0, +-1, +-2}
    mpz_class det;
    std::size_t rank_q = 0;
    std::size_t rank_f5 = 0, rank_f7 = 0;
    bool unique_f5 = false, unique_f7 = false;
    // Every residual entry of Con1..Con5, not only the listed positions.
    std::size_t full_rows = 0, full_rank_q = 0;
    // Matrices Z commuting with the fixed generators give solutions y of the
    // full system via A -> A + [Z, A], B -> B + [Z, B].
    std::size_t centralizer_dim = 0;
    std::size_t inner_dim = 0;           // rank of the y-vectors of those Z that keep the pattern shapes
    bool inner_in_kernel = false;
    bool kernel_is_inner = false;        // full kernel is spanned by them
};

LinearSystem76 linear_system_76();

struct G2Condition {
    std::string id;
    std::string word;
    bool evaluated = false;  // false when the printed word is not usable
    bool holds = false;
    std::string note;
};

std::vector<G2Condition> g2_sanity();

struct Lemma2Report {
    std::vector<std::string> generators;  // labels, index 0 is the identity
    std::vector<std::vector<int>> words;  // the certificate: products of generators
    bool seed_ok = false;
    std::string index_claim;              // what w_{e1} E_{5,6} actually is
    bool index_claim_as_written = false;
    std::size_t dimension = 0;            // rank of the word matrices mod 5
    std::size_t rank_q = 0;
    mpz_class det;                        // of the 100 x 100 coordinate matrix
    bool units_integral = false;          // every E_ij is a Z_(5)-combination
    std::string stall;                    // reason if the search stalls
};

// Greedy closure search over F_5; returns generator-index words.
std::vector<std::vector<int>> lemma2_search();
Lemma2Report lemma2_verify(const std::vector<std::vector<int>>& words);
std::vector<std::vector<int>> lemma2_stored_words();
std::string lemma2_certificate_text(const std::vector<std::vector<int>>& words);

// One replay step as an ordered list of facts.
struct StepReport {
    std::string step;
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> details;
    std::vector<std::string> notes;
    std::string certificate;

    void add(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
};

StepReport replay_golden();
StepReport replay_patterns();
StepReport replay_det76();
StepReport replay_lemma2();
StepReport replay_g2_sanity();

const std::vector<std::string>& replay_steps();  // golden, patterns, det76, lemma2, g2-sanity
std::vector<StepReport> replay(const std::string& step);  // a step name or "all"

}  // namespace chev
