#include "chev/replay.hpp"

namespace chev {

std::vector<G2Condition> g2_sanity()
{
    ZLoc r(5);
    ChevalleyGroup<ZLoc> g(r, SystemType::G2);
    const auto& c = committed_convention(SystemType::G2);
    const Root a1{1, 0}, a2{0, 1};
    const auto one = r.one(), mone = r.neg(r.one());
    auto P = [&](const Matrix<ZLoc>& m) { return printed(c, m); };

    const auto x1 = P(g.x(a1, one)), x2 = P(g.x(a2, one));
    const auto w1 = P(g.w(a1, one)), w1i = P(g.w(a1, mone));
    const auto w2 = P(g.w(a2, one)), w2i = P(g.w(a2, mone));
    const auto d2 = P(g.h(a2, r.from_int(2))), d2i = P(g.h(a2, r.from_mpq(mpq_class(1, 2))));
    const auto h1m = P(g.h(a1, mone)), h2m = P(g.h(a2, mone));
    const auto x = w1 * w2 * x1 * w2i * w1i;  // stands for x_{2a1+a2}(1)

    auto cond = [](std::string id, std::string word, bool holds, std::string note = {}) {
        return G2Condition{std::move(id), std::move(word), true, holds, std::move(note)};
    };
    std::vector<G2Condition> out;
    out.push_back(cond("Con6", "w2 d2 w2^-1 = d2^-1", w2 * d2 * w2i == d2i));
    out.push_back(cond("Con7", "x1^2 d2 = d2 x1", x1 * x1 * d2 == d2 * x1));
    out.push_back(cond("Con8", "w2 x2 w2^-1 x1 = x1 w2 x2 w2^-1", w2 * x2 * w2i * x1 == x1 * w2 * x2 * w2i));
    out.push_back(cond("Con9", "h_a2(-1) x1 h_a2(-1) x1 = 1", (h2m * x1 * h2m * x1).is_identity()));
    {
        // Checked as printed. The B2 analogue has a trailing x factor, so the
        // reading with one is reported alongside.
        bool trailing = x1 * w1 * x1 * w1i * x1 == w1;
        out.push_back(cond("Con10", "x1 w1 x1 w1^-1 = w1", x1 * w1 * x1 * w1i == w1,
                           std::string("x1 w1 x1 w1^-1 x1 = w1 ") + (trailing ? "holds" : "fails")));
    }
    out.push_back(cond("Con11", "w2 x2 w2^-1 x1 = x1 w2 x2 w2^-1", w2 * x2 * w2i * x1 == x1 * w2 * x2 * w2i,
                       "same word as Con8"));
    out.push_back(cond("Con12", "d2 X = X d2, X = w1 w2 x1 w2^-1 w1^-1", d2 * x == x * d2));
    out.push_back(cond("Con13", "w2 d2 w2^-1 d2 = 1", (w2 * d2 * w2i * d2).is_identity()));
    out.push_back(cond("Con14", "x2 X = X x2, X = w1 w2 x1 w2^-1 w1^-1", x2 * x == x * x2));
    out.push_back(cond("Con15", "h_a1(-1) x2 h_a1(-1) x2 = 1", (h1m * x2 * h1m * x2).is_identity()));
    {
        // The printed right-hand word ends in w2^-1 w2^-1 and does not match
        // the left-hand side it is derived from; evaluated only for the record.
        bool literal = w1 * x2 * w1i * x2 * w2 * w1 * x2 * w2i * w2i == w1 * x2 * w1i * x2;
        out.push_back(G2Condition{"Con16", "w1 x2 w1^-1 x2 w2 w1 x2 w2^-1 w2^-1 = w1 x2 w1^-1 x2", false, false,
                                  std::string("garbled word; literal reading ") + (literal ? "holds" : "fails")});
    }
    out.push_back(cond("Con17", "d2 x2^4 = x2 d2", d2 * matrix_power(x2, 4) == x2 * d2));
    return out;
}

}  // namespace chev
