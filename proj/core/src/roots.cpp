#include "chev/roots.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>

namespace chev {

SystemType parse_system(std::string_view s)
{
    std::string t;
    for (char c : s)
        t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "b2")
        return SystemType::B2;
    if (t == "g2")
        return SystemType::G2;
    throw root_error("unknown root system '" + std::string(s) + "'");
}

std::string system_name(SystemType t)
{
    return t == SystemType::B2 ? "B2" : "G2";
}

RootSystem::RootSystem(SystemType t) : type_(t)
{
    if (t == SystemType::B2) {
        simple_ambient_ = {{1, -1}, {0, 1}};
        // e1, e2, e1+e2, e1-e2
        positive_ = {{1, 1}, {0, 1}, {1, 2}, {1, 0}};
    } else {
        simple_ambient_ = {{1, -1, 0}, {-2, 1, 1}};
        positive_ = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    }
    for (Root r : positive_) {
        roots_.push_back(r);
        roots_.push_back(-r);
    }
}

int RootSystem::index_of(Root r) const
{
    auto it = std::find(roots_.begin(), roots_.end(), r);
    return it == roots_.end() ? -1 : static_cast<int>(it - roots_.begin());
}

int RootSystem::index(Root r) const
{
    int i = index_of(r);
    if (i < 0)
        throw root_error(root_name(r) + " is not a root of " + name());
    return i;
}

std::vector<int> RootSystem::ambient(Root r) const
{
    std::vector<int> v(simple_ambient_[0].size());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = r.a * simple_ambient_[0][k] + r.b * simple_ambient_[1][k];
    return v;
}

int RootSystem::inner(Root x, Root y) const
{
    auto u = ambient(x), v = ambient(y);
    int s = 0;
    for (std::size_t k = 0; k < u.size(); ++k)
        s += u[k] * v[k];
    return s;
}

int RootSystem::pairing(Root beta, Root alpha) const
{
    int num = 2 * inner(beta, alpha), den = length2(alpha);
    if (den == 0 || num % den != 0)
        throw root_error("pairing is not an integer");
    return num / den;
}

Root RootSystem::reflect(Root alpha, Root beta) const
{
    return beta - pairing(beta, alpha) * alpha;
}

std::pair<int, int> RootSystem::root_string(Root alpha, Root beta) const
{
    if (beta == alpha || beta == -alpha)
        throw root_error("root string needs beta != +-alpha");
    int p = 0, q = 0;
    while (contains(beta - (p + 1) * alpha))
        ++p;
    while (contains(beta + (q + 1) * alpha))
        ++q;
    return {p, q};
}

std::pair<int, int> RootSystem::coroot(Root r) const
{
    // r^vee = sum n_i (alpha_i, alpha_i)/(r, r) alpha_i^vee
    int l = length2(r);
    int c1 = r.a * length2(simple(0)), c2 = r.b * length2(simple(1));
    if (c1 % l || c2 % l)
        throw root_error("coroot is not integral");
    return {c1 / l, c2 / l};
}

std::vector<WeylElement> RootSystem::weyl_enumerate() const
{
    const int m = static_cast<int>(roots_.size());
    std::vector<std::vector<int>> gens(2, std::vector<int>(m));
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i < m; ++i)
            gens[s][i] = index(reflect(simple(s), roots_[i]));
    WeylElement id;
    id.image.resize(m);
    for (int i = 0; i < m; ++i)
        id.image[i] = i;
    std::vector<WeylElement> out{id};
    std::set<std::vector<int>> seen{id.image};
    for (std::size_t k = 0; k < out.size(); ++k)
        for (int s = 0; s < 2; ++s) {
            WeylElement w;
            w.image.resize(m);
            for (int i = 0; i < m; ++i)
                w.image[i] = gens[s][out[k].image[i]];
            if (!seen.insert(w.image).second)
                continue;
            w.word = out[k].word;
            w.word.insert(w.word.begin(), s);
            out.push_back(std::move(w));
        }
    return out;
}

namespace {

std::string strip(std::string_view s)
{
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    return t;
}

// Parses a signed sum of terms "k" followed by a symbol of the given letter.
std::map<int, int> parse_terms(const std::string& s, char letter, std::string_view whole)
{
    std::map<int, int> out;
    std::size_t i = 0;
    auto bad = [&]() { return root_error("cannot parse root '" + std::string(whole) + "'"); };
    if (s.empty())
        throw bad();
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw bad();
        }
        int k = 0;
        bool has_k = false;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            k = 10 * k + (s[i] - '0');
            has_k = true;
            ++i;
        }
        if (i < s.size() && s[i] == '*')
            ++i;
        if (i >= s.size() || s[i] != letter)
            throw bad();
        ++i;
        if (i < s.size() && s[i] == '_')
            ++i;
        int idx = 0;
        bool has_idx = false;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            idx = 10 * idx + (s[i] - '0');
            has_idx = true;
            ++i;
        }
        if (!has_idx)
            throw bad();
        out[idx] += sign * (has_k ? k : 1);
    }
    return out;
}

}  // namespace

Root RootSystem::parse(std::string_view text) const
{
    std::string s = strip(text);
    int outer = 1;
    if (s.size() > 3 && s[0] == '-' && s[1] == '(' && s.back() == ')') {
        outer = -1;
        s = s.substr(2, s.size() - 3);
    }
    Root r;
    if (s.find('a') != std::string::npos) {
        auto t = parse_terms(s, 'a', text);
        for (auto [i, k] : t) {
            if (i == 1)
                r.a += k;
            else if (i == 2)
                r.b += k;
            else
                throw root_error("simple roots are a1 and a2");
        }
    } else {
        auto t = parse_terms(s, 'e', text);
        std::vector<int> v(simple_ambient_[0].size(), 0);
        for (auto [i, k] : t) {
            if (i < 1 || i > static_cast<int>(v.size()))
                throw root_error("ambient index out of range in '" + std::string(text) + "'");
            v[i - 1] += k;
        }
        bool found = false;
        for (Root c : roots_)
            if (ambient(c) == v) {
                r = c;
                found = true;
            }
        if (!found)
            throw root_error("'" + std::string(text) + "' is not a root of " + name());
    }
    r = outer * r;
    if (!contains(r))
        throw root_error("'" + std::string(text) + "' is not a root of " + name());
    return r;
}

std::string RootSystem::root_name(Root r) const
{
    bool neg = r.a < 0 || r.b < 0;
    Root p = neg ? -r : r;
    auto term = [](int k, const char* s) {
        return k == 1 ? std::string(s) : std::to_string(k) + s;
    };
    std::string body;
    if (p.a != 0)
        body = term(p.a, "a1");
    if (p.b != 0)
        body += (body.empty() ? "" : "+") + term(p.b, "a2");
    if (body.empty())
        return "0";
    if (!neg)
        return body;
    return (p.a != 0 && p.b != 0) ? "-(" + body + ")" : "-" + body;
}

std::string RootSystem::ambient_name(Root r) const
{
    auto v = ambient(r);
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0)
            continue;
        int c = v[k];
        if (c < 0)
            s += "-";
        else if (!s.empty())
            s += "+";
        if (std::abs(c) != 1)
            s += std::to_string(std::abs(c));
        s += "e" + std::to_string(k + 1);
    }
    return s.empty() ? "0" : s;
}

const RootSystem& root_system(SystemType t)
{
    static const RootSystem b2(SystemType::B2);
    static const RootSystem g2(SystemType::G2);
    return t == SystemType::B2 ? b2 : g2;
}

}  // namespace chev
