#include "chev/data.hpp"

#include "chev/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace chev {

std::string_view data_file(std::string_view path)
{
    for (const auto& f : detail::embedded_files())
        if (path == f.path)
            return f.content;
    throw data_error("no data file '" + std::string(path) + "'");
}

std::vector<std::string> data_files(std::string_view prefix)
{
    std::vector<std::string> out;
    for (const auto& f : detail::embedded_files()) {
        std::string_view p = f.path;
        if (p.substr(0, prefix.size()) == prefix)
            out.emplace_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::string& TextMatrix::get(const std::string& key) const
{
    auto it = meta.find(key);
    if (it == meta.end())
        throw data_error(path + ": missing header '" + key + "'");
    return it->second;
}

namespace {

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

TextMatrix parse_text_matrix(std::string_view text, std::string path)
{
    TextMatrix m;
    m.path = std::move(path);
    std::istringstream in{std::string(text)};
    std::string line;
    long n = -1;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty())
            continue;
        if (t[0] == '#') {
            auto colon = t.find(':');
            if (colon != std::string::npos)
                m.meta[trim(std::string_view(t).substr(1, colon - 1))] = trim(std::string_view(t).substr(colon + 1));
            continue;
        }
        std::istringstream row(t);
        std::vector<std::string> cells;
        for (std::string c; row >> c;)
            cells.push_back(c);
        if (n < 0) {
            if (cells.size() != 1)
                throw data_error(m.path + ": expected a dimension line");
            n = std::stol(cells[0]);
            continue;
        }
        if (!m.cells.empty() && cells.size() != m.cells[0].size())
            throw data_error(m.path + ": ragged row " + std::to_string(m.cells.size() + 1));
        m.cells.push_back(std::move(cells));
    }
    if (n < 0 || static_cast<long>(m.cells.size()) != n)
        throw data_error(m.path + ": expected " + std::to_string(n) + " rows, found " + std::to_string(m.cells.size()));
    return m;
}

TextMatrix load_text_matrix(std::string_view path)
{
    return parse_text_matrix(data_file(path), std::string(path));
}

// Grammar: term (('+'|'-') term)*, term = [rational '*'] name | rational.
LinearExpr parse_linear(std::string_view s)
{
    LinearExpr e;
    std::map<std::string, mpq_class> acc;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    };
    auto fail = [&](const std::string& why) {
        throw data_error("bad linear expression '" + std::string(s) + "': " + why);
    };
    skip();
    if (i == s.size())
        fail("empty");
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        skip();
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail("expected + or -");
        }
        first = false;
        skip();
        mpq_class coef = 1;
        bool have_num = false;
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/'))
            ++j;
        if (j > i) {
            coef = parse_rational(s.substr(i, j - i));
            have_num = true;
            i = j;
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip();
            } else {
                e.constant += sign * coef;
                continue;
            }
        }
        j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
            ++j;
        if (j == i || !std::isalpha(static_cast<unsigned char>(s[i])))
            fail(have_num ? "expected a name after '*'" : "expected a term");
        acc[std::string(s.substr(i, j - i))] += sign * coef;
        i = j;
        skip();
    }
    for (auto& [k, v] : acc)
        if (v != 0)
            e.terms.emplace_back(k, v);
    return e;
}

std::string to_string(const LinearExpr& e)
{
    std::string out;
    for (const auto& [name, k] : e.terms) {
        mpq_class a = abs(k);
        out += k < 0 ? "-" : (out.empty() ? "" : "+");
        out += a == 1 ? name : a.get_str() + "*" + name;
    }
    if (e.constant != 0 || out.empty()) {
        if (e.constant < 0)
            out += "-" + mpq_class(-e.constant).get_str();
        else
            out += (out.empty() ? "" : "+") + e.constant.get_str();
    }
    return out;
}

std::vector<std::string> Pattern::unknowns() const
{
    std::set<std::string> s;
    for (const auto& row : cells)
        for (const auto& c : row)
            for (const auto& [name, k] : c.terms)
                s.insert(name);
    return {s.begin(), s.end()};
}

Pattern load_pattern(std::string_view path)
{
    auto t = load_text_matrix(path);
    Pattern p;
    p.path = t.path;
    p.meta = t.meta;
    for (const auto& row : t.cells) {
        std::vector<LinearExpr> r;
        for (const auto& c : row)
            r.push_back(parse_linear(c));
        p.cells.push_back(std::move(r));
    }
    return p;
}

std::map<std::string, LinearExpr> load_assignments(std::string_view path)
{
    std::map<std::string, LinearExpr> out;
    std::istringstream in{std::string(data_file(path))};
    std::string line;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw data_error(std::string(path) + ": expected 'name = expr'");
        auto name = trim(std::string_view(t).substr(0, eq));
        if (!out.emplace(name, parse_linear(std::string_view(t).substr(eq + 1))).second)
            throw data_error(std::string(path) + ": '" + name + "' assigned twice");
    }
    return out;
}

}  // namespace chev
