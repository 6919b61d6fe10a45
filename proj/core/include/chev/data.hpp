#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chev {

class data_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
struct EmbeddedFile {
    const char* path;
    std::string_view content;
};
const std::vector<EmbeddedFile>& embedded_files();
}  // namespace detail

// Contents of a data file by path relative to data/, e.g. "fixtures/g2_x_a1.txt".
std::string_view data_file(std::string_view path);
std::vector<std::string> data_files(std::string_view prefix = {});

// "# key: value" header lines, a dimension line, then whitespace separated rows.
struct TextMatrix {
    std::string path;
    std::map<std::string, std::string> meta;
    std::vector<std::vector<std::string>> cells;
    std::size_t rows() const { return cells.size(); }
    std::size_t cols() const { return cells.empty() ? 0 : cells[0].size(); }
    const std::string& get(const std::string& key) const;
};

TextMatrix parse_text_matrix(std::string_view text, std::string path = {});
TextMatrix load_text_matrix(std::string_view path);

// c + sum k_i name_i with rational coefficients.
struct LinearExpr {
    mpq_class constant;
    std::vector<std::pair<std::string, mpq_class>> terms;
};

LinearExpr parse_linear(std::string_view s);
std::string to_string(const LinearExpr& e);

struct Pattern {
    std::string path;
    std::map<std::string, std::string> meta;
    std::vector<std::vector<LinearExpr>> cells;
    std::size_t rows() const { return cells.size(); }
    std::size_t cols() const { return cells.empty() ? 0 : cells[0].size(); }
    std::vector<std::string> unknowns() const;  // sorted, unique
};

Pattern load_pattern(std::string_view path);

// Lines "name = expr" with expr linear in y1..ym.
std::map<std::string, LinearExpr> load_assignments(std::string_view path);

}  // namespace chev
