// Regenerates the derived data files: the printed-basis convention matrices
// and the matrix-unit word certificate. Usage: chev-gen-data <data-dir>
#include "chev/replay.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

void write_convention(const std::filesystem::path& dir, chev::SystemType sys)
{
    auto cs = chev::solve_convention(sys);
    if (!cs.t) {
        std::cerr << chev::system_name(sys) << ": convention not determined (nullity " << cs.nullity << ")\n";
        std::exit(1);
    }
    const auto& t = *cs.t;
    auto name = sys == chev::SystemType::B2 ? "b2" : "g2";
    std::ofstream out(dir / "convention" / (std::string(name) + ".txt"));
    out << "# convention: " << chev::system_name(sys) << "\n";
    out << "# printed(M) = T S M^t S T^-1, S swapping each root with its negative\n";
    out << "# solved from:";
    for (const auto& f : cs.used)
        out << " " << f;
    out << "\n" << t.rows() << "\n";
    for (const auto& row : t.strings()) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << row[j];
        out << "\n";
    }
    std::cout << "wrote convention for " << chev::system_name(sys) << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: chev-gen-data <data-dir>\n";
        return 2;
    }
    std::filesystem::path dir = argv[1];
    std::string what = std::getenv("CHEV_GEN") ? std::getenv("CHEV_GEN") : "all";
    if (what == "all" || what == "convention") {
        write_convention(dir, chev::SystemType::B2);
        write_convention(dir, chev::SystemType::G2);
    }
    if (what == "all" || what == "lemma2") {
        auto words = chev::lemma2_search();
        std::ofstream(dir / "certificates" / "lemma2_b2.txt") << chev::lemma2_certificate_text(words);
        std::cout << "wrote " << words.size() << " words\n";
    }
    return 0;
}
