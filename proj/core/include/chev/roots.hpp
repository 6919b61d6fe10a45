#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chev {

enum class SystemType { B2, G2 };

SystemType parse_system(std::string_view s);  // "b2" / "g2", any case
std::string system_name(SystemType t);

// A root in simple-root coordinates: a*alpha_1 + b*alpha_2.
struct Root {
    int a = 0;
    int b = 0;

    Root operator-() const { return {-a, -b}; }
    Root operator+(Root o) const { return {a + o.a, b + o.b}; }
    Root operator-(Root o) const { return {a - o.a, b - o.b}; }
    friend Root operator*(int k, Root r) { return {k * r.a, k * r.b}; }
    bool is_zero() const { return a == 0 && b == 0; }
    int height() const { return a + b; }
    friend auto operator<=>(const Root&, const Root&) = default;
};

class root_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Signed permutation of the ordered root list: root i goes to root image[i].
struct WeylElement {
    std::vector<int> image;
    std::vector<int> word;  // simple reflections, applied right to left
};

class RootSystem {
public:
    explicit RootSystem(SystemType t);

    SystemType type() const { return type_; }
    std::string name() const { return system_name(type_); }

    // Roots in basis order: position 2i holds beta_i, 2i+1 holds -beta_i.
    const std::vector<Root>& roots() const { return roots_; }
    const std::vector<Root>& positive() const { return positive_; }
    Root simple(int i) const { return i == 0 ? Root{1, 0} : Root{0, 1}; }
    std::size_t num_roots() const { return roots_.size(); }
    std::size_t dim() const { return roots_.size() + 2; }
    std::size_t cartan_position(int i) const { return roots_.size() + i; }

    bool contains(Root r) const { return index_of(r) >= 0; }
    int index_of(Root r) const;
    int index(Root r) const;  // throws if r is not a root
    bool is_positive(Root r) const { return r.a >= 0 && r.b >= 0 && !r.is_zero(); }

    std::vector<int> ambient(Root r) const;
    int inner(Root x, Root y) const;
    int length2(Root r) const { return inner(r, r); }

    // <beta, alpha> = 2 (beta, alpha) / (alpha, alpha)
    int pairing(Root beta, Root alpha) const;
    // w_alpha(beta) = beta - <beta, alpha> alpha
    Root reflect(Root alpha, Root beta) const;

    // (p, q): p = max i with beta - i alpha a root, q = max i with beta + i alpha a root.
    std::pair<int, int> root_string(Root alpha, Root beta) const;

    std::vector<WeylElement> weyl_enumerate() const;

    // Coefficients of the coroot of r in terms of the simple coroots.
    std::pair<int, int> coroot(Root r) const;

    // "a1", "-a2", "a1+2a2", "3a1+2a2", or ambient forms like "e1-e2".
    Root parse(std::string_view s) const;
    std::string root_name(Root r) const;
    std::string ambient_name(Root r) const;

private:
    SystemType type_;
    std::vector<std::vector<int>> simple_ambient_;
    std::vector<Root> positive_;
    std::vector<Root> roots_;
};

const RootSystem& root_system(SystemType t);

}  // namespace chev
