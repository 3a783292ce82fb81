#pragma once

// Kronecker quiver data: dimension vector, labels and exponent vectors of monomials in the
// coordinates x^i_{jk} (arrow i, row j of the r2 x r1 matrix A_i, column k).

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace kronecker {

struct QuiverSpec {
    int n = 1;   // arrows
    int r1 = 1;  // dimension at the source vertex
    int r2 = 1;  // dimension at the target vertex

    QuiverSpec() = default;
    QuiverSpec(int arrows, int dim1, int dim2);

    bool coprime() const { return std::gcd(r1, r2) == 1; }
    int gcd() const { return std::gcd(r1, r2); }
    int lcm() const { return std::lcm(r1, r2); }
    /// theta = (-r2, r1)
    std::pair<int, int> stability() const { return {-r2, r1}; }

    std::size_t ambient_dim() const { return static_cast<std::size_t>(n) * r1 * r2; }

    /// Flat index of x^i_{jk}; all arguments 1-based.
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i - 1) * r2 + static_cast<std::size_t>(j - 1)) * r1 +
               static_cast<std::size_t>(k - 1);
    }

    struct Triple {
        int i, j, k;
    };
    Triple triple(std::size_t flat) const;

    std::string name() const;  // e.g. "K^3_{2,3}"

    bool operator==(const QuiverSpec&) const = default;
};

/// A double label (first, second). Ordered lexicographically.
struct Label {
    int first = 0;
    int second = 0;
    auto operator<=>(const Label&) const = default;
};

/// Exponent vector of a monomial in the x^i_{jk}, flat in (i, j, k) order.
struct ExponentVector {
    std::vector<std::int64_t> values;

    ExponentVector() = default;
    explicit ExponentVector(std::size_t dim) : values(dim, 0) {}
    explicit ExponentVector(std::vector<std::int64_t> v) : values(std::move(v)) {}

    std::size_t size() const { return values.size(); }
    std::int64_t& operator[](std::size_t i) { return values[i]; }
    std::int64_t operator[](std::size_t i) const { return values[i]; }
    std::int64_t total() const;
    bool is_zero() const;

    ExponentVector operator+(const ExponentVector& o) const;
    ExponentVector operator-(const ExponentVector& o) const;

    auto operator<=>(const ExponentVector&) const = default;
};

/// (sum of entries) / lcm(r1, r2), or -1 when not integral.
std::int64_t height(const ExponentVector& v, const QuiverSpec& spec);

}  // namespace kronecker
