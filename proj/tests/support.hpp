#pragma once

#include "kronecker/io.hpp"
#include "kronecker/mirror.hpp"
#include "kronecker/tableaux.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace kt {

inline std::string data_path(const std::string& name) { return std::string(KRONECKER_TEST_DATA) + "/" + name; }

/// Non-comment lines of a data file.
inline std::vector<std::string> data_lines(const std::string& name) {
    std::ifstream in(data_path(name));
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        out.push_back(line);
    }
    return out;
}

inline std::vector<kronecker::Tableau> data_tableaux(const std::string& name) {
    std::vector<kronecker::Tableau> out;
    for (const auto& l : data_lines(name)) out.push_back(kronecker::parse_tableau(l));
    return out;
}

/// Coefficient-1 polynomial from a file of exponent vectors.
inline kronecker::LaurentPolynomial data_laurent(const std::string& name) {
    kronecker::LaurentPolynomial f;
    for (const auto& l : data_lines(name)) {
        std::istringstream is(l);
        std::vector<std::int64_t> e;
        std::int64_t x;
        while (is >> x) e.push_back(x);
        f.dim = e.size();
        f.terms[e] += 1;
    }
    return f;
}

inline kronecker::ExponentVector ev(const kronecker::QuiverSpec& s,
                                    std::initializer_list<std::tuple<int, int, int, int>> entries) {
    kronecker::ExponentVector v(s.ambient_dim());
    for (auto [i, j, k, m] : entries) v[s.index(i, j, k)] += m;
    return v;
}

}  // namespace kt
