#include "kronecker/semiinvariant.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

namespace kronecker {

namespace {

struct Perm {
    std::vector<int> image;  // 0-based
    int sign = 1;
};

std::vector<Perm> all_perms(int r) {
    std::vector<int> p(static_cast<std::size_t>(r));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do {
        int inversions = 0;
        for (int a = 0; a < r; ++a) {
            for (int b = a + 1; b < r; ++b) {
                if (p[static_cast<std::size_t>(a)] > p[static_cast<std::size_t>(b)]) ++inversions;
            }
        }
        out.push_back(Perm{p, inversions % 2 == 0 ? 1 : -1});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

struct OrbitData {
    std::vector<Perm> perms1, perms2;
    std::size_t minus_cols = 0, plus_cols = 0;
    std::vector<std::vector<const Atom*>> by_plus_col;
};

OrbitData orbit_data(const LinkedPair& pair, const QuiverSpec& spec) {
    OrbitData d;
    d.perms1 = all_perms(spec.r1);
    d.perms2 = all_perms(spec.r2);
    d.minus_cols = pair.minus_columns();
    d.plus_cols = pair.plus_columns();
    d.by_plus_col.resize(d.plus_cols);
    for (const auto& a : pair.atoms) d.by_plus_col[a.plus_col].push_back(&a);
    return d;
}

// Variable indices hit by plus column c under column permutation rho and minus permutations tau.
std::vector<std::size_t> column_vars(const OrbitData& d, const QuiverSpec& spec, std::size_t c,
                                     const Perm& rho, const std::vector<std::size_t>& tau) {
    std::vector<std::size_t> vars;
    for (const Atom* a : d.by_plus_col[c]) {
        const int j = rho.image[a->plus_row] + 1;
        const int k = d.perms1[tau[a->minus_col]].image[a->minus_row] + 1;
        vars.push_back(spec.index(a->arrow, j, k));
    }
    return vars;
}

// Odometer over tuples with `count` entries in [0, base); returns false after the last one.
bool advance(std::vector<std::size_t>& digits, std::size_t base) {
    for (auto& x : digits) {
        if (++x < base) return true;
        x = 0;
    }
    return false;
}

// Streams every orbit element once. The monomial key is updated in place when the odometer
// moves a plus column to its next permutation; bump(key, var, +-1) edits one exponent.
template <class Key, class Hash, class Bump>
void stream_orbit(const QuiverSpec& spec, const OrbitData& d, const Key& zero, Bump bump,
                  std::unordered_map<Key, std::int64_t, Hash>& acc) {
    std::vector<std::size_t> tau(d.minus_cols, 0);
    const std::size_t nrho = d.perms2.size();
    do {
        int sign_tau = 1;
        for (auto t : tau) sign_tau *= d.perms1[t].sign;
        std::vector<std::vector<std::vector<std::size_t>>> deltas(d.plus_cols);
        for (std::size_t c = 0; c < d.plus_cols; ++c) {
            for (const auto& rho : d.perms2) deltas[c].push_back(column_vars(d, spec, c, rho, tau));
        }
        Key key = zero;
        for (std::size_t c = 0; c < d.plus_cols; ++c) {
            for (auto v : deltas[c][0]) bump(key, v, 1);
        }
        std::vector<std::size_t> rho(d.plus_cols, 0);
        int sign_rho = 1;
        while (true) {
            acc[key] += sign_tau * sign_rho;
            std::size_t c = 0;
            for (; c < d.plus_cols; ++c) {
                const std::size_t old = rho[c];
                const std::size_t next = old + 1 == nrho ? 0 : old + 1;
                for (auto v : deltas[c][old]) bump(key, v, -1);
                for (auto v : deltas[c][next]) bump(key, v, 1);
                sign_rho *= d.perms2[old].sign * d.perms2[next].sign;
                rho[c] = next;
                if (next != 0) break;
            }
            if (c == d.plus_cols) break;
        }
    } while (advance(tau, d.perms1.size()));
}

using Packed = unsigned __int128;

struct PackedHash {
    std::size_t operator()(Packed k) const {
        const auto lo = static_cast<std::uint64_t>(k), hi = static_cast<std::uint64_t>(k >> 64);
        return std::hash<std::uint64_t>()(lo * 0x9E3779B97F4A7C15ULL ^ hi);
    }
};

SemiInvariant expand_streaming(const LinkedPair& pair, const QuiverSpec& spec, const OrbitData& d) {
    SemiInvariant f{spec, degree(pair, spec), {}};
    const std::size_t dim = spec.ambient_dim();
    const std::size_t cells = pair.plus.cell_count();
    std::size_t bits = 1;
    while ((std::size_t{1} << bits) <= cells) ++bits;
    if (dim * bits <= 128) {
        // Exponents packed into one 128-bit word, `bits` per variable.
        std::unordered_map<Packed, std::int64_t, PackedHash> acc;
        stream_orbit(spec, d, Packed{0},
                     [bits](Packed& k, std::size_t v, int delta) {
                         const Packed unit = static_cast<Packed>(1) << (v * bits);
                         if (delta > 0) k += unit;
                         else k -= unit;
                     },
                     acc);
        const Packed mask = (static_cast<Packed>(1) << bits) - 1;
        for (const auto& [k, coef] : acc) {
            if (coef == 0) continue;
            ExponentVector v(dim);
            for (std::size_t t = 0; t < dim; ++t) v[t] = static_cast<std::int64_t>((k >> (t * bits)) & mask);
            f.terms.emplace(std::move(v), Integer(coef));
        }
        return f;
    }
    std::unordered_map<std::u16string, std::int64_t, std::hash<std::u16string>> acc;
    stream_orbit(spec, d, std::u16string(dim, u'\0'),
                 [](std::u16string& k, std::size_t v, int delta) {
                     k[v] = static_cast<char16_t>(k[v] + delta);
                 },
                 acc);
    for (const auto& [k, coef] : acc) {
        if (coef == 0) continue;
        ExponentVector v(dim);
        for (std::size_t t = 0; t < dim; ++t) v[t] = static_cast<std::int64_t>(k[t]);
        f.terms.emplace(std::move(v), Integer(coef));
    }
    return f;
}

using Poly = std::map<ExponentVector, Integer>;

Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Integer& slot = out[ea + eb];
            slot += ca * cb;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

SemiInvariant expand_factorized(const LinkedPair& pair, const QuiverSpec& spec, const OrbitData& d) {
    SemiInvariant f{spec, degree(pair, spec), {}};
    const std::size_t dim = spec.ambient_dim();
    std::vector<std::size_t> tau(d.minus_cols, 0);
    do {
        int sign_tau = 1;
        for (auto t : tau) sign_tau *= d.perms1[t].sign;
        Poly prod{{ExponentVector(dim), Integer(sign_tau)}};
        for (std::size_t c = 0; c < d.plus_cols && !prod.empty(); ++c) {
            Poly col;
            for (const auto& rho : d.perms2) {
                ExponentVector e(dim);
                for (auto v : column_vars(d, spec, c, rho, tau)) ++e[v];
                col[e] += rho.sign;
            }
            prod = multiply(prod, col);
        }
        for (const auto& [e, coef] : prod) f.terms[e] += coef;
    } while (advance(tau, d.perms1.size()));
    for (auto it = f.terms.begin(); it != f.terms.end();) {
        it = it->second == 0 ? f.terms.erase(it) : std::next(it);
    }
    return f;
}

}  // namespace

std::optional<std::uint64_t> orbit_size(const LinkedPair& pair, const QuiverSpec& spec) {
    std::uint64_t f1 = 1, f2 = 1;
    for (int i = 2; i <= spec.r1; ++i) f1 *= static_cast<std::uint64_t>(i);
    for (int i = 2; i <= spec.r2; ++i) f2 *= static_cast<std::uint64_t>(i);
    unsigned __int128 total = 1;
    for (std::size_t c = 0; c < pair.minus_columns(); ++c) {
        total *= f1;
        if (total > UINT64_MAX) return std::nullopt;
    }
    for (std::size_t c = 0; c < pair.plus_columns(); ++c) {
        total *= f2;
        if (total > UINT64_MAX) return std::nullopt;
    }
    return static_cast<std::uint64_t>(total);
}

SemiInvariant expand(const LinkedPair& pair, const QuiverSpec& spec, const ExpandOptions& options) {
    if (pair.atoms.size() != pair.plus.cell_count()) throw ShapeError("linked pair has an incomplete link");
    const auto size = orbit_size(pair, spec);
    if (!size || *size > options.max_orbit) {
        throw ResourceLimitError("max_orbit", options.max_orbit, 0);
    }
    if (pair.plus.empty()) {
        SemiInvariant f{spec, 0, {}};
        f.terms.emplace(ExponentVector(spec.ambient_dim()), Integer(1));
        return f;
    }
    const OrbitData d = orbit_data(pair, spec);
    return options.factorized ? expand_factorized(pair, spec, d) : expand_streaming(pair, spec, d);
}

Integer grading_value(const ExponentVector& v, const Grading& c) {
    if (v.size() != c.c.size()) throw ShapeError("grading and exponent vector have different lengths");
    Integer s = 0;
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (v[t] != 0) s += c.c[t] * v[t];
    }
    return s;
}

LeadingMonomial leading_monomial(const SemiInvariant& f, const Grading& c) {
    if (f.terms.empty()) throw std::invalid_argument("leading monomial of the zero polynomial");
    LeadingMonomial lm;
    Integer best;
    bool first = true;
    for (const auto& [e, coef] : f.terms) {
        const Integer g = grading_value(e, c);
        if (first || g > best) {
            best = g;
            lm.exponent = e;
            lm.unique = true;
            first = false;
        } else if (g == best) {
            lm.unique = false;
        }
    }
    return lm;
}

bool verify_lm(const LinkedPair& pair, const QuiverSpec& spec, const Grading& c, const ExpandOptions& options) {
    const SemiInvariant f = expand(pair, spec, options);
    if (f.empty()) return false;
    const LeadingMonomial lm = leading_monomial(f, c);
    return lm.unique && lm.exponent == mon_plus(pair.plus, spec);
}

Rational determinant(const RatMatrix& input) {
    RatMatrix m = input;
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t t = col; t < n; ++t) m[r][t] -= f * m[col][t];
        }
    }
    return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& input) {
    const std::size_t n = input.size();
    RatMatrix m = input;
    RatMatrix inv(n, RatVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        const Rational p = m[col][col];
        for (std::size_t t = 0; t < n; ++t) {
            m[col][t] /= p;
            inv[col][t] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t t = 0; t < n; ++t) {
                m[r][t] -= f * m[col][t];
                inv[r][t] -= f * inv[col][t];
            }
        }
    }
    return inv;
}

namespace {

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b.front().size();
    RatMatrix out(n, RatVector(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    }
    return out;
}

}  // namespace

Rational evaluate(const SemiInvariant& f, const std::vector<RatMatrix>& a) {
    const QuiverSpec& s = f.spec;
    if (a.size() != static_cast<std::size_t>(s.n)) throw ShapeError("representation needs one matrix per arrow");
    RatVector x(s.ambient_dim());
    for (int i = 1; i <= s.n; ++i) {
        const auto& m = a[static_cast<std::size_t>(i - 1)];
        if (m.size() != static_cast<std::size_t>(s.r2)) throw ShapeError("arrow matrices are r2 x r1");
        for (int j = 1; j <= s.r2; ++j) {
            if (m[static_cast<std::size_t>(j - 1)].size() != static_cast<std::size_t>(s.r1)) {
                throw ShapeError("arrow matrices are r2 x r1");
            }
            for (int k = 1; k <= s.r1; ++k) {
                x[s.index(i, j, k)] = m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
            }
        }
    }
    Rational total = 0;
    for (const auto& [e, coef] : f.terms) {
        Rational term(coef);
        for (std::size_t t = 0; t < e.size(); ++t) {
            for (std::int64_t p = 0; p < e[t]; ++p) term *= x[t];
        }
        total += term;
    }
    return total;
}

std::vector<RatMatrix> act(const GroupElement& g, const std::vector<RatMatrix>& a) {
    const auto g1inv = inverse(g.g1);
    if (!g1inv || determinant(g.g2) == 0) throw PreconditionError("group element is not invertible");
    std::vector<RatMatrix> out;
    for (const auto& m : a) out.push_back(matmul(matmul(g.g2, m), *g1inv));
    return out;
}

bool semi_invariance_check(const SemiInvariant& f, const GroupElement& g, std::size_t samples, std::uint64_t seed) {
    const QuiverSpec& s = f.spec;
    if (g.g1.size() != static_cast<std::size_t>(s.r1) || g.g2.size() != static_cast<std::size_t>(s.r2)) {
        throw ShapeError("group element has the wrong size");
    }
    const Rational d1 = determinant(g.g1), d2 = determinant(g.g2);
    if (d1 == 0 || d2 == 0) throw PreconditionError("group element is not invertible");
    const std::int64_t alpha1 = -f.weight().first, alpha2 = f.weight().second;
    Rational factor = 1;
    for (std::int64_t t = 0; t < alpha1; ++t) factor /= d1;
    for (std::int64_t t = 0; t < alpha2; ++t) factor *= d2;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (std::size_t sample = 0; sample < samples; ++sample) {
        std::vector<RatMatrix> a(static_cast<std::size_t>(s.n),
                                 RatMatrix(static_cast<std::size_t>(s.r2), RatVector(static_cast<std::size_t>(s.r1))));
        for (auto& m : a) {
            for (auto& row : m) {
                for (auto& x : row) x = Rational(num(rng), den(rng));
            }
        }
        if (evaluate(f, act(g, a)) != factor * evaluate(f, a)) return false;
    }
    return true;
}

}  // namespace kronecker
