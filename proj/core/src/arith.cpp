#include "kronecker/arith.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace kronecker {

Integer dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    }
    return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0) s += Rational(a[i]) * b[i];
    }
    return s;
}

Integer content(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) {
        if (x != 0) g = gcd(g, abs(x));
        if (g == 1) break;
    }
    return g;
}

IntVector make_primitive(IntVector v) {
    Integer g = content(v);
    if (g > 1) {
        for (auto& x : v) x /= g;
    }
    return v;
}

IntVector primitive_on_ray(const RatVector& v) {
    Integer l = 1;
    for (const auto& q : v) {
        Integer d = denominator(q);
        l = lcm(l, d);
    }
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = numerator(v[i]) * (l / denominator(v[i]));
    }
    return make_primitive(std::move(out));
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVector to_integer(const std::vector<std::int64_t>& v) {
    IntVector out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(x);
    return out;
}

std::vector<std::int64_t> to_int64(const IntVector& v) {
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (x > std::numeric_limits<std::int64_t>::max() ||
            x < std::numeric_limits<std::int64_t>::min()) {
            throw std::overflow_error("integer does not fit in 64 bits: " + x.str());
        }
        out.push_back(x.convert_to<std::int64_t>());
    }
    return out;
}

RatVector to_rational(const IntVector& v) {
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

IntMatrix transpose(const IntMatrix& m, std::size_t cols) {
    IntMatrix t(cols, IntVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    }
    return t;
}

IntVector mat_vec(const IntMatrix& m, const IntVector& v) {
    IntVector out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
    return out;
}

std::size_t rank(const IntMatrix& rows) {
    if (rows.empty()) return 0;
    IntMatrix m = rows;
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

RatMatrix row_echelon(RatMatrix m) {
    if (m.empty()) return m;
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

std::size_t rank(const RatMatrix& rows) { return row_echelon(rows).size(); }

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
    if (a.empty()) {
        for (const auto& x : b) {
            if (x != 0) return std::nullopt;
        }
        return RatVector{};
    }
    const std::size_t cols = a.front().size();
    RatMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    aug = row_echelon(std::move(aug));
    RatVector x(cols, Rational(0));
    for (const auto& row : aug) {
        std::size_t lead = 0;
        while (lead <= cols && row[lead] == 0) ++lead;
        if (lead == cols) return std::nullopt;  // 0 = nonzero
        x[lead] = row[cols];
    }
    return x;
}

namespace {

// Column operation acting on columns c1, c2 of both w and u so that w[row][c2] becomes 0.
void gcd_columns(IntMatrix& w, IntMatrix& u, std::size_t row, std::size_t c1, std::size_t c2) {
    Integer a = w[row][c1];
    Integer b = w[row][c2];
    if (b == 0) return;
    if (a == 0) {
        for (auto& r : w) std::swap(r[c1], r[c2]);
        for (auto& r : u) std::swap(r[c1], r[c2]);
        return;
    }
    if (b % a == 0) {
        Integer q = b / a;
        for (auto& r : w) r[c2] -= q * r[c1];
        for (auto& r : u) r[c2] -= q * r[c1];
        return;
    }
    // extended gcd
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    Integer g = old_r;
    Integer x = old_s, y = old_t;
    if (g < 0) {
        g = -g;
        x = -x;
        y = -y;
    }
    Integer ag = a / g, bg = b / g;
    auto apply = [&](IntMatrix& m) {
        for (auto& rr : m) {
            Integer p = rr[c1], q = rr[c2];
            rr[c1] = x * p + y * q;
            rr[c2] = -bg * p + ag * q;
        }
    };
    apply(w);
    apply(u);
}

}  // namespace

IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols) {
    IntMatrix w = a;
    IntMatrix u(cols, IntVector(cols, Integer(0)));
    for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
    std::size_t pivot = 0;
    for (std::size_t row = 0; row < w.size() && pivot < cols; ++row) {
        for (std::size_t c = pivot + 1; c < cols; ++c) {
            if (w[row][c] != 0) gcd_columns(w, u, row, pivot, c);
        }
        if (w[row][pivot] != 0) ++pivot;
    }
    IntMatrix basis;
    for (std::size_t c = pivot; c < cols; ++c) {
        IntVector v(cols);
        for (std::size_t r = 0; r < cols; ++r) v[r] = u[r][c];
        basis.push_back(std::move(v));
    }
    basis = lll_reduce(std::move(basis));
    for (auto& b : basis) {
        // orient with first nonzero entry positive
        for (const auto& x : b) {
            if (x != 0) {
                if (x < 0) {
                    for (auto& y : b) y = -y;
                }
                break;
            }
        }
    }
    return basis;
}

IntMatrix lll_reduce(IntMatrix b) {
    const std::size_t k = b.size();
    if (k < 2) return b;
    RatMatrix star(k);
    std::vector<Rational> norm(k);
    RatMatrix mu(k, RatVector(k, Rational(0)));
    auto gram_schmidt = [&]() {
        for (std::size_t i = 0; i < k; ++i) {
            star[i] = to_rational(b[i]);
            for (std::size_t j = 0; j < i; ++j) {
                mu[i][j] = norm[j] == 0 ? Rational(0) : dot(b[i], star[j]) / norm[j];
                for (std::size_t t = 0; t < star[i].size(); ++t) star[i][t] -= mu[i][j] * star[j][t];
            }
            norm[i] = dot(star[i], star[i]);
        }
    };
    gram_schmidt();
    const Rational delta(3, 4);
    std::size_t i = 1;
    while (i < k) {
        for (std::size_t j = i; j-- > 0;) {
            const Integer q = floor_div(mu[i][j] + Rational(1, 2));
            if (q == 0) continue;
            for (std::size_t t = 0; t < b[i].size(); ++t) b[i][t] -= q * b[j][t];
            for (std::size_t l = 0; l <= j; ++l) mu[i][l] -= Rational(q) * (l == j ? Rational(1) : mu[j][l]);
        }
        if (norm[i] >= (delta - mu[i][i - 1] * mu[i][i - 1]) * norm[i - 1]) {
            ++i;
        } else {
            std::swap(b[i], b[i - 1]);
            gram_schmidt();
            i = std::max<std::size_t>(i - 1, 1);
        }
    }
    return b;
}

IntMatrix saturated_span_basis(const IntMatrix& vectors, std::size_t dim) {
    IntMatrix orth = integer_kernel(vectors, dim);
    if (orth.empty()) {
        IntMatrix id(dim, IntVector(dim, Integer(0)));
        for (std::size_t i = 0; i < dim; ++i) id[i][i] = 1;
        return id;
    }
    return integer_kernel(orth, dim);
}

SmithForm smith_normal_form(const IntMatrix& input, std::size_t rows, std::size_t cols) {
    IntMatrix a = input;
    IntMatrix u(rows, IntVector(rows, Integer(0)));
    IntMatrix v(cols, IntVector(cols, Integer(0)));
    for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;
    for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& r : a) std::swap(r[i], r[j]);
        for (auto& r : v) std::swap(r[i], r[j]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Integer& f) {  // row dst += f row src
        for (std::size_t c = 0; c < cols; ++c) a[dst][c] += f * a[src][c];
        for (std::size_t c = 0; c < rows; ++c) u[dst][c] += f * u[src][c];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Integer& f) {
        for (auto& r : a) r[dst] += f * r[src];
        for (auto& r : v) r[dst] += f * r[src];
    };

    const std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // pivot: smallest nonzero |entry| in the trailing block
            bool found = false;
            std::size_t pi = t, pj = t;
            Integer best = 0;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    if (a[i][j] != 0 && (!found || abs(a[i][j]) < best)) {
                        best = abs(a[i][j]);
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            }
            if (!found) break;
            if (pi != t) swap_rows(pi, t);
            if (pj != t) swap_cols(pj, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Integer q = a[i][t] / a[t][t];
                add_row(i, t, -q);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Integer q = a[t][j] / a[t][t];
                add_col(j, t, -q);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility condition
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(t, i, Integer(1));
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
        if (a[t][t] < 0) {
            for (std::size_t c = 0; c < cols; ++c) a[t][c] = -a[t][c];
            for (std::size_t c = 0; c < rows; ++c) u[t][c] = -u[t][c];
        }
    }
    SmithForm out;
    out.u = std::move(u);
    out.v = std::move(v);
    out.diagonal.resize(n);
    for (std::size_t t = 0; t < n; ++t) out.diagonal[t] = a[t][t];
    return out;
}

Integer determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

Integer floor_div(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);  // d > 0
    Integer f = n / d;
    if (n % d != 0 && n < 0) f -= 1;
    return f;
}

Integer ceil_div(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);
    Integer f = n / d;
    if (n % d != 0 && n > 0) f += 1;
    return f;
}

}  // namespace kronecker
