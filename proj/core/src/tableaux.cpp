#include "kronecker/tableaux.hpp"

#include "kronecker/errors.hpp"
#include "kronecker/kronecker_cone.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace kronecker {

Tableau::Tableau(std::vector<std::vector<Label>> rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        if (r.size() != rows_.front().size()) throw ShapeError("tableau rows must have equal length");
    }
    if (!rows_.empty() && rows_.front().empty()) rows_.clear();  // one empty tableau, whatever the row count
}

std::vector<Label> Tableau::column(std::size_t col) const {
    std::vector<Label> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r[col]);
    return out;
}

bool is_semistandard(const Tableau& t) {
    for (std::size_t r = 0; r < t.row_count(); ++r) {
        for (std::size_t c = 0; c < t.col_count(); ++c) {
            if (c > 0 && t.at(r, c) < t.at(r, c - 1)) return false;
            if (r > 0 && !(t.at(r - 1, c) < t.at(r, c))) return false;
        }
    }
    return true;
}

ExponentVector monomial(const Tableau& t, Side side, const QuiverSpec& spec) {
    ExponentVector v(spec.ambient_dim());
    if (t.empty()) return v;
    const int rows = side == Side::plus ? spec.r2 : spec.r1;
    const int second_max = side == Side::plus ? spec.r1 : spec.r2;
    if (static_cast<int>(t.row_count()) != rows) {
        throw ShapeError(std::string(side == Side::plus ? "plus" : "minus") + "-side tableau needs " +
                         std::to_string(rows) + " rows");
    }
    for (std::size_t r = 0; r < t.row_count(); ++r) {
        for (const Label& l : t.rows()[r]) {
            if (l.first < 1 || l.first > spec.n || l.second < 1 || l.second > second_max) {
                throw LabelError("label (" + std::to_string(l.first) + "," + std::to_string(l.second) +
                                 ") out of range");
            }
            const int row = static_cast<int>(r) + 1;
            if (side == Side::plus) ++v[spec.index(l.first, row, l.second)];
            else ++v[spec.index(l.first, l.second, row)];
        }
    }
    return v;
}

ExponentVector mon_plus(const Tableau& t, const QuiverSpec& spec) { return monomial(t, Side::plus, spec); }

ExponentVector mon_minus(const Tableau& t, const QuiverSpec& spec) { return monomial(t, Side::minus, spec); }

std::optional<LinkedPair> build_linked_pair(const Tableau& plus, const Tableau& minus,
                                            const QuiverSpec& spec) {
    if (plus.cell_count() != minus.cell_count()) throw ShapeError("linked tableaux need equal cell counts");
    if (!plus.empty() && static_cast<int>(plus.row_count()) != spec.r2) throw ShapeError("plus tableau needs r2 rows");
    if (!minus.empty() && static_cast<int>(minus.row_count()) != spec.r1) throw ShapeError("minus tableau needs r1 rows");
    if (mon_plus(plus, spec) != mon_minus(minus, spec)) return std::nullopt;

    std::map<std::size_t, std::deque<std::pair<std::size_t, std::size_t>>> minus_cells;
    for (std::size_t k = 0; k < minus.row_count(); ++k) {
        for (std::size_t c = 0; c < minus.col_count(); ++c) {
            const Label& l = minus.at(k, c);
            minus_cells[spec.index(l.first, l.second, static_cast<int>(k) + 1)].emplace_back(k, c);
        }
    }
    LinkedPair pair{plus, minus, {}};
    for (std::size_t j = 0; j < plus.row_count(); ++j) {
        for (std::size_t c = 0; c < plus.col_count(); ++c) {
            const Label& l = plus.at(j, c);
            auto& queue = minus_cells[spec.index(l.first, static_cast<int>(j) + 1, l.second)];
            auto [k, cm] = queue.front();
            queue.pop_front();
            pair.atoms.push_back(Atom{l.first, j, c, k, cm});
        }
    }
    return pair;
}

ExponentVector exponent(const LinkedPair& pair, const QuiverSpec& spec) { return mon_plus(pair.plus, spec); }

std::int64_t degree(const LinkedPair& pair, const QuiverSpec& spec) {
    return static_cast<std::int64_t>(pair.plus.cell_count()) / spec.lcm();
}

std::optional<ReconstructedPair> pair_from_exponent(const ExponentVector& v, const QuiverSpec& spec) {
    if (v.size() != spec.ambient_dim()) throw ShapeError("exponent vector has wrong length");
    for (auto x : v.values) {
        if (x < 0) return std::nullopt;
    }
    std::vector<std::int64_t> plus_sum(static_cast<std::size_t>(spec.r2), 0);
    std::vector<std::int64_t> minus_sum(static_cast<std::size_t>(spec.r1), 0);
    for (int i = 1; i <= spec.n; ++i) {
        for (int j = 1; j <= spec.r2; ++j) {
            for (int k = 1; k <= spec.r1; ++k) {
                const auto x = v[spec.index(i, j, k)];
                plus_sum[static_cast<std::size_t>(j - 1)] += x;
                minus_sum[static_cast<std::size_t>(k - 1)] += x;
            }
        }
    }
    for (auto s : plus_sum) {
        if (s != plus_sum.front()) return std::nullopt;
    }
    for (auto s : minus_sum) {
        if (s != minus_sum.front()) return std::nullopt;
    }
    std::vector<std::vector<Label>> plus_rows(static_cast<std::size_t>(spec.r2));
    std::vector<std::vector<Label>> minus_rows(static_cast<std::size_t>(spec.r1));
    for (int j = 1; j <= spec.r2; ++j) {
        for (int i = 1; i <= spec.n; ++i) {
            for (int k = 1; k <= spec.r1; ++k) {
                for (std::int64_t c = 0; c < v[spec.index(i, j, k)]; ++c) {
                    plus_rows[static_cast<std::size_t>(j - 1)].push_back(Label{i, k});
                }
            }
        }
    }
    for (int k = 1; k <= spec.r1; ++k) {
        for (int i = 1; i <= spec.n; ++i) {
            for (int j = 1; j <= spec.r2; ++j) {
                for (std::int64_t c = 0; c < v[spec.index(i, j, k)]; ++c) {
                    minus_rows[static_cast<std::size_t>(k - 1)].push_back(Label{i, j});
                }
            }
        }
    }
    auto linked = build_linked_pair(Tableau(std::move(plus_rows)), Tableau(std::move(minus_rows)), spec);
    ReconstructedPair out{std::move(*linked), false};
    out.semistandard = out.pair.semistandard();
    return out;
}

std::vector<LinkedPair> enumerate_pairs_at_height(const QuiverSpec& spec, std::int64_t h,
                                                  const EnumerationLimits& limits) {
    if (h < 0) throw PreconditionError("height must be nonnegative");
    if (h == 0) return {LinkedPair{}};
    const Cone cone = double_description(kronecker_halfspaces(spec));
    std::vector<LinkedPair> out;
    for (const auto& p : lattice_points_at_height(cone, h, kronecker_height(spec), limits)) {
        auto rec = pair_from_exponent(ExponentVector(to_int64(p)), spec);
        if (!rec || !rec->semistandard) {
            throw std::logic_error("cone lattice point does not come from a semi-standard pair");
        }
        out.push_back(std::move(rec->pair));
    }
    return out;
}

std::vector<LinkedPair> enumerate_pairs_backtracking(const QuiverSpec& spec, std::int64_t h,
                                                     std::size_t max_results) {
    if (h < 0) throw PreconditionError("height must be nonnegative");
    if (h == 0) return {LinkedPair{}};
    const std::size_t cells = static_cast<std::size_t>(h) * static_cast<std::size_t>(spec.lcm());
    if (cells % static_cast<std::size_t>(spec.r2) != 0) return {};
    const std::size_t rows = static_cast<std::size_t>(spec.r2);
    const std::size_t cols = cells / rows;
    const int labels = spec.n * spec.r1;  // label (i, k) has index (i-1)*r1 + (k-1)
    // Each minus column has r1 distinct labels, at most r2 of them per arrow.
    if (spec.r1 > spec.n * spec.r2) return {};
    const int minus_cols = static_cast<int>(cells / static_cast<std::size_t>(spec.r1));
    const int arrow_max = minus_cols * spec.r2;
    const int arrow_min = minus_cols * std::max(0, spec.r1 - (spec.n - 1) * spec.r2);
    std::vector<int> arrow_count(static_cast<std::size_t>(spec.n), 0);
    std::vector<std::vector<int>> grid(rows, std::vector<int>(cols, 0));
    std::vector<std::pair<ExponentVector, LinkedPair>> found;

    std::function<void(std::size_t)> fill = [&](std::size_t cell) {
        if (cell == rows * cols) {
            std::vector<std::vector<Label>> plus_rows(rows);
            for (std::size_t r = 0; r < rows; ++r) {
                for (std::size_t c = 0; c < cols; ++c) {
                    plus_rows[r].push_back(Label{grid[r][c] / spec.r1 + 1, grid[r][c] % spec.r1 + 1});
                }
            }
            const ExponentVector v = mon_plus(Tableau(std::move(plus_rows)), spec);
            auto rec = pair_from_exponent(v, spec);
            if (rec && rec->semistandard) {
                found.emplace_back(v, std::move(rec->pair));
                if (found.size() > max_results) throw ResourceLimitError("max_results", max_results, found.size());
            }
            return;
        }
        const std::size_t r = cell / cols, c = cell % cols;
        int low = 0;
        if (c > 0) low = grid[r][c - 1];
        if (r > 0) low = std::max(low, grid[r - 1][c] + 1);
        // leave room for the strictly increasing column below
        const int high = labels - static_cast<int>(rows - r);
        const int remaining = static_cast<int>(rows * cols - cell - 1);
        for (int x = low; x <= high; ++x) {
            const auto a = static_cast<std::size_t>(x / spec.r1);
            if (arrow_count[a] == arrow_max) continue;
            ++arrow_count[a];
            int deficit = 0;
            for (int cnt : arrow_count) deficit += std::max(0, arrow_min - cnt);
            if (deficit <= remaining) {
                grid[r][c] = x;
                fill(cell + 1);
            }
            --arrow_count[a];
        }
    };
    fill(0);
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<LinkedPair> out;
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
}

}  // namespace kronecker
