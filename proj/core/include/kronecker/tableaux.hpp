#pragma once

// Double-labelled tableaux and linked pairs.
//
// A plus-side tableau T+ has r2 rows and labels (i, k) with k <= r1; the label (i, k) in
// row j stands for x^i_{jk}. A minus-side tableau T- has r1 rows and labels (i, j) with
// j <= r2; the label (i, j) in row k stands for x^i_{jk}. A linked pair matches every cell
// of T+ with a cell of T- carrying the same variable.

#include "kronecker/errors.hpp"
#include "kronecker/quiver.hpp"

#include <optional>
#include <vector>

namespace kronecker {

enum class Side { plus, minus };

class Tableau {
public:
    Tableau() = default;
    /// Throws ShapeError if ragged. Rows of length zero collapse to the empty tableau.
    explicit Tableau(std::vector<std::vector<Label>> rows);

    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return rows_.empty() ? 0 : rows_.front().size(); }
    std::size_t cell_count() const { return row_count() * col_count(); }
    bool empty() const { return cell_count() == 0; }

    const std::vector<std::vector<Label>>& rows() const { return rows_; }
    const Label& at(std::size_t row, std::size_t col) const { return rows_[row][col]; }

    std::vector<Label> column(std::size_t col) const;

    bool operator==(const Tableau&) const = default;

private:
    std::vector<std::vector<Label>> rows_;
};

/// Rows weakly increasing, columns strictly increasing (lex order on labels).
bool is_semistandard(const Tableau& t);

ExponentVector mon_plus(const Tableau& t, const QuiverSpec& spec);
ExponentVector mon_minus(const Tableau& t, const QuiverSpec& spec);
ExponentVector monomial(const Tableau& t, Side side, const QuiverSpec& spec);

/// One matched pair of cells; positions are 0-based (row, column).
struct Atom {
    int arrow = 0;
    std::size_t plus_row = 0, plus_col = 0;
    std::size_t minus_row = 0, minus_col = 0;
    bool operator==(const Atom&) const = default;
};

struct LinkedPair {
    Tableau plus;
    Tableau minus;
    std::vector<Atom> atoms;

    /// Columns of T- (alpha_1) and of T+ (alpha_2).
    std::size_t minus_columns() const { return minus.col_count(); }
    std::size_t plus_columns() const { return plus.col_count(); }
    bool semistandard() const { return is_semistandard(plus) && is_semistandard(minus); }

    bool operator==(const LinkedPair&) const = default;
};

/// Links two tableaux with equal monomials, matching cells of each variable class in
/// row-major reading order. Returns nullopt when the monomials differ.
std::optional<LinkedPair> build_linked_pair(const Tableau& plus, const Tableau& minus,
                                            const QuiverSpec& spec);

/// Exponent vector of the pair (that of T+).
ExponentVector exponent(const LinkedPair& pair, const QuiverSpec& spec);

/// Height of the pair: cell count / lcm(r1, r2).
std::int64_t degree(const LinkedPair& pair, const QuiverSpec& spec);

struct ReconstructedPair {
    LinkedPair pair;
    bool semistandard = false;
};

/// The unique pair with weakly increasing rows realising v, when the row sums of v allow it.
std::optional<ReconstructedPair> pair_from_exponent(const ExponentVector& v, const QuiverSpec& spec);

/// All semi-standard linked pairs of the given height, ordered by exponent vector. Uses the
/// lattice points of the Kronecker cone.
std::vector<LinkedPair> enumerate_pairs_at_height(const QuiverSpec& spec, std::int64_t h,
                                                  const EnumerationLimits& limits = {});

/// Same set computed by filling semi-standard plus-side tableaux cell by cell.
std::vector<LinkedPair> enumerate_pairs_backtracking(const QuiverSpec& spec, std::int64_t h,
                                                     std::size_t max_results = 50'000'000);

}  // namespace kronecker
