#pragma once

// Matching fields induced by gradings, their cones, canonical tableaux and the SAGBI check.

#include "kronecker/hilbert.hpp"
#include "kronecker/kronecker_cone.hpp"
#include "kronecker/polytope.hpp"
#include "kronecker/semiinvariant.hpp"
#include "kronecker/toric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kronecker {

/// c^i_{jk} = k j (r2+1)^{i-1}.
Grading grading_c0(const QuiverSpec& spec);

/// C_0 with c^1_{1k} = k (r2+1)^n and c^1_{2k} = 2k (r2+1)^n. Needs r1 = 2.
Grading grading_c2(const QuiverSpec& spec);

/// Applies the C_2 replacement to an arbitrary grading (idempotent).
Grading replace_first_rows(Grading g);

using Subset = std::vector<int>;       // increasing, 1-based
using Permutation = std::vector<int>;  // 1-based images

struct MatchingField {
    int r = 0;
    int N = 0;
    std::map<Subset, Permutation> assignment;

    bool operator==(const MatchingField&) const = default;
};

std::vector<Subset> subsets(int N, int r);

/// Lambda_b(J) = (1 2) if |J ∩ {1..b}| = 1, identity otherwise.
MatchingField block_diagonal_mf(int b, int r, int N);

struct InducedField {
    std::optional<MatchingField> field;  // absent when some subset has tied maximal terms
    std::vector<Subset> ties;
};

/// For every subset J the permutation sigma maximising sum_t c(sigma(t), J_t) over the r x N view.
InducedField induced_matching_field(const Grading& c, const GrassmannianSpec& g);

/// Exponent (in ambient coordinates) of the chosen term of the minor on J: row sigma(t) meets
/// column J_t.
ExponentVector chosen_monomial(const MatchingField& mf, const GrassmannianSpec& g, const Subset& j);

Polytope mf_polytope(const MatchingField& mf, const GrassmannianSpec& g);
Cone mf_cone(const MatchingField& mf, const GrassmannianSpec& g);

/// C_1 ∩ C_2 for the fields the grading induces on both Grassmannians; absent if either is tied.
std::optional<Cone> matching_field_cone(const QuiverSpec& spec, const Grading& c);

struct CatalogEntry {
    Subset subset;
    ExponentVector exponent;
    std::vector<Label> column;  // top to bottom
};

/// Columns C_J sorted by the word of their labels.
struct ColumnCatalog {
    GrassmannianSpec grassmannian;
    std::vector<CatalogEntry> entries;
};

ColumnCatalog column_catalog(const MatchingField& mf, const GrassmannianSpec& g);

/// Lex-maximal multiplicities a (in catalog order) with sum a_J exp(C_J) = m, as a tableau of
/// a_J copies of each C_J in catalog order. Absent if m has no such factorisation.
std::optional<Tableau> canonical_tableau(const ExponentVector& m, const ColumnCatalog& catalog,
                                         std::size_t max_nodes = 10'000'000);

std::optional<LinkedPair> canonical_linked_pair(const ExponentVector& v, const ColumnCatalog& plus,
                                                const ColumnCatalog& minus, const QuiverSpec& spec);

/// Number of semi-standard tableaux with two columns of height r and entries in [1, N].
std::size_t count_two_column_ssyt(int r, int N);

/// Distinct products of two chosen monomials; equals count_two_column_ssyt when the degree-2
/// part of the matching-field algebra has the Plücker dimension.
std::size_t count_degree_two_products(const MatchingField& mf, const GrassmannianSpec& g);

struct PipelineOptions {
    HilbertOptions hilbert;
    ExpandOptions expand;
    /// Generators above this height are not expanded (recorded as unchecked).
    std::int64_t verify_max_degree = 1'000'000;
    std::size_t fallback_cap = 20'000;
    EnumerationLimits limits;
};

struct GeneratorStatus {
    ExponentVector exponent;
    std::int64_t degree = 0;
    std::optional<LinkedPair> pair;
    bool checked = false;
    bool lm_verified = false;
    bool fallback_used = false;
};

struct PipelineReport {
    QuiverSpec spec;
    bool coherent_minus = false;  // Gr(r1, n r2)
    bool coherent_plus = false;   // Gr(r2, n r1)
    std::optional<MatchingField> field_minus, field_plus;
    std::optional<Cone> cone;
    std::optional<HilbertBasis> hilbert;
    std::vector<GeneratorStatus> generators;
    std::optional<Polytope> polytope;
    std::optional<FanRays> fan;
    std::optional<ToricReport> toric;
    bool polytope_vertices_integral = false;
    std::size_t polytope_lattice_points = 0;
    /// Assumptions taken from the literature rather than verified here.
    std::vector<std::string> assumptions;
    /// Degree-2 Hilbert function agreement on each Grassmannian.
    bool degree_two_evidence_minus = false;
    bool degree_two_evidence_plus = false;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    bool all_verified() const;
};

PipelineReport sagbi_pipeline(const QuiverSpec& spec, const Grading& c, const PipelineOptions& options = {});

}  // namespace kronecker
