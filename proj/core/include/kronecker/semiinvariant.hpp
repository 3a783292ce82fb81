#pragma once

// Semi-invariants f_T of linked pairs, expanded as signed sums over the Weyl orbit.

#include "kronecker/arith.hpp"
#include "kronecker/errors.hpp"
#include "kronecker/tableaux.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

namespace kronecker {

struct SemiInvariant {
    QuiverSpec spec;
    std::int64_t degree = 0;
    std::map<ExponentVector, Integer> terms;  // nonzero coefficients only

    /// Character (-alpha1, alpha2): the column counts a lcm / r1 of T- and a lcm / r2 of T+.
    /// For coprime r1, r2 this is (-a r2, a r1).
    std::pair<std::int64_t, std::int64_t> weight() const {
        return {-degree * (spec.lcm() / spec.r1), degree * (spec.lcm() / spec.r2)};
    }
    bool empty() const { return terms.empty(); }
};

struct ExpandOptions {
    std::size_t max_orbit = 50'000'000;
    /// Column-determinant evaluation instead of streaming the orbit; must agree exactly.
    bool factorized = false;
};

/// (r1!)^{alpha1} (r2!)^{alpha2}, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> orbit_size(const LinkedPair& pair, const QuiverSpec& spec);

SemiInvariant expand(const LinkedPair& pair, const QuiverSpec& spec, const ExpandOptions& options = {});

struct Grading {
    QuiverSpec spec;
    IntVector c;  // indexed like ExponentVector
};

Integer grading_value(const ExponentVector& v, const Grading& c);

struct LeadingMonomial {
    ExponentVector exponent;
    bool unique = true;
};

/// Term of maximal grading; ties are reported through `unique`, never broken silently.
LeadingMonomial leading_monomial(const SemiInvariant& f, const Grading& c);

bool verify_lm(const LinkedPair& pair, const QuiverSpec& spec, const Grading& c,
               const ExpandOptions& options = {});

struct GroupElement {
    RatMatrix g1;  // r1 x r1
    RatMatrix g2;  // r2 x r2
};

/// Value of f at the representation (A_1, ..., A_n), each A_i an r2 x r1 matrix.
Rational evaluate(const SemiInvariant& f, const std::vector<RatMatrix>& a);

/// (g1, g2) . A_i = g2 A_i g1^{-1}.
std::vector<RatMatrix> act(const GroupElement& g, const std::vector<RatMatrix>& a);

/// Checks f(g . A) = det(g1)^{-alpha1} det(g2)^{alpha2} f(A) at `samples` random rational A.
/// Throws PreconditionError for a singular group element.
bool semi_invariance_check(const SemiInvariant& f, const GroupElement& g, std::size_t samples,
                           std::uint64_t seed = 1);

Rational determinant(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

}  // namespace kronecker
