#pragma once

// Laurent polynomials attached to fans with terminal spanning polytopes, and their periods.

#include "kronecker/toric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kronecker {

struct LaurentPolynomial {
    std::size_t dim = 0;
    std::map<std::vector<std::int64_t>, Integer> terms;  // nonzero coefficients only

    static LaurentPolynomial constant(std::size_t dim, const Integer& c);
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    Integer constant_term() const;
};

struct MirrorResult {
    std::optional<LaurentPolynomial> polynomial;
    std::string unsupported;  // reason when no polynomial is produced
};

/// Coefficient 1 on every vertex of conv(rays), provided the fan's toric variety is terminal
/// Fano. Throws PreconditionError for an incomplete fan.
MirrorResult laurent_from_rays(const FanRays& f, const EnumerationLimits& limits = {});

/// c_0, ..., c_{N-1} with c_k the constant term of f^k.
std::vector<Integer> classical_period(const LaurentPolynomial& f, std::size_t N,
                                      std::size_t max_terms = 50'000'000);

/// Constant terms of f^k by repeated full multiplication (reference route).
std::vector<Integer> classical_period_direct(const LaurentPolynomial& f, std::size_t N);

struct NewtonInvariants {
    std::size_t dim = 0;            // dimension of the Newton polytope
    std::size_t vertices = 0;
    std::size_t lattice_points = 0;
    bool degenerate = false;        // not full-dimensional
    bool reflexive = false;
    bool terminal = false;
    std::optional<Rational> normalized_volume;
};

NewtonInvariants newton_invariants(const LaurentPolynomial& f, const EnumerationLimits& limits = {});

/// Exponents mapped by x -> x * U (U square, rows are images of the basis vectors).
LaurentPolynomial change_basis(const LaurentPolynomial& f, const IntMatrix& u);

}  // namespace kronecker
