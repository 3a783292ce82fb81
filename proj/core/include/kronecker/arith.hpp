#pragma once

// Exact integer and rational linear algebra used by every polyhedral routine.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kronecker {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;  // row-major
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const IntVector& a, const RatVector& b);

/// gcd of all entries (0 for the zero vector).
Integer content(const IntVector& v);

/// Divides by the content; the zero vector is returned unchanged.
IntVector make_primitive(IntVector v);

/// Clears denominators and returns the primitive integer vector on the same ray.
IntVector primitive_on_ray(const RatVector& v);

bool is_zero(const IntVector& v);

IntVector to_integer(const std::vector<std::int64_t>& v);
std::vector<std::int64_t> to_int64(const IntVector& v);  // throws if out of range
RatVector to_rational(const IntVector& v);

IntMatrix transpose(const IntMatrix& m, std::size_t cols);
IntVector mat_vec(const IntMatrix& m, const IntVector& v);

/// Rank over Q.
std::size_t rank(const IntMatrix& rows);
std::size_t rank(const RatMatrix& rows);

/// Row space basis (reduced row echelon form, nonzero rows only).
RatMatrix row_echelon(RatMatrix rows);

/// Solves A x = b over Q (A given by rows); returns any solution or nullopt.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Saturated basis of {x in Z^cols : A x = 0}. Basis vectors are rows of the result.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols);

/// LLL-reduced basis (delta = 3/4) of the lattice spanned by the independent rows of b.
IntMatrix lll_reduce(IntMatrix b);

/// Saturated lattice basis of span(vectors) ∩ Z^dim, as rows.
IntMatrix saturated_span_basis(const IntMatrix& vectors, std::size_t dim);

/// Smith normal form U * A * V = D with U, V unimodular.
struct SmithForm {
    IntMatrix u;                 // rows x rows
    IntMatrix v;                 // cols x cols
    std::vector<Integer> diagonal;  // length min(rows, cols), nonnegative, d_i | d_{i+1}
};
SmithForm smith_normal_form(const IntMatrix& a, std::size_t rows, std::size_t cols);

Integer determinant(IntMatrix m);  // square

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

Integer floor_div(const Rational& q);
Integer ceil_div(const Rational& q);

}  // namespace kronecker
