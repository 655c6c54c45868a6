#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gorenstein {

// Exact integer linear algebra. Integer results use int64 with every
// operation overflow-checked (ResourceError on overflow); rational steps use
// arbitrary-precision rationals.

using Int = std::int64_t;
using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;
using Rational = boost::multiprecision::cpp_rational;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int dot(const IntVector& a, const IntVector& b);

/// gcd of the absolute values; 0 for the zero vector.
Int gcd_of(const IntVector& v);
/// Divides by the gcd of the entries; returns that gcd (0 leaves v unchanged).
Int make_primitive(IntVector& v);

/// Row Hermite normal form of the lattice spanned by the rows: row i has its
/// first non-zero entry (positive) in column pivots[i], pivots increase, and
/// entries above a pivot are reduced into [0, pivot).
struct Hnf {
    IntMatrix rows;
    std::vector<std::size_t> pivots;
};
Hnf hermite_normal_form(IntMatrix rows);

/// Integer c with x = sum_i c_i rows_i, or nullopt when x is outside the lattice.
std::optional<IntVector> lattice_coordinates(const Hnf& hnf, const IntVector& x);

std::size_t rank(const IntMatrix& rows);
/// Bareiss fraction-free determinant of a square matrix.
Int determinant(IntMatrix m);
/// Index of the row lattice in its saturation: gcd of all maximal minors of a
/// full-row-rank matrix. nullopt when more than `guard` minors would be needed.
std::optional<Int> gcd_of_maximal_minors(const IntMatrix& rows, std::size_t guard = 200'000);

/// Primitive integer generator of the kernel of an (n-1) x n matrix of rank n-1.
IntVector kernel_vector(const IntMatrix& rows);

/// Inverse of a square non-singular matrix.
std::vector<std::vector<Rational>> inverse(const IntMatrix& m);

/// Unique solution of A y = b when A has full column rank; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_full_column_rank(const IntMatrix& a, const IntVector& b);

}  // namespace gorenstein
