#pragma once

// Exact division, gcd, fraction-free linear algebra and resultants over
// Q[n, s(n), s(n+1), ...].

#include "ratrec/deadline.hpp"
#include "ratrec/multipoly.hpp"

#include <optional>
#include <vector>

namespace ratrec {

/// Quotient a / b if b divides a exactly, otherwise nullopt. b must be nonzero.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Normalized gcd (integer primitive, positive leading coefficient); gcd(0, 0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Gcd of the coefficients of p viewed as a polynomial in v (normalized).
MultiPoly content_in(const MultiPoly& p, VarId v);
/// p divided by content_in(p, v), sign-normalized.
MultiPoly primitive_part_in(const MultiPoly& p, VarId v);

/// Pseudo-remainder of f by g with respect to v (deg_v g > 0).
MultiPoly pseudo_remainder(const MultiPoly& f, const MultiPoly& g, VarId v);

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

struct RationalFunction {
  MultiPoly num;
  MultiPoly den;
};

/// Fraction-free (Bareiss) determinant.
MultiPoly determinant(PolyMatrix m);

/// Solves m x = b by fraction-free elimination. All components share the
/// denominator det(m) (sign fixed so its leading coefficient is positive);
/// numerators are the Cramer minors. Throws SingularSystem.
std::vector<RationalFunction> bareiss_solve(const PolyMatrix& m, const std::vector<MultiPoly>& b);

/// For a square matrix [[A, c], [r, z]] with A of size k = size - 1, returns
/// det(A) * (z - r A^{-1} c) up to sign, which is the determinant of the whole
/// matrix. Pivots are taken from A only. Throws SingularSystem if det(A) = 0
/// and Timeout once the deadline passes.
MultiPoly bordered_determinant(PolyMatrix m, const Deadline& deadline = {});

/// Sylvester resultant with respect to v. Throws NoEliminationNeeded when
/// either input has degree zero in v.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, VarId v);

inline MultiPoly resultant_in_n(const MultiPoly& p, const MultiPoly& q) {
  return resultant(p, q, VarId::n());
}

}  // namespace ratrec
