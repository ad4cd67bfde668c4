#pragma once

// Conversion of a holonomic equation into a simple ratrec equation of order
// l + d by linear algebra: the relations sigma^j(p) = 0, j < d, are a linear
// system in (n, n^2, ..., n^d) over the rational functions in the shifts.
// Its solution, substituted into sigma^d(p), eliminates n.

#include "ratrec/algebra.hpp"
#include "ratrec/difference.hpp"
#include "ratrec/holonomic.hpp"

#include <vector>

namespace ratrec {

/// entries[j][k] is the coefficient of n^k in sigma^j(p), j, k = 0..d.
struct GammaTable {
  int order = 0;
  int degree = 0;
  std::vector<std::vector<MultiPoly>> entries;

  const MultiPoly& at(int j, int k) const {
    return entries.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(k));
  }
};

GammaTable gamma_decompose(const HolonomicEq& h);

/// matrix[j][k-1] = gamma(j, k), rhs[j] = -gamma(j, 0) for j = 0..d-1.
struct PowerSystem {
  PolyMatrix matrix;
  std::vector<MultiPoly> rhs;
};

PowerSystem build_power_system(const GammaTable& g);

/// rho_k = n^k as rational functions of the shifts. Throws SingularSystem.
std::vector<RationalFunction> solve_powers(const PowerSystem& system);

/// Composes with the forward-difference power that annihilates the
/// inhomogeneous polynomial; order grows by deg(inhom) + 1.
HolonomicEq homogenize(const HolonomicEq& h);

struct LaOptions {
  /// Cancel gcd(num, den) in the result.
  bool cancel_common_factor = true;
  /// Checked between elimination steps; Timeout when it passes.
  Deadline deadline;
};

RatRecEq convert_la(const HolonomicEq& h, const LaOptions& options = {});

}  // namespace ratrec
