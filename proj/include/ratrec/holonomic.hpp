#pragma once

#include "ratrec/difference.hpp"
#include "ratrec/unipoly.hpp"

#include <optional>
#include <vector>

namespace ratrec {

/// P_l(n) s(n+l) + ... + P_0(n) s(n) + inhom(n) = 0.
///
/// Construction trims identically-zero leading coefficients, so order() is the
/// true order. A zero inhomogeneous part is stored as "homogeneous".
class HolonomicEq {
 public:
  explicit HolonomicEq(std::vector<UniPoly> coeffs, std::optional<UniPoly> inhom = std::nullopt);

  const std::vector<UniPoly>& coeffs() const { return coeffs_; }
  const UniPoly& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::optional<UniPoly>& inhom() const { return inhom_; }
  bool is_homogeneous() const { return !inhom_.has_value(); }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Maximum degree over the P_i and the inhomogeneous part.
  int degree() const;

  DiffPoly to_diffpoly() const;

  friend bool operator==(const HolonomicEq&, const HolonomicEq&) = default;

 private:
  std::vector<UniPoly> coeffs_;
  std::optional<UniPoly> inhom_;
};

/// Reads a difference polynomial of degree at most one in the shifts as a
/// holonomic equation. Throws NotHolonomic.
HolonomicEq holonomic_from_diffpoly(const DiffPoly& p);

}  // namespace ratrec
