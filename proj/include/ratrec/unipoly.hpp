#pragma once

#include "ratrec/multipoly.hpp"
#include "ratrec/rational.hpp"

#include <initializer_list>
#include <vector>

namespace ratrec {

/// Dense univariate polynomial in n; coefficients()[k] multiplies n^k.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<Rational> coeffs);
  explicit UniPoly(std::vector<Rational> coeffs);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading_coefficient() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const;
  MultiPoly to_multipoly(VarId var = VarId::n()) const;
  /// Inverse of to_multipoly; throws std::invalid_argument if p involves another variable.
  static UniPoly from_multipoly(const MultiPoly& p, VarId var = VarId::n());

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// P(n + j), expanded by the binomial theorem.
UniPoly upoly_compose_shift(const UniPoly& p, unsigned j);

}  // namespace ratrec
