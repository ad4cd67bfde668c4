#pragma once

// Sparse multivariate polynomials over Q in the variables n, s(n), s(n+1), ...
//
// Terms are kept in pure lexicographic order with n greatest and shifts
// ranked by index (s(n+i) > s(n+j) iff i > j). Everything downstream
// (elimination of n, leading terms, printing order) relies on this order.

#include "ratrec/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ratrec {

class VarId {
 public:
  enum class Kind : std::uint8_t { N, Shift };

  static constexpr VarId n() { return VarId(kNRank); }
  static constexpr VarId shift(std::uint32_t index) { return VarId(index); }

  constexpr Kind kind() const { return rank_ == kNRank ? Kind::N : Kind::Shift; }
  constexpr bool is_n() const { return rank_ == kNRank; }
  constexpr std::uint32_t shift_index() const { return rank_; }
  constexpr std::uint32_t rank() const { return rank_; }

  /// "n", "s(n)" or "s(n+i)".
  std::string name() const;

  friend constexpr auto operator<=>(VarId, VarId) = default;

 private:
  static constexpr std::uint32_t kNRank = 0xFFFFFFFFu;
  constexpr explicit VarId(std::uint32_t rank) : rank_(rank) {}
  std::uint32_t rank_;
};

class Monomial {
 public:
  struct Factor {
    VarId var;
    std::uint32_t exp;
    friend auto operator<=>(const Factor&, const Factor&) = default;
  };

  Monomial() = default;
  explicit Monomial(VarId v, std::uint32_t exp = 1);
  /// Accepts factors in any order; merges repeats and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  /// Factors sorted by descending variable rank.
  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree(VarId v) const;
  std::uint32_t total_degree() const;
  /// Total degree over the shift variables only.
  std::uint32_t shift_degree() const;
  std::optional<VarId> top_variable() const;

  bool divides(const Monomial& other) const;
  /// Precondition: divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial without(VarId v) const;
  /// Renames s(n+i) to s(n+i+j); n is untouched.
  Monomial shifted(std::uint32_t j) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  // Lexicographic: the factor lists are sorted by descending rank, so the
  // element-wise comparison of (var, exp) pairs is exactly lex order.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static MultiPoly variable(VarId v, std::uint32_t exp = 1);
  static MultiPoly monomial(Monomial m, Rational c);
  /// Canonicalizes: sorts, merges equal monomials, drops zero coefficients.
  static MultiPoly from_terms(std::vector<Term> terms);

  /// Lex-descending, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  Rational constant_value() const;
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().first; }
  const Rational& leading_coefficient() const { return terms_.front().second; }

  std::uint32_t degree_in(VarId v) const;
  std::uint32_t total_degree() const;
  std::uint32_t shift_degree() const;
  bool contains(VarId v) const;
  /// Variables occurring, by descending rank.
  std::vector<VarId> variables() const;
  std::optional<std::uint32_t> max_shift() const;

  /// Coefficient of v^k, viewing the polynomial as univariate in v.
  MultiPoly coeff_in(VarId v, std::uint32_t k) const;
  /// All coefficients in v, index = power of v.
  std::vector<MultiPoly> coeffs_in(VarId v) const;

  Rational evaluate(const std::function<Rational(VarId)>& value_of) const;
  MultiPoly substitute(VarId v, const MultiPoly& replacement) const;
  MultiPoly pow(unsigned e) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Lex comparison of term lists (monomials first, then coefficients).
  friend bool lex_less(const MultiPoly& a, const MultiPoly& b);

 private:
  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract);
  std::vector<Term> terms_;
};

inline MultiPoly var_n() { return MultiPoly::variable(VarId::n()); }
inline MultiPoly var_s(std::uint32_t i) { return MultiPoly::variable(VarId::shift(i)); }

MultiPoly coeff_in_var(const MultiPoly& p, VarId v, std::uint32_t k);

/// Positive rational c with p / c having coprime integer coefficients; 1 for zero.
Rational content(const MultiPoly& p);

/// Integer primitive part with positive leading coefficient under lex.
MultiPoly normalize(const MultiPoly& p);

/// Rational point evaluation from a dense assignment: values[i] is s(n+i), n_value is n.
Rational evaluate_at(const MultiPoly& p, std::span<const Rational> shift_values,
                     const Rational& n_value = Rational(0));

}  // namespace ratrec
