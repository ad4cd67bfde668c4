#pragma once

// Difference polynomials: polynomials in n and the shifts s(n+i), with the
// shift map sending n -> n+1 and s(n+i) -> s(n+i+1).

#include "ratrec/multipoly.hpp"
#include "ratrec/unipoly.hpp"

#include <optional>
#include <span>
#include <vector>

namespace ratrec {

struct DiffPoly {
  MultiPoly body;

  DiffPoly() = default;
  explicit DiffPoly(MultiPoly b) : body(std::move(b)) {}

  bool is_zero() const { return body.is_zero(); }
  friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) { return DiffPoly(a.body + b.body); }
  friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) { return DiffPoly(a.body - b.body); }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) { return DiffPoly(a.body * b.body); }
  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;
};

/// sigma^j: every n becomes n + j and every s(n+i) becomes s(n+i+j).
DiffPoly shift(const DiffPoly& p, unsigned j);

struct OrderDegree {
  int order;         // largest shift index present, -1 if no shift occurs
  int total_degree;  // over the shift variables only
  int n_degree;
  friend bool operator==(const OrderDegree&, const OrderDegree&) = default;
};

/// Throws std::invalid_argument for the zero polynomial.
OrderDegree order_and_degree(const DiffPoly& p);

/// Free of n and of degree exactly one in its highest shift.
bool is_simple_ratrec(const DiffPoly& p);

/// s(n+order) = num / den with num, den free of n and of s(n+order) and above.
struct RatRecEq {
  int order = 0;
  MultiPoly num;
  MultiPoly den;

  /// den * s(n+order) - num.
  DiffPoly cleared() const;
  /// Total degree of the cleared polynomial.
  int degree() const;
  /// Right-hand side on the window s(n..n+order-1); nullopt when den vanishes.
  std::optional<Rational> evaluate(std::span<const Rational> window) const;

  friend bool operator==(const RatRecEq&, const RatRecEq&) = default;
};

/// Divides num and den by the integer content of the pair and makes the
/// leading coefficient of den positive.
RatRecEq normalize_pair(RatRecEq r);

/// Rearranges a quasi-linear n-free polynomial. Throws NotQuasiLinear.
RatRecEq to_ratrec_form(const DiffPoly& p);

/// Cancels gcd(num, den) and normalizes the pair.
RatRecEq reduce_ratrec(const RatRecEq& r);

/// Syntactic check of the RatRecEq invariants (used as an assertion).
bool is_well_formed(const RatRecEq& r);

}  // namespace ratrec
