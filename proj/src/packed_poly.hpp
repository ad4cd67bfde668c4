#pragma once

// Integer polynomials over at most 32 variables with exponents below 128,
// packed one byte per variable so that lex comparison is memcmp and monomial
// multiplication is word-wise addition. Used by the fraction-free kernels.

#include "ratrec/multipoly.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <optional>
#include <vector>

namespace ratrec::packed {

inline constexpr std::size_t kMaxVars = 32;
inline constexpr std::uint32_t kMaxExp = 127;

struct Key {
  alignas(8) std::array<std::uint8_t, kMaxVars> e{};

  friend bool operator==(const Key& a, const Key& b) { return std::memcmp(a.e.data(), b.e.data(), kMaxVars) == 0; }
  friend int compare(const Key& a, const Key& b) { return std::memcmp(a.e.data(), b.e.data(), kMaxVars); }
  friend bool operator<(const Key& a, const Key& b) { return compare(a, b) < 0; }

  friend Key operator+(const Key& a, const Key& b);
  friend Key operator-(const Key& a, const Key& b);
  /// Every exponent of a is at most the matching exponent of b.
  friend bool divides(const Key& a, const Key& b);
};

struct Term {
  Key k;
  Integer c;
};

/// Terms in strictly descending key order, no zero coefficients.
using Poly = std::vector<Term>;

Poly mul(const Poly& a, const Poly& b);
/// a * b - c * d.
Poly mul_sub(const Poly& a, const Poly& b, const Poly& c, const Poly& d);
Poly sub(const Poly& a, const Poly& b);
/// Exact quotient, or nullopt when b does not divide a over the integers.
std::optional<Poly> div_exact(const Poly& a, const Poly& b);

/// Assigns byte positions to variables (descending rank, so byte order is lex).
class Layout {
 public:
  /// nullopt if there are too many variables.
  static std::optional<Layout> for_variables(std::vector<VarId> vars);

  std::size_t size() const { return vars_.size(); }
  /// Requires integer coefficients and exponents within kMaxExp.
  Poly pack(const MultiPoly& p) const;
  MultiPoly unpack(const Poly& p) const;

 private:
  std::vector<VarId> vars_;  // descending rank
  std::size_t index_of(VarId v) const;
};

}  // namespace ratrec::packed
