#pragma once

// Rational dynamical systems x(n+1) = R(x(n)), output a(n) = x_j(n), and the
// companion embedding of homogeneous holonomic equations.

#include "ratrec/holonomic.hpp"
#include "ratrec/multipoly.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ratrec {

struct Singularity {
  /// Index of the step that could not be carried out.
  std::size_t index;
  std::string reason;
};

/// Exact terms u(0..N). Entries after a singularity are absent.
struct SequenceTable {
  std::vector<std::optional<Rational>> terms;
  std::optional<Singularity> first_singularity;

  std::size_t size() const { return terms.size(); }
  bool defined(std::size_t i) const { return i < terms.size() && terms[i].has_value(); }
  const Rational& at(std::size_t i) const { return terms.at(i).value(); }
};

/// State coordinate i (0-based) is the polynomial variable VarId::shift(i).
/// x_i(n+1) = numerators[i](x(n)) / denominator(x(n)).
struct RationalDynSystem {
  std::vector<MultiPoly> numerators;
  MultiPoly denominator;
  std::size_t output_index = 1;  // 1-based
  std::vector<Rational> initial_state;

  std::size_t dimension() const { return numerators.size(); }
};

/// Companion form of dimension l + 1: states u(n), ..., u(n+l-1), then the
/// counter n. Shared denominator P_l(counter); output is coordinate 1.
/// Throws Unsupported for inhomogeneous or order-0 input, ArityError for a
/// wrong number of initial values.
RationalDynSystem holo_to_system(const HolonomicEq& h, std::span<const Rational> inits);

/// Iterates the system; terms[n] is the output after n steps. When the
/// denominator vanishes on state n, first_singularity = n and later terms are
/// absent.
SequenceTable simulate_system(const RationalDynSystem& sys, std::size_t steps);

}  // namespace ratrec
