#pragma once

// Elimination of n with lex Groebner bases: for j = 1, 2, ... compute
// <p, sigma(p), ..., sigma^j(p)> intersected with Q[s(n), ..., s(n+l+j)] and
// stop at the first quasi-linear generator.

#include "ratrec/deadline.hpp"
#include "ratrec/difference.hpp"
#include "ratrec/holonomic.hpp"

#include <atomic>
#include <chrono>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace ratrec {

/// Orders with n above every shift; both make the n-free generators of a
/// Groebner basis generate the elimination ideal.
enum class MonomialOrder {
  Lex,           // n > s(n+J) > ... > s(n), pure lexicographic
  BlockGrevlex,  // n-degree first, then graded reverse lex on the shifts
};

/// Negative, zero or positive as a is below, equal to or above b.
int compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order);

/// Leading term of a nonzero polynomial under `order`.
const MultiPoly::Term& leading_term(const MultiPoly& p, MonomialOrder order);

struct GroebnerLimits {
  Deadline deadline;
  std::size_t max_coeff_bits = 1'000'000;
  std::size_t max_pairs = 10'000'000;
  std::size_t max_terms = std::numeric_limits<std::size_t>::max();
};

/// Reduced basis; generators are integer primitive with positive leading
/// coefficient under `order` and sorted by ascending leading monomial.
struct GroebnerBasis {
  std::vector<MultiPoly> generators;
  MonomialOrder order = MonomialOrder::Lex;
};

/// Buchberger selecting the pair of least shift-degree lcm, then least lcm
/// under `order`, with the coprime-leading-monomial criterion and
/// Gebauer-Moeller pair pruning. Throws Timeout at the deadline and
/// CapExceeded when a resource cap is hit.
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const GroebnerLimits& limits = {},
                         MonomialOrder order = MonomialOrder::Lex);

/// For generators homogeneous in the shift variables (n has weight 0): pairs
/// are completed one shift degree at a time and, after each degree, the
/// inter-reduced partial basis (a Groebner basis up to that degree) is passed
/// to `accept`. Returns the first accepted partial basis, else the full
/// basis. Throws std::invalid_argument for inhomogeneous generators.
GroebnerBasis buchberger_by_degree(const std::vector<MultiPoly>& gens, const GroebnerLimits& limits,
                                   MonomialOrder order, const std::function<bool(const GroebnerBasis&)>& accept);

/// Fully reduced normal form of f modulo the given polynomials (up to a
/// nonzero constant factor); zero iff f reduces to zero.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      MonomialOrder order = MonomialOrder::Lex);

MultiPoly s_polynomial(const MultiPoly& a, const MultiPoly& b, MonomialOrder order = MonomialOrder::Lex);

/// Every S-polynomial of the basis reduces to zero.
bool is_groebner(const GroebnerBasis& basis);

/// Basis generators free of n, which generate the elimination ideal.
std::vector<MultiPoly> eliminate_n(const GroebnerBasis& basis);

/// The quasi-linear candidate with smallest (order, total degree, term count,
/// lex), compared after removing each candidate's content in its top shift.
/// Returns that content-free form.
std::optional<DiffPoly> pick_simple_ratrec(const std::vector<MultiPoly>& gens);

struct GbOptions {
  std::optional<int> userbound;
  std::chrono::duration<double> timeout{300.0};
  std::size_t max_coeff_bits = 1'000'000;
  const std::atomic<bool>* cancel = nullptr;
  /// Degree-1 inputs use the resultant of p and sigma(p) instead of Buchberger.
  bool resultant_fast_path = true;
  /// Fixed order, or nullopt: each iteration first tries Lex with at most
  /// `lex_max_terms` terms per polynomial and, if that cap is hit, redoes it
  /// under BlockGrevlex. Lex runs complete the basis; BlockGrevlex runs stop
  /// after the first shift degree whose partial basis has a candidate.
  std::optional<MonomialOrder> order;
  std::size_t lex_max_terms = 4000;
};

struct GbResult {
  RatRecEq equation;
  int iteration = 0;  // j at which the generator was found (0: input already simple ratrec)
};

/// Throws Timeout or NotFoundWithinBound.
GbResult convert_gb_detailed(const HolonomicEq& h, const GbOptions& options = {});

inline RatRecEq convert_gb(const HolonomicEq& h, const GbOptions& options = {}) {
  return convert_gb_detailed(h, options).equation;
}

}  // namespace ratrec
