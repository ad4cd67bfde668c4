#pragma once

// Sequence oracles and experiment tooling.

#include "ratrec/convert.hpp"
#include "ratrec/difference.hpp"
#include "ratrec/dynsys.hpp"
#include "ratrec/holonomic.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ratrec {

/// Terms u(0..N) by forward recursion, dividing by P_l(n - l) for u(n).
/// first_singularity is the least n with P_l(n - l) = 0; later terms are
/// absent. Throws ArityError unless inits has l entries, Unsupported for
/// order 0, std::invalid_argument if N < l.
SequenceTable unroll_holonomic(const HolonomicEq& h, std::span<const Rational> inits, std::size_t N);

/// Terms u(0..N) of s(n+m) = num/den from m initial values; stops at the first
/// index whose denominator vanishes. Throws ArityError.
SequenceTable unroll_ratrec(const RatRecEq& r, std::span<const Rational> inits, std::size_t N);

/// Inclusive index interval.
struct IndexRange {
  std::size_t first = 0;
  std::size_t last = 0;
  std::size_t size() const { return last >= first ? last - first + 1 : 0; }
};

struct Violation {
  std::size_t index;
  Rational lhs;
  Rational rhs;
};

struct VerificationReport {
  IndexRange range;
  std::size_t hold_count = 0;
  std::vector<std::size_t> singular_indices;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

/// For each n in range: RatRecEq compares u(n+m) with num/den on the window
/// u(n..n+m-1); DiffPoly checks that its value at n is zero. A vanishing
/// denominator or an undefined window term makes n singular.
VerificationReport check_annihilates(const RatRecEq& eq, const SequenceTable& seq, IndexRange range);
VerificationReport check_annihilates(const DiffPoly& eq, const SequenceTable& seq, IndexRange range);

/// Every n whose window lies inside the table.
IndexRange full_range(const SequenceTable& seq, int order);

/// s(n+m) = constant + sum_i coefficients[i] * s(n+i).
struct CFinite {
  Rational constant;
  std::vector<Rational> coefficients;
};

/// Present iff den is a nonzero constant and num is affine-linear.
std::optional<CFinite> classify_cfinite(const RatRecEq& r);
RatRecEq reconstruct_cfinite(const CFinite& c);

/// Deterministic for a fixed seed. Each P_i(n) = sum_k c_k n^k with c_k
/// drawn from coeff_set. Order is uniform in [1, max_order] and degree in
/// [0, max_degree]; with exact_shape they equal the maxima. Neither P_l nor
/// P_0 is zero.
HolonomicEq random_holonomic(std::uint64_t seed, int max_order, int max_degree,
                             const std::vector<Integer>& coeff_set = {-1, 0, 1}, bool exact_shape = false);

struct BenchInput {
  std::string id;
  HolonomicEq eq;
};

struct BenchRow {
  std::string id;
  Method method = Method::LA;
  std::optional<double> cpu_seconds;  // nullopt: timed out
  std::optional<int> order;
  std::optional<int> degree;
  std::string status;  // "ok", "timeout", "not-found" or "error: ..."
};

/// One row per (input, method), in input-major order. Each task runs on one
/// of `workers` threads with its own deadline; CPU time is the thread's.
std::vector<BenchRow> bench(const std::vector<BenchInput>& inputs, const std::vector<Method>& methods,
                            std::chrono::duration<double> timeout, unsigned workers = 1);

/// Fixed-width table; timed-out rows show e.g. "300+".
std::string render_bench_table(const std::vector<BenchRow>& rows, std::chrono::duration<double> timeout);

struct SomosResult {
  SequenceTable table;
  RatRecEq equation;
  VerificationReport report;  // equation against table
};

/// Integer sequence of a monic homogeneous equation with integer
/// coefficients and integer initial values, with its converted equation.
/// Throws NotSomosEligible, or InternalContradiction if a term is not integral.
SomosResult somos_generate(const HolonomicEq& h, std::span<const Integer> inits, std::size_t N,
                           Method method = Method::LA);

}  // namespace ratrec
