#pragma once

// Test-side oracles, written independently of the library algorithms they
// check: closed-form sequences, naive fraction-field elimination, cofactor
// determinants and random polynomial generators.

#include "ratrec/difference.hpp"
#include "ratrec/holonomic.hpp"
#include "ratrec/multipoly.hpp"
#include "ratrec/parser.hpp"

#include <random>
#include <string>
#include <vector>

namespace oracle {

using ratrec::Integer;
using ratrec::MultiPoly;
using ratrec::Rational;

inline MultiPoly P(const std::string& text) { return ratrec::parse_equation(text).body; }

inline ratrec::HolonomicEq H(const std::string& text) {
  return ratrec::holonomic_from_diffpoly(ratrec::parse_equation(text));
}

/// a = c * b for some nonzero rational c.
inline bool proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.leading_coefficient() == b * a.leading_coefficient();
}

inline Integer factorial(unsigned long n) {
  Integer r = 1;
  for (unsigned long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer binom(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

inline Integer catalan(unsigned long n) { return binom(2 * n, n) / (n + 1); }

inline Integer ipow(const Integer& b, unsigned long e) {
  Integer r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= b;
  return r;
}

inline Rational rpow(const Rational& b, unsigned long e) {
  Rational r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= b;
  return r;
}

/// Rational function kept as an unreduced pair.
struct Frac {
  MultiPoly num;
  MultiPoly den = MultiPoly(Rational(1));
};

inline bool same(const Frac& a, const Frac& b) { return a.num * b.den == b.num * a.den; }

/// Gaussian elimination with back substitution over Q, first nonzero pivot.
/// Returns an empty vector when the matrix is singular.
inline std::vector<Rational> naive_solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return {};
    std::swap(a[p], a[k]);
    std::swap(b[p], b[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

/// Laplace expansion along the first row.
inline MultiPoly cofactor_det(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly(Rational(1));
  if (n == 1) return m[0][0];
  MultiPoly total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    MultiPoly term = m[0][c] * cofactor_det(minor);
    if (c % 2) total -= term;
    else total += term;
  }
  return total;
}

/// Random polynomial in n (if with_n) and s(n..n+max_shift), total degree
/// at most max_degree, small integer coefficients.
inline MultiPoly random_poly(std::mt19937_64& rng, unsigned max_shift, unsigned max_degree, unsigned terms,
                             bool with_n = true, int coeff = 5) {
  std::uniform_int_distribution<int> c(-coeff, coeff);
  std::uniform_int_distribution<unsigned> var(0, max_shift + (with_n ? 1 : 0));
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  MultiPoly out;
  for (unsigned t = 0; t < terms; ++t) {
    MultiPoly mono{Rational(c(rng))};
    const unsigned d = deg(rng);
    for (unsigned i = 0; i < d; ++i) {
      const unsigned v = var(rng);
      mono *= v > max_shift ? ratrec::var_n() : ratrec::var_s(v);
    }
    out += mono;
  }
  return out;
}

/// Random holonomic equation with exactly order l and degree d, integer
/// coefficients in [-c, c], nonzero P_l and P_0.
inline ratrec::HolonomicEq random_holo(std::mt19937_64& rng, int l, int d, int c) {
  std::uniform_int_distribution<int> dist(-c, c);
  std::vector<ratrec::UniPoly> coeffs;
  for (int i = 0; i <= l; ++i) {
    std::vector<Rational> cs;
    for (int k = 0; k <= d; ++k) cs.emplace_back(dist(rng));
    if (i == l || i == 0) {
      while (cs[static_cast<std::size_t>(d)] == 0) cs[static_cast<std::size_t>(d)] = dist(rng);
    }
    coeffs.emplace_back(std::move(cs));
  }
  return ratrec::HolonomicEq(std::move(coeffs));
}

/// Direct forward recursion with exact rationals; stops (truncates) where the
/// leading coefficient vanishes.
inline std::vector<Rational> brute_terms(const ratrec::HolonomicEq& h, const std::vector<Rational>& inits, std::size_t N) {
  std::vector<Rational> u = inits;
  const int l = h.order();
  auto ev = [](const ratrec::UniPoly& p, long k) {
    Rational acc = 0, x = 1;
    for (const auto& c : p.coefficients()) {
      acc += c * x;
      x *= k;
    }
    return acc;
  };
  while (u.size() <= N) {
    const long k = static_cast<long>(u.size()) - l;
    const Rational lead = ev(h.coeff(l), k);
    if (lead == 0) break;
    Rational acc = h.inhom() ? ev(*h.inhom(), k) : Rational(0);
    for (int i = 0; i < l; ++i) acc += ev(h.coeff(i), k) * u[static_cast<std::size_t>(k + i)];
    u.push_back(-acc / lead);
  }
  return u;
}

/// Value of an n-free polynomial on the window u[n..].
inline Rational eval_window(const MultiPoly& p, const std::vector<Rational>& u, std::size_t n) {
  return p.evaluate([&](ratrec::VarId v) {
    return v.is_n() ? Rational(static_cast<unsigned long>(n)) : u.at(n + v.shift_index());
  });
}

/// Counts indices n where the cleared equation den*s(n+m) - num fails on u
/// (indices with a vanishing denominator are skipped).
inline std::size_t ratrec_failures(const ratrec::RatRecEq& r, const std::vector<Rational>& u, std::size_t* checked = nullptr) {
  std::size_t bad = 0, ok = 0;
  const auto m = static_cast<std::size_t>(r.order);
  for (std::size_t n = 0; n + m < u.size(); ++n) {
    const Rational den = eval_window(r.den, u, n);
    if (den == 0) continue;
    if (eval_window(r.num, u, n) / den != u[n + m]) ++bad;
    else ++ok;
  }
  if (checked) *checked = ok;
  return bad;
}

}  // namespace oracle
