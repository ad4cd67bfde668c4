#include "ratrec/algebra.hpp"

#include "ratrec/errors.hpp"
#include "ratrec/unipoly.hpp"

#include "packed_poly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace ratrec {

// ------------------------------------------------------------ exact division

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return MultiPoly{};
  if (b.is_constant()) return a * Rational(1 / b.constant_value());

  std::map<Monomial, Rational, std::greater<>> rem;
  for (const auto& [m, c] : a.terms()) rem.emplace(m, c);
  const auto& [lm_b, lc_b] = b.leading_term();
  std::vector<MultiPoly::Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lm_b.divides(top->first)) return std::nullopt;
    Monomial qm = top->first / lm_b;
    Rational qc = top->second / lc_b;
    rem.erase(top);
    for (auto it = std::next(b.terms().begin()); it != b.terms().end(); ++it) {
      Monomial m = qm * it->first;
      auto [slot, inserted] = rem.try_emplace(std::move(m), 0);
      slot->second -= qc * it->second;
      if (slot->second == 0) rem.erase(slot);
    }
    quotient.emplace_back(std::move(qm), std::move(qc));
  }
  return MultiPoly::from_terms(std::move(quotient));
}

namespace {

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw InternalContradiction("expected exact polynomial division");
  return std::move(*q);
}

// ------------------------------------------------------- univariate helpers

UniPoly specialize(const MultiPoly& p, VarId keep, const std::map<VarId, Rational>& point) {
  std::vector<Rational> c(p.degree_in(keep) + 1, Rational(0));
  for (const auto& [m, coef] : p.terms()) {
    Rational t = coef;
    std::uint32_t e = 0;
    for (const auto& f : m.factors()) {
      if (f.var == keep) {
        e = f.exp;
        continue;
      }
      const Rational& x = point.at(f.var);
      for (std::uint32_t i = 0; i < f.exp; ++i) t *= x;
    }
    c[e] += t;
  }
  return UniPoly(std::move(c));
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Rational factor = a.leading_coefficient() / b.leading_coefficient();
    std::vector<Rational> shiftb(a.degree() - b.degree(), Rational(0));
    shiftb.insert(shiftb.end(), b.coefficients().begin(), b.coefficients().end());
    a = a - UniPoly(std::move(shiftb)) * UniPoly{factor};
  }
  return a;
}

int uni_gcd_degree(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = uni_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.degree();
}

// Proves gcd(a, b) is constant by specialization: if lc_v(a) survives a point
// and the specialized gcd has degree 0 in v, the true gcd has degree 0 in v.
bool provably_coprime(const MultiPoly& a, const MultiPoly& b) {
  auto va = a.variables();
  auto vb = b.variables();
  std::vector<VarId> all;
  std::set_union(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(all), std::greater<>{});
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> dist(-97, 97);
  for (VarId v : all) {
    if (!a.contains(v) || !b.contains(v)) continue;
    bool settled = false;
    for (int attempt = 0; attempt < 3 && !settled; ++attempt) {
      std::map<VarId, Rational> point;
      for (VarId w : all) {
        if (w != v) point[w] = Rational(dist(rng));
      }
      UniPoly ua = specialize(a, v, point);
      UniPoly ub = specialize(b, v, point);
      if (ua.degree() != static_cast<int>(a.degree_in(v))) continue;
      if (uni_gcd_degree(ua, ub) == 0) settled = true;
    }
    if (!settled) return false;
  }
  return true;
}

VarId top_var(const MultiPoly& a, const MultiPoly& b) {
  auto va = a.variables();
  auto vb = b.variables();
  if (va.empty()) return vb.front();
  if (vb.empty()) return va.front();
  return std::max(va.front(), vb.front());
}

}  // namespace

// ----------------------------------------------------------------------- gcd

MultiPoly pseudo_remainder(const MultiPoly& f, const MultiPoly& g, VarId v) {
  const auto dg = g.degree_in(v);
  if (dg == 0) throw std::invalid_argument("pseudo_remainder: divisor free of " + v.name());
  const MultiPoly lc = g.coeff_in(v, dg);
  MultiPoly r = f;
  while (!r.is_zero() && r.degree_in(v) >= dg) {
    const auto dr = r.degree_in(v);
    MultiPoly lr = r.coeff_in(v, dr);
    r = lc * r - lr * MultiPoly::variable(v, dr - dg) * g;
  }
  return r;
}

MultiPoly content_in(const MultiPoly& p, VarId v) {
  if (p.is_zero()) return p;
  MultiPoly g;
  for (const auto& c : p.coeffs_in(v)) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_constant()) return MultiPoly(Rational(1));
  }
  return g;
}

MultiPoly primitive_part_in(const MultiPoly& p, VarId v) {
  if (p.is_zero()) return p;
  return normalize(exact_quotient(p, content_in(p, v)));
}

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly(Rational(1));
  if (auto q = divide_exact(a, b)) return normalize(b);
  if (auto q = divide_exact(b, a)) return normalize(a);
  if (provably_coprime(a, b)) return MultiPoly(Rational(1));

  const VarId x = top_var(a, b);
  if (!a.contains(x)) return poly_gcd(a, content_in(b, x));
  if (!b.contains(x)) return poly_gcd(content_in(a, x), b);

  MultiPoly ca = content_in(a, x);
  MultiPoly cb = content_in(b, x);
  MultiPoly r0 = normalize(exact_quotient(a, ca));
  MultiPoly r1 = normalize(exact_quotient(b, cb));
  if (r0.degree_in(x) < r1.degree_in(x)) std::swap(r0, r1);

  MultiPoly g;
  while (true) {
    MultiPoly r = pseudo_remainder(r0, r1, x);
    if (r.is_zero()) {
      g = r1;
      break;
    }
    if (r.degree_in(x) == 0) {
      g = MultiPoly(Rational(1));
      break;
    }
    r0 = std::move(r1);
    r1 = primitive_part_in(r, x);
  }
  return normalize(poly_gcd(ca, cb) * primitive_part_in(g, x));
}

// ------------------------------------------------------------ linear algebra

namespace {

struct GenericOps {
  using Poly = MultiPoly;
  static bool is_zero(const Poly& p) { return p.is_zero(); }
  static std::size_t size(const Poly& p) { return p.size(); }
  static Poly one() { return MultiPoly(Rational(1)); }
  static Poly mul(const Poly& a, const Poly& b) { return a * b; }
  static Poly sub(const Poly& a, const Poly& b) { return a - b; }
  static Poly neg(const Poly& a) { return -a; }
  static Poly quo(const Poly& a, const Poly& b) { return exact_quotient(a, b); }
};

struct PackedOps {
  using Poly = packed::Poly;
  static bool is_zero(const Poly& p) { return p.empty(); }
  static std::size_t size(const Poly& p) { return p.size(); }
  static Poly one() { return {packed::Term{packed::Key{}, Integer(1)}}; }
  static Poly mul(const Poly& a, const Poly& b) { return packed::mul(a, b); }
  static Poly sub(const Poly& a, const Poly& b) { return packed::sub(a, b); }
  static Poly neg(Poly a) {
    for (auto& t : a) t.c = -t.c;
    return a;
  }
  static Poly quo(const Poly& a, const Poly& b) {
    auto q = packed::div_exact(a, b);
    if (!q) throw InternalContradiction("expected exact polynomial division");
    return std::move(*q);
  }
};

template <class Ops>
using Matrix = std::vector<std::vector<typename Ops::Poly>>;

template <class Ops>
std::size_t pick_pivot(const Matrix<Ops>& m, std::size_t k, std::size_t rows) {
  std::size_t best = rows;
  for (std::size_t i = k; i < rows; ++i) {
    if (Ops::is_zero(m[i][k])) continue;
    if (best == rows || Ops::size(m[i][k]) < Ops::size(m[best][k])) best = i;
  }
  return best;
}

// Forward Bareiss sweep over the first `pivots` columns, choosing pivots among
// the first `pivot_rows` rows. Returns the number of row swaps performed, or
// -1 if a column had no nonzero pivot.
template <class Ops>
int bareiss_forward(Matrix<Ops>& m, std::size_t pivots, std::size_t pivot_rows, const Deadline& deadline = {}) {
  int swaps = 0;
  typename Ops::Poly prev = Ops::one();
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t k = 0; k < pivots; ++k) {
    std::size_t p = pick_pivot<Ops>(m, k, pivot_rows);
    if (p == pivot_rows) return -1;
    if (p != k) {
      std::swap(m[p], m[k]);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < m.size(); ++i) {
      deadline.check();
      for (std::size_t j = k + 1; j < cols; ++j) {
        m[i][j] = Ops::quo(Ops::sub(Ops::mul(m[k][k], m[i][j]), Ops::mul(m[i][k], m[k][j])), prev);
      }
      m[i][k] = typename Ops::Poly{};
    }
    prev = m[k][k];
  }
  return swaps;
}

// Back substitution on an upper-triangular Bareiss form with the right-hand
// side in column n; returns det * x.
template <class Ops>
std::vector<typename Ops::Poly> back_substitute(const Matrix<Ops>& aug, std::size_t n) {
  const auto& det = aug[n - 1][n - 1];
  std::vector<typename Ops::Poly> y(n);
  for (std::size_t i = n; i-- > 0;) {
    auto acc = Ops::mul(det, aug[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc = Ops::sub(acc, Ops::mul(aug[i][j], y[j]));
    y[i] = Ops::quo(acc, aug[i][i]);
  }
  return y;
}

// Integer, byte-packed copy of a matrix. Rows are scaled to integer
// coefficients; `scale` is the product of the row factors, so determinants of
// the packed matrix are `scale` times the original ones.
struct PackedMatrix {
  packed::Layout layout;
  Matrix<PackedOps> m;
  Rational scale;
};

std::optional<PackedMatrix> try_pack(const PolyMatrix& m) {
  std::map<VarId, std::uint32_t> bound;
  for (const auto& row : m) {
    std::map<VarId, std::uint32_t> row_max;
    for (const auto& e : row) {
      for (VarId v : e.variables()) row_max[v] = std::max(row_max[v], e.degree_in(v));
    }
    for (const auto& [v, d] : row_max) bound[v] += d;
  }
  std::vector<VarId> vars;
  for (const auto& [v, d] : bound) {
    // Bareiss intermediates are products of two minors.
    if (2 * d > packed::kMaxExp) return std::nullopt;
    vars.push_back(v);
  }
  auto layout = packed::Layout::for_variables(std::move(vars));
  if (!layout) return std::nullopt;
  PackedMatrix out{std::move(*layout), {}, Rational(1)};
  for (const auto& row : m) {
    Integer l = 1;
    for (const auto& e : row) {
      for (const auto& t : e.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
    }
    out.scale *= l;
    std::vector<packed::Poly> prow;
    prow.reserve(row.size());
    for (const auto& e : row) prow.push_back(out.layout.pack(e * Rational(l)));
    out.m.push_back(std::move(prow));
  }
  return out;
}

}  // namespace

MultiPoly determinant(PolyMatrix m) {
  const auto n = m.size();
  if (n == 0) return MultiPoly(Rational(1));
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  }
  if (auto pm = try_pack(m)) {
    int swaps = bareiss_forward<PackedOps>(pm->m, n, n);
    if (swaps < 0) return MultiPoly{};
    MultiPoly d = pm->layout.unpack(pm->m[n - 1][n - 1]) * (1 / pm->scale);
    return swaps % 2 ? -d : d;
  }
  int swaps = bareiss_forward<GenericOps>(m, n, n);
  if (swaps < 0) return MultiPoly{};
  MultiPoly d = m[n - 1][n - 1];
  return swaps % 2 ? -d : d;
}

std::vector<RationalFunction> bareiss_solve(const PolyMatrix& m, const std::vector<MultiPoly>& b) {
  const auto n = m.size();
  if (b.size() != n) throw std::invalid_argument("bareiss_solve: dimension mismatch");
  PolyMatrix aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) throw std::invalid_argument("bareiss_solve: matrix is not square");
    aug[i].push_back(b[i]);
  }
  MultiPoly det;
  std::vector<MultiPoly> y;
  if (auto pm = try_pack(aug)) {
    if (bareiss_forward<PackedOps>(pm->m, n, n) < 0) throw SingularSystem("power system matrix is singular");
    const Rational inv = 1 / pm->scale;
    det = pm->layout.unpack(pm->m[n - 1][n - 1]) * inv;
    for (const auto& yi : back_substitute<PackedOps>(pm->m, n)) y.push_back(pm->layout.unpack(yi) * inv);
  } else {
    if (bareiss_forward<GenericOps>(aug, n, n) < 0) throw SingularSystem("power system matrix is singular");
    det = aug[n - 1][n - 1];
    y = back_substitute<GenericOps>(aug, n);
  }
  const bool flip = det.leading_coefficient() < 0;
  std::vector<RationalFunction> out;
  out.reserve(n);
  for (auto& yi : y) out.push_back({flip ? -yi : yi, flip ? -det : det});
  return out;
}

MultiPoly bordered_determinant(PolyMatrix m, const Deadline& deadline) {
  const auto n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("bordered_determinant: matrix is not square");
  }
  if (n == 0) throw std::invalid_argument("bordered_determinant: empty matrix");
  if (auto pm = try_pack(m)) {
    if (bareiss_forward<PackedOps>(pm->m, n - 1, n - 1, deadline) < 0) throw SingularSystem("leading block is singular");
    return pm->layout.unpack(pm->m[n - 1][n - 1]) * (1 / pm->scale);
  }
  if (bareiss_forward<GenericOps>(m, n - 1, n - 1, deadline) < 0) throw SingularSystem("leading block is singular");
  return m[n - 1][n - 1];
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, VarId v) {
  const auto dp = p.degree_in(v);
  const auto dq = q.degree_in(v);
  if (dp == 0 || dq == 0) throw NoEliminationNeeded();
  auto cp = p.coeffs_in(v);
  auto cq = q.coeffs_in(v);
  const std::size_t size = dp + dq;
  PolyMatrix syl(size, std::vector<MultiPoly>(size));
  // Rows hold coefficients from the highest power of v downwards.
  for (std::size_t r = 0; r < dq; ++r) {
    for (std::size_t k = 0; k <= dp; ++k) syl[r][r + k] = cp[dp - k];
  }
  for (std::size_t r = 0; r < dp; ++r) {
    for (std::size_t k = 0; k <= dq; ++k) syl[dq + r][r + k] = cq[dq - k];
  }
  return determinant(std::move(syl));
}

}  // namespace ratrec
