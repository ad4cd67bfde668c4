#include "ratrec/difference.hpp"

#include "ratrec/algebra.hpp"
#include "ratrec/errors.hpp"

#include <stdexcept>

namespace ratrec {

DiffPoly shift(const DiffPoly& p, unsigned j) {
  if (j == 0) return p;
  const VarId n = VarId::n();
  std::vector<MultiPoly::Term> out;
  out.reserve(p.body.size());
  std::vector<Integer> jpow{Integer(1)};
  for (const auto& [m, c] : p.body.terms()) {
    const std::uint32_t e = m.degree(n);
    Monomial rest = m.without(n).shifted(j);
    while (jpow.size() <= e) jpow.push_back(jpow.back() * j);
    // (n+j)^e = sum_i C(e,i) j^(e-i) n^i
    for (std::uint32_t i = 0; i <= e; ++i) {
      Rational coef = c * Rational(binomial(e, i) * jpow[e - i]);
      out.emplace_back(Monomial(n, i) * rest, std::move(coef));
    }
  }
  return DiffPoly(MultiPoly::from_terms(std::move(out)));
}

OrderDegree order_and_degree(const DiffPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("order_and_degree: zero polynomial");
  auto top = p.body.max_shift();
  return {top ? static_cast<int>(*top) : -1, static_cast<int>(p.body.shift_degree()),
          static_cast<int>(p.body.degree_in(VarId::n()))};
}

bool is_simple_ratrec(const DiffPoly& p) {
  if (p.is_zero() || p.body.contains(VarId::n())) return false;
  auto top = p.body.max_shift();
  return top && p.body.degree_in(VarId::shift(*top)) == 1;
}

DiffPoly RatRecEq::cleared() const {
  return DiffPoly(den * var_s(static_cast<std::uint32_t>(order)) - num);
}

int RatRecEq::degree() const { return static_cast<int>(cleared().body.total_degree()); }

std::optional<Rational> RatRecEq::evaluate(std::span<const Rational> window) const {
  Rational d = evaluate_at(den, window);
  if (d == 0) return std::nullopt;
  return evaluate_at(num, window) / d;
}

RatRecEq normalize_pair(RatRecEq r) {
  Rational c = content(r.den * var_s(static_cast<std::uint32_t>(r.order)) + r.num);
  if (!r.den.is_zero() && r.den.leading_coefficient() < 0) c = -c;
  Rational inv = 1 / c;
  r.num *= inv;
  r.den *= inv;
  return r;
}

RatRecEq to_ratrec_form(const DiffPoly& p) {
  if (!is_simple_ratrec(p)) throw NotQuasiLinear("polynomial is not free of n and linear in its top shift");
  const auto m = *p.body.max_shift();
  const VarId top = VarId::shift(m);
  RatRecEq r;
  r.order = static_cast<int>(m);
  r.den = p.body.coeff_in(top, 1);
  r.num = -p.body.coeff_in(top, 0);
  return normalize_pair(std::move(r));
}

RatRecEq reduce_ratrec(const RatRecEq& r) {
  MultiPoly g = poly_gcd(r.num, r.den);
  if (g.is_constant()) return normalize_pair(r);
  RatRecEq out = r;
  out.num = *divide_exact(r.num, g);
  out.den = *divide_exact(r.den, g);
  return normalize_pair(std::move(out));
}

bool is_well_formed(const RatRecEq& r) {
  if (r.order < 0 || r.den.is_zero()) return false;
  for (const MultiPoly* q : {&r.num, &r.den}) {
    if (q->contains(VarId::n())) return false;
    auto top = q->max_shift();
    if (top && static_cast<int>(*top) >= r.order) return false;
  }
  return true;
}

}  // namespace ratrec
