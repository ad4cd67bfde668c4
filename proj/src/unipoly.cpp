#include "ratrec/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ratrec {

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

MultiPoly UniPoly::to_multipoly(VarId var) const {
  std::vector<MultiPoly::Term> terms;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) terms.emplace_back(Monomial(var, static_cast<std::uint32_t>(k)), coeffs_[k]);
  }
  return MultiPoly::from_terms(std::move(terms));
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p, VarId var) {
  std::vector<Rational> c(p.degree_in(var) + 1, Rational(0));
  for (const auto& [m, coef] : p.terms()) {
    if (m.without(var) != Monomial{}) {
      throw std::invalid_argument("polynomial is not univariate in " + var.name());
    }
    c[m.degree(var)] = coef;
  }
  return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly UniPoly::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x = -x;
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly upoly_compose_shift(const UniPoly& p, unsigned j) {
  if (j == 0 || p.degree() <= 0) return p;
  // (n+j)^k = sum_i C(k,i) j^(k-i) n^i
  const auto size = p.coefficients().size();
  std::vector<Rational> out(size, Rational(0));
  std::vector<Integer> jpow(size, Integer(1));
  for (std::size_t e = 1; e < size; ++e) jpow[e] = jpow[e - 1] * j;
  for (std::size_t k = 0; k < size; ++k) {
    const Rational& ck = p.coefficients()[k];
    if (ck == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) {
      out[i] += ck * Rational(binomial(k, i) * jpow[k - i]);
    }
  }
  return UniPoly(std::move(out));
}

}  // namespace ratrec
