#include "ratrec/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ratrec {

std::string VarId::name() const {
  if (is_n()) return "n";
  if (rank_ == 0) return "s(n)";
  return "s(n+" + std::to_string(rank_) + ")";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(VarId v, std::uint32_t exp) {
  if (exp > 0) factors_.push_back({v, exp});
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.var > b.var; });
  Monomial m;
  for (const auto& f : factors) {
    if (f.exp == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().var == f.var) {
      m.factors_.back().exp += f.exp;
    } else {
      m.factors_.push_back(f);
    }
  }
  return m;
}

std::uint32_t Monomial::degree(VarId v) const {
  for (const auto& f : factors_) {
    if (f.var == v) return f.exp;
    if (f.var < v) break;
  }
  return 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.exp;
  return d;
}

std::uint32_t Monomial::shift_degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) {
    if (!f.var.is_n()) d += f.exp;
  }
  return d;
}

std::optional<VarId> Monomial::top_variable() const {
  if (factors_.empty()) return std::nullopt;
  return factors_.front().var;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& f : factors_) {
    while (it != other.factors_.end() && it->var > f.var) ++it;
    if (it == other.factors_.end() || it->var != f.var || it->exp < f.exp) return false;
    ++it;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  auto it = divisor.factors_.begin();
  for (const auto& f : factors_) {
    if (it != divisor.factors_.end() && it->var == f.var) {
      if (it->exp > f.exp) throw std::logic_error("monomial division is not exact");
      if (it->exp < f.exp) r.factors_.push_back({f.var, f.exp - it->exp});
      ++it;
    } else {
      r.factors_.push_back(f);
    }
  }
  if (it != divisor.factors_.end()) throw std::logic_error("monomial division is not exact");
  return r;
}

Monomial Monomial::without(VarId v) const {
  Monomial r;
  for (const auto& f : factors_) {
    if (f.var != v) r.factors_.push_back(f);
  }
  return r;
}

Monomial Monomial::shifted(std::uint32_t j) const {
  Monomial r = *this;
  for (auto& f : r.factors_) {
    if (!f.var.is_n()) f.var = VarId::shift(f.var.shift_index() + j);
  }
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->var == j->var) {
      r.factors_.push_back({i->var, i->exp + j->exp});
      ++i;
      ++j;
    } else if (i->var > j->var) {
      r.factors_.push_back(*i++);
    } else {
      r.factors_.push_back(*j++);
    }
  }
  r.factors_.insert(r.factors_.end(), i, a.factors_.end());
  r.factors_.insert(r.factors_.end(), j, b.factors_.end());
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->var == j->var) {
      r.factors_.push_back({i->var, std::max(i->exp, j->exp)});
      ++i;
      ++j;
    } else if (i->var > j->var) {
      r.factors_.push_back(*i++);
    } else {
      r.factors_.push_back(*j++);
    }
  }
  r.factors_.insert(r.factors_.end(), i, a.factors_.end());
  r.factors_.insert(r.factors_.end(), j, b.factors_.end());
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->var == j->var) return false;
    if (i->var > j->var) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

MultiPoly MultiPoly::variable(VarId v, std::uint32_t exp) {
  return monomial(Monomial(v, exp), Rational(1));
}

MultiPoly MultiPoly::monomial(Monomial m, Rational c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first > b.first; });
  MultiPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  return p;
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.front().second;
}

std::uint32_t MultiPoly::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(v));
  return d;
}

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

std::uint32_t MultiPoly::shift_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.shift_degree());
  return d;
}

bool MultiPoly::contains(VarId v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [v](const Term& t) { return t.first.degree(v) > 0; });
}

std::vector<VarId> MultiPoly::variables() const {
  std::vector<VarId> vs;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) vs.push_back(f.var);
  }
  std::sort(vs.begin(), vs.end(), std::greater<>{});
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::optional<std::uint32_t> MultiPoly::max_shift() const {
  std::optional<std::uint32_t> best;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) {
      if (!f.var.is_n()) {
        if (!best || f.var.shift_index() > *best) best = f.var.shift_index();
        break;  // factors are rank-descending: first shift is the largest
      }
    }
  }
  return best;
}

MultiPoly MultiPoly::coeff_in(VarId v, std::uint32_t k) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    if (m.degree(v) == k) out.emplace_back(m.without(v), c);
  }
  return from_terms(std::move(out));
}

std::vector<MultiPoly> MultiPoly::coeffs_in(VarId v) const {
  std::vector<std::vector<Term>> buckets(degree_in(v) + 1);
  for (const auto& [m, c] : terms_) buckets[m.degree(v)].emplace_back(m.without(v), c);
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Rational MultiPoly::evaluate(const std::function<Rational(VarId)>& value_of) const {
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& f : m.factors()) {
      Rational base = value_of(f.var);
      Rational pw;
      mpz_pow_ui(mpq_numref(pw.get_mpq_t()), base.get_num_mpz_t(), f.exp);
      mpz_pow_ui(mpq_denref(pw.get_mpq_t()), base.get_den_mpz_t(), f.exp);
      t *= pw;
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(VarId v, const MultiPoly& replacement) const {
  auto cs = coeffs_in(v);
  MultiPoly result;
  for (std::size_t k = cs.size(); k-- > 0;) {  // Horner in v
    result = result * replacement + cs[k];
  }
  return result;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

std::vector<MultiPoly::Term> MultiPoly::merge(const std::vector<Term>& a, const std::vector<Term>& b,
                                              bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    auto cmp = i->first <=> j->first;
    if (cmp > 0) {
      out.push_back(*i++);
    } else if (cmp < 0) {
      out.emplace_back(j->first, subtract ? Rational(-j->second) : j->second);
      ++j;
    } else {
      Rational c = subtract ? Rational(i->second - j->second) : Rational(i->second + j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  for (; i != a.end(); ++i) out.push_back(*i);
  for (; j != b.end(); ++j) out.emplace_back(j->first, subtract ? Rational(-j->second) : j->second);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms_[0].first.is_one()) return b * a.terms_[0].second;
  if (b.size() == 1 && b.terms_[0].first.is_one()) return a * b.terms_[0].second;
  std::vector<MultiPoly::Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) products.emplace_back(ma * mb, ca * cb);
  }
  return MultiPoly::from_terms(std::move(products));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

bool lex_less(const MultiPoly& a, const MultiPoly& b) {
  const auto n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [ma, ca] = a.terms_[i];
    const auto& [mb, cb] = b.terms_[i];
    if (ma != mb) return ma < mb;
    if (ca != cb) return ca < cb;
  }
  return a.size() < b.size();
}

// ----------------------------------------------------------- free functions

MultiPoly coeff_in_var(const MultiPoly& p, VarId v, std::uint32_t k) { return p.coeff_in(v, k); }

Rational content(const MultiPoly& p) {
  if (p.is_zero()) return Rational(1);
  Integer g = 0;
  Integer l = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(g, l);
  r.canonicalize();
  return r;
}

MultiPoly normalize(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Rational c = content(p);
  if (p.leading_coefficient() < 0) c = -c;
  return p * Rational(1 / c);
}

Rational evaluate_at(const MultiPoly& p, std::span<const Rational> shift_values, const Rational& n_value) {
  return p.evaluate([&](VarId v) -> Rational {
    if (v.is_n()) return n_value;
    if (v.shift_index() >= shift_values.size()) {
      throw std::out_of_range("no value supplied for " + v.name());
    }
    return shift_values[v.shift_index()];
  });
}

}  // namespace ratrec
