#include "packed_poly.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace ratrec::packed {

namespace {

constexpr std::size_t kWords = kMaxVars / 8;
constexpr std::uint64_t kHigh = 0x8080808080808080ull;

std::array<std::uint64_t, kWords> words(const Key& k) {
  std::array<std::uint64_t, kWords> w;
  std::memcpy(w.data(), k.e.data(), kMaxVars);
  return w;
}

Key from_words(const std::array<std::uint64_t, kWords>& w) {
  Key k;
  std::memcpy(k.e.data(), w.data(), kMaxVars);
  return k;
}

// Heap entry for the product a[i] * b[j].
struct Cell {
  Key k;
  std::uint32_t i;
  std::uint32_t j;
};

struct CellLess {
  bool operator()(const Cell& x, const Cell& y) const { return x.k < y.k; }
};

using Heap = std::priority_queue<Cell, std::vector<Cell>, CellLess>;

}  // namespace

Key operator+(const Key& a, const Key& b) {
  auto x = words(a);
  const auto y = words(b);
  for (std::size_t i = 0; i < kWords; ++i) x[i] += y[i];
  return from_words(x);
}

Key operator-(const Key& a, const Key& b) {
  auto x = words(a);
  const auto y = words(b);
  for (std::size_t i = 0; i < kWords; ++i) x[i] -= y[i];
  return from_words(x);
}

bool divides(const Key& a, const Key& b) {
  const auto x = words(a);
  const auto y = words(b);
  for (std::size_t i = 0; i < kWords; ++i) {
    if ((((y[i] | kHigh) - x[i]) & kHigh) != kHigh) return false;
  }
  return true;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  const Poly& x = a.size() <= b.size() ? a : b;
  const Poly& y = a.size() <= b.size() ? b : a;
  Poly out;
  Heap heap;
  heap.push({x[0].k + y[0].k, 0, 0});
  Integer acc;
  while (!heap.empty()) {
    const Key k = heap.top().k;
    acc = 0;
    while (!heap.empty() && heap.top().k == k) {
      const Cell c = heap.top();
      heap.pop();
      mpz_addmul(acc.get_mpz_t(), x[c.i].c.get_mpz_t(), y[c.j].c.get_mpz_t());
      if (c.j == 0 && c.i + 1 < x.size()) heap.push({x[c.i + 1].k + y[0].k, c.i + 1, 0});
      if (c.j + 1 < y.size()) heap.push({x[c.i].k + y[c.j + 1].k, c.i, c.j + 1});
    }
    if (acc != 0) out.push_back({k, acc});
  }
  return out;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const int cmp = compare(a[i].k, b[j].k);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].k, -b[j].c});
      ++j;
    } else {
      Integer c = a[i].c - b[j].c;
      if (c != 0) out.push_back({a[i].k, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].k, -b[j].c});
  return out;
}

Poly mul_sub(const Poly& a, const Poly& b, const Poly& c, const Poly& d) { return sub(mul(a, b), mul(c, d)); }

std::optional<Poly> div_exact(const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  Poly q;
  if (a.empty()) return q;
  const Key& lk = b[0].k;
  const Integer& lc = b[0].c;
  // The heap holds the products q[i] * b[j], j >= 1, still to be subtracted.
  Heap heap;
  std::size_t ai = 0;
  Integer acc;
  while (ai < a.size() || !heap.empty()) {
    Key k;
    if (heap.empty() || (ai < a.size() && heap.top().k < a[ai].k)) {
      k = a[ai].k;
    } else {
      k = heap.top().k;
    }
    acc = 0;
    if (ai < a.size() && a[ai].k == k) acc = a[ai++].c;
    while (!heap.empty() && heap.top().k == k) {
      const Cell c = heap.top();
      heap.pop();
      mpz_submul(acc.get_mpz_t(), q[c.i].c.get_mpz_t(), b[c.j].c.get_mpz_t());
      if (c.j + 1 < b.size()) heap.push({q[c.i].k + b[c.j + 1].k, c.i, c.j + 1});
    }
    if (acc == 0) continue;
    if (!divides(lk, k) || !mpz_divisible_p(acc.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), acc.get_mpz_t(), lc.get_mpz_t());
    q.push_back({k - lk, std::move(qc)});
    if (b.size() > 1) {
      const auto i = static_cast<std::uint32_t>(q.size() - 1);
      heap.push({q[i].k + b[1].k, i, 1});
    }
  }
  return q;
}

std::optional<Layout> Layout::for_variables(std::vector<VarId> vars) {
  if (vars.size() > kMaxVars) return std::nullopt;
  std::sort(vars.begin(), vars.end(), std::greater<>());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  Layout l;
  l.vars_ = std::move(vars);
  return l;
}

std::size_t Layout::index_of(VarId v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v, std::greater<>());
  if (it == vars_.end() || *it != v) throw std::invalid_argument("variable outside the packing layout");
  return static_cast<std::size_t>(it - vars_.begin());
}

Poly Layout::pack(const MultiPoly& p) const {
  Poly out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    if (c.get_den() != 1) throw std::invalid_argument("pack: non-integer coefficient");
    Term t{Key{}, c.get_num()};
    for (const auto& f : m.factors()) {
      if (f.exp > kMaxExp) throw std::invalid_argument("pack: exponent too large");
      t.k.e[index_of(f.var)] = static_cast<std::uint8_t>(f.exp);
    }
    out.push_back(std::move(t));
  }
  return out;
}

MultiPoly Layout::unpack(const Poly& p) const {
  std::vector<MultiPoly::Term> terms;
  terms.reserve(p.size());
  std::vector<Monomial::Factor> factors;
  for (const auto& t : p) {
    factors.clear();
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.k.e[i]) factors.push_back({vars_[i], t.k.e[i]});
    }
    terms.emplace_back(Monomial::from_factors(factors), Rational(t.c));
  }
  return MultiPoly::from_terms(std::move(terms));
}

}  // namespace ratrec::packed
