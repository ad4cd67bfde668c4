#include "ratrec/algebra.hpp"
#include "ratrec/convert_gb.hpp"
#include "ratrec/errors.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace ratrec {

const MultiPoly::Term& leading_term(const MultiPoly& p, MonomialOrder order) {
  if (p.is_zero()) throw std::invalid_argument("leading_term: zero polynomial");
  if (order == MonomialOrder::Lex) return p.leading_term();
  return *std::max_element(p.terms().begin(), p.terms().end(), [order](const auto& x, const auto& y) {
    return compare_monomials(x.first, y.first, order) < 0;
  });
}

int compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::Lex) {
    auto c = a <=> b;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  const VarId n = VarId::n();
  if (a.degree(n) != b.degree(n)) return a.degree(n) < b.degree(n) ? -1 : 1;
  if (a.shift_degree() != b.shift_degree()) return a.shift_degree() < b.shift_degree() ? -1 : 1;
  // Reverse lex: the first difference from the lowest shift decides, and a
  // larger exponent there makes the monomial smaller.
  const auto fa = a.factors();
  const auto fb = b.factors();
  const std::size_t sa = !fa.empty() && fa.front().var.is_n() ? 1 : 0;
  const std::size_t sb = !fb.empty() && fb.front().var.is_n() ? 1 : 0;
  std::size_t ia = fa.size();
  std::size_t ib = fb.size();
  while (ia > sa && ib > sb) {
    const auto& x = fa[ia - 1];
    const auto& y = fb[ib - 1];
    if (x.var != y.var) return x.var < y.var ? -1 : 1;
    if (x.exp != y.exp) return x.exp > y.exp ? -1 : 1;
    --ia;
    --ib;
  }
  if (ia > sa) return -1;
  if (ib > sb) return 1;
  return 0;
}

namespace {

// Buchberger works on integer polynomials kept primitive with positive
// leading coefficient; reductions are fraction-free.
struct ITerm {
  Monomial m;
  Integer c;
};
using IPoly = std::vector<ITerm>;

IPoly to_ipoly(const MultiPoly& p, MonomialOrder order) {
  IPoly out;
  out.reserve(p.size());
  const MultiPoly q = normalize(p);
  for (const auto& [m, c] : q.terms()) out.push_back({m, c.get_num()});
  if (order != MonomialOrder::Lex) {
    std::sort(out.begin(), out.end(),
              [order](const ITerm& x, const ITerm& y) { return compare_monomials(x.m, y.m, order) > 0; });
    if (out.front().c < 0) {
      for (auto& t : out) t.c = -t.c;
    }
  }
  return out;
}

MultiPoly to_multipoly(const IPoly& p) {
  std::vector<MultiPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.emplace_back(t.m, Rational(t.c));
  return MultiPoly::from_terms(std::move(terms));
}

void make_primitive(IPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.front().c < 0) g = -g;
  if (g != 1) {
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
}

// a * u * f[fi..] - b * v * g[gi..]
IPoly lin_comb(MonomialOrder order, const Integer& a, const Monomial& u, const IPoly& f, std::size_t fi,
               const Integer& b, const Monomial& v, const IPoly& g, std::size_t gi) {
  IPoly out;
  out.reserve((f.size() - fi) + (g.size() - gi));
  const bool u_one = u.is_one();
  const bool v_one = v.is_one();
  const bool a_one = a == 1;
  auto mf = [&](std::size_t i) { return u_one ? f[i].m : u * f[i].m; };
  auto mg = [&](std::size_t i) { return v_one ? g[i].m : v * g[i].m; };
  Monomial cf, cg;
  if (fi < f.size()) cf = mf(fi);
  if (gi < g.size()) cg = mg(gi);
  while (fi < f.size() && gi < g.size()) {
    const int cmp = compare_monomials(cf, cg, order);
    if (cmp > 0) {
      out.push_back({std::move(cf), a_one ? f[fi].c : Integer(a * f[fi].c)});
      if (++fi < f.size()) cf = mf(fi);
    } else if (cmp < 0) {
      Integer c;
      mpz_mul(c.get_mpz_t(), b.get_mpz_t(), g[gi].c.get_mpz_t());
      mpz_neg(c.get_mpz_t(), c.get_mpz_t());
      out.push_back({std::move(cg), std::move(c)});
      if (++gi < g.size()) cg = mg(gi);
    } else {
      Integer c;
      mpz_mul(c.get_mpz_t(), a.get_mpz_t(), f[fi].c.get_mpz_t());
      mpz_submul(c.get_mpz_t(), b.get_mpz_t(), g[gi].c.get_mpz_t());
      if (c != 0) out.push_back({std::move(cf), std::move(c)});
      if (++fi < f.size()) cf = mf(fi);
      if (++gi < g.size()) cg = mg(gi);
    }
  }
  while (fi < f.size()) {
    out.push_back({mf(fi), a_one ? f[fi].c : Integer(a * f[fi].c)});
    ++fi;
  }
  while (gi < g.size()) {
    Integer c;
    mpz_mul(c.get_mpz_t(), b.get_mpz_t(), g[gi].c.get_mpz_t());
    mpz_neg(c.get_mpz_t(), c.get_mpz_t());
    out.push_back({mg(gi), std::move(c)});
    ++gi;
  }
  return out;
}

class Reducer {
 public:
  Reducer(const GroebnerLimits* limits, MonomialOrder order) : limits_(limits), order_(order) {}

  // Full reduction of f modulo the reducers; result is primitive.
  IPoly reduce(IPoly f, const std::vector<const IPoly*>& reducers) {
    IPoly done;
    std::size_t pos = 0;
    const Monomial one;
    while (pos < f.size()) {
      poll(f[pos].c, f.size() + done.size());
      const ITerm& lt = f[pos];
      const IPoly* best = nullptr;
      for (const IPoly* g : reducers) {
        if (g->front().m.divides(lt.m) && (!best || g->size() < best->size())) best = g;
      }
      if (!best) {
        done.push_back(std::move(f[pos]));
        ++pos;
        continue;
      }
      const Integer& lg = best->front().c;
      Integer gc;
      mpz_gcd(gc.get_mpz_t(), lt.c.get_mpz_t(), lg.get_mpz_t());
      Integer a = lg / gc;
      Integer b = lt.c / gc;
      Monomial t = lt.m / best->front().m;
      f = lin_comb(order_, a, one, f, pos + 1, b, t, *best, 1);
      pos = 0;
      if (a != 1) {
        for (auto& x : done) x.c *= a;
      }
      if (++since_content_ >= 16) {
        since_content_ = 0;
        remove_content(done, f);
      }
    }
    make_primitive(done);
    return done;
  }

 private:
  void poll(const Integer& c, std::size_t terms) {
    if (!limits_) return;
    if (terms > limits_->max_terms) throw CapExceeded("polynomial size cap exceeded");
    if ((++ticks_ & 31u) != 0) return;
    limits_->deadline.check();
    if (mpz_sizeinbase(c.get_mpz_t(), 2) > limits_->max_coeff_bits) {
      throw CapExceeded("coefficient bit-size cap exceeded");
    }
  }

  static void remove_content(IPoly& a, IPoly& b) {
    Integer g = 0;
    for (const IPoly* p : {&a, &b}) {
      for (const auto& t : *p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) return;
      }
    }
    if (g == 0) return;
    for (IPoly* p : {&a, &b}) {
      for (auto& t : *p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    }
  }

  const GroebnerLimits* limits_;
  MonomialOrder order_;
  unsigned ticks_ = 0;
  unsigned since_content_ = 0;
};

IPoly spoly(MonomialOrder order, const IPoly& f, const IPoly& g) {
  Monomial l = lcm(f.front().m, g.front().m);
  Integer gc;
  mpz_gcd(gc.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
  Integer a = g.front().c / gc;
  Integer b = f.front().c / gc;
  return lin_comb(order, a, l / f.front().m, f, 1, b, l / g.front().m, g, 1);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const GroebnerLimits& limits, MonomialOrder order)
      : limits_(limits), order_(order), reducer_(&limits, order) {}

  void add_input(const MultiPoly& p) {
    if (p.is_zero()) return;
    IPoly h = reducer_.reduce(to_ipoly(p, order_), actives());
    if (!h.empty()) insert(std::move(h));
  }

  using Accept = std::function<bool(const GroebnerBasis&)>;

  // With `accept`, pairs are completed one shift degree at a time; after each
  // degree the inter-reduced partial basis is offered and run() returns it
  // once accepted.
  std::optional<GroebnerBasis> run(const Accept& accept = {}) {
    std::uint32_t done_degree = 0;
    bool fresh = true;
    while (!pairs_.empty()) {
      limits_.deadline.check();
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [this](const Pair& x, const Pair& y) {
        if (x.lcm.shift_degree() != y.lcm.shift_degree()) return x.lcm.shift_degree() < y.lcm.shift_degree();
        const int c = compare_monomials(x.lcm, y.lcm, order_);
        if (c != 0) return c < 0;
        return std::tie(x.j, x.i) < std::tie(y.j, y.i);
      });
      const std::uint32_t degree = it->lcm.shift_degree();
      if (accept && degree > done_degree) {
        if (fresh) {
          GroebnerBasis partial = snapshot();
          if (accept(partial)) return partial;
        }
        done_degree = degree;
        fresh = false;
      }
      Pair pr = std::move(*it);
      *it = std::move(pairs_.back());
      pairs_.pop_back();
      IPoly h = reducer_.reduce(spoly(order_, polys_[pr.i], polys_[pr.j]), actives());
      if (!h.empty()) {
        insert(std::move(h));
        fresh = true;
      }
    }
    return std::nullopt;
  }

  GroebnerBasis snapshot() const {
    Buchberger copy(*this);
    return copy.finish();
  }

  GroebnerBasis finish() {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) idx.push_back(i);
    }
    for (std::size_t i : idx) {
      std::vector<const IPoly*> others;
      for (std::size_t k : idx) {
        if (k != i) others.push_back(&polys_[k]);
      }
      polys_[i] = reducer_.reduce(std::move(polys_[i]), others);
    }
    std::sort(idx.begin(), idx.end(), [this](std::size_t a, std::size_t b) {
      return compare_monomials(polys_[a].front().m, polys_[b].front().m, order_) < 0;
    });
    GroebnerBasis basis;
    basis.order = order_;
    for (std::size_t i : idx) basis.generators.push_back(to_multipoly(polys_[i]));
    return basis;
  }

 private:
  std::vector<const IPoly*> actives() const {
    std::vector<const IPoly*> out;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) out.push_back(&polys_[i]);
    }
    return out;
  }

  // Gebauer-Moeller update.
  void insert(IPoly h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(0);
    const Monomial& lh = polys_[hi].front().m;

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      const Monomial& lg = polys_[g].front().m;
      cands.push_back({g, lcm(lh, lg), coprime(lh, lg)});
    }
    // Keep (h, g1) if coprime or no other candidate's lcm divides its lcm.
    std::vector<Cand> kept;
    for (std::size_t c = 0; c < cands.size(); ++c) {
      const Cand& c1 = cands[c];
      bool keep = c1.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t e = c + 1; e < cands.size() && keep; ++e) {
          if (cands[e].lcm.divides(c1.lcm)) keep = false;
        }
        for (std::size_t e = 0; e < kept.size() && keep; ++e) {
          if (kept[e].lcm.divides(c1.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(c1);
    }
    // Old pairs made redundant by h.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      return lcm(polys_[p.i].front().m, lh) != p.lcm && lcm(polys_[p.j].front().m, lh) != p.lcm;
    });
    for (auto& c : kept) {
      if (c.coprime) continue;
      pairs_.push_back({c.g, hi, std::move(c.lcm)});
      if (++pair_count_ > limits_.max_pairs) throw CapExceeded("critical pair cap exceeded");
    }
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(polys_[g].front().m)) active_[g] = 0;
    }
    active_[hi] = 1;
  }

  const GroebnerLimits& limits_;
  MonomialOrder order_;
  Reducer reducer_;
  std::vector<IPoly> polys_;
  std::vector<char> active_;
  std::vector<Pair> pairs_;
  std::size_t pair_count_ = 0;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, const GroebnerLimits& limits, MonomialOrder order) {
  if (std::all_of(gens.begin(), gens.end(), [](const MultiPoly& g) { return g.is_zero(); })) {
    throw std::invalid_argument("buchberger: no nonzero generator");
  }
  Buchberger bb(limits, order);
  for (const auto& g : gens) bb.add_input(g);
  bb.run();
  return bb.finish();
}

GroebnerBasis buchberger_by_degree(const std::vector<MultiPoly>& gens, const GroebnerLimits& limits,
                                   MonomialOrder order, const std::function<bool(const GroebnerBasis&)>& accept) {
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const auto d = g.leading_monomial().shift_degree();
    for (const auto& [m, c] : g.terms()) {
      if (m.shift_degree() != d) throw std::invalid_argument("buchberger_by_degree: generator not homogeneous in the shifts");
    }
  }
  if (std::all_of(gens.begin(), gens.end(), [](const MultiPoly& g) { return g.is_zero(); })) {
    throw std::invalid_argument("buchberger: no nonzero generator");
  }
  Buchberger bb(limits, order);
  for (const auto& g : gens) bb.add_input(g);
  if (auto partial = bb.run(accept)) return std::move(*partial);
  return bb.finish();
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis, MonomialOrder order) {
  std::vector<IPoly> store;
  store.reserve(basis.size());
  for (const auto& b : basis) {
    if (!b.is_zero()) store.push_back(to_ipoly(b, order));
  }
  std::vector<const IPoly*> reducers;
  for (const auto& s : store) reducers.push_back(&s);
  if (f.is_zero()) return {};
  Reducer r(nullptr, order);
  return to_multipoly(r.reduce(to_ipoly(f, order), reducers));
}

MultiPoly s_polynomial(const MultiPoly& a, const MultiPoly& b, MonomialOrder order) {
  const auto& [ma, ca] = leading_term(a, order);
  const auto& [mb, cb] = leading_term(b, order);
  Monomial l = lcm(ma, mb);
  MultiPoly ta = MultiPoly::monomial(l / ma, 1 / ca);
  MultiPoly tb = MultiPoly::monomial(l / mb, 1 / cb);
  return ta * a - tb * b;
}

bool is_groebner(const GroebnerBasis& basis) {
  const auto& g = basis.generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (coprime(leading_term(g[i], basis.order).first, leading_term(g[j], basis.order).first)) continue;
      if (!normal_form(s_polynomial(g[i], g[j], basis.order), g, basis.order).is_zero()) return false;
    }
  }
  return true;
}

std::vector<MultiPoly> eliminate_n(const GroebnerBasis& basis) {
  std::vector<MultiPoly> out;
  for (const auto& g : basis.generators) {
    if (!g.contains(VarId::n())) out.push_back(g);
  }
  return out;
}

std::optional<DiffPoly> pick_simple_ratrec(const std::vector<MultiPoly>& gens) {
  std::optional<DiffPoly> best;
  std::tuple<int, int, std::size_t> best_key{};
  for (const auto& g : gens) {
    if (!is_simple_ratrec(DiffPoly(g))) continue;
    const VarId top = VarId::shift(*g.max_shift());
    MultiPoly reduced = primitive_part_in(g, top);
    std::tuple<int, int, std::size_t> key{static_cast<int>(top.shift_index()),
                                          static_cast<int>(reduced.total_degree()), reduced.size()};
    if (!best || key < best_key || (key == best_key && lex_less(reduced, best->body))) {
      best = DiffPoly(std::move(reduced));
      best_key = key;
    }
  }
  return best;
}

}  // namespace ratrec
