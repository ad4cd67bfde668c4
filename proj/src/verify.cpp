#include "ratrec/verify.hpp"

#include "ratrec/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <ctime>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ratrec {

SequenceTable unroll_holonomic(const HolonomicEq& h, std::span<const Rational> inits, std::size_t N) {
  const int l = h.order();
  if (l < 1) throw Unsupported("order-0 equations define no recursion");
  const auto ul = static_cast<std::size_t>(l);
  if (inits.size() != ul) {
    throw ArityError("expected " + std::to_string(l) + " initial values, got " + std::to_string(inits.size()));
  }
  if (N < ul) throw std::invalid_argument("unroll_holonomic: N is below the order");

  SequenceTable table;
  table.terms.resize(N + 1);
  for (std::size_t i = 0; i < ul; ++i) table.terms[i] = inits[i];
  for (std::size_t n = ul; n <= N; ++n) {
    const Rational k(static_cast<unsigned long>(n - ul));
    const Rational lead = h.coeff(l).evaluate(k);
    if (lead == 0) {
      table.first_singularity = Singularity{n, "leading coefficient vanishes"};
      break;
    }
    Rational acc = h.inhom() ? h.inhom()->evaluate(k) : Rational(0);
    for (int i = 0; i < l; ++i) acc += h.coeff(i).evaluate(k) * *table.terms[n - ul + static_cast<std::size_t>(i)];
    table.terms[n] = -acc / lead;
  }
  return table;
}

SequenceTable unroll_ratrec(const RatRecEq& r, std::span<const Rational> inits, std::size_t N) {
  const auto m = static_cast<std::size_t>(r.order);
  if (inits.size() != m) {
    throw ArityError("expected " + std::to_string(m) + " initial values, got " + std::to_string(inits.size()));
  }
  SequenceTable table;
  table.terms.resize(std::max(N + 1, m));
  std::vector<Rational> window(inits.begin(), inits.end());
  for (std::size_t i = 0; i < m; ++i) table.terms[i] = inits[i];
  for (std::size_t n = m; n <= N; ++n) {
    auto next = r.evaluate(window);
    if (!next) {
      table.first_singularity = Singularity{n, "denominator vanishes"};
      break;
    }
    table.terms[n] = *next;
    if (m > 0) {
      window.erase(window.begin());
      window.push_back(*next);
    }
  }
  return table;
}

namespace {

std::optional<std::vector<Rational>> window_at(const SequenceTable& seq, std::size_t n, std::size_t len) {
  std::vector<Rational> w;
  w.reserve(len);
  for (std::size_t i = n; i < n + len; ++i) {
    if (!seq.defined(i)) return std::nullopt;
    w.push_back(seq.at(i));
  }
  return w;
}

}  // namespace

IndexRange full_range(const SequenceTable& seq, int order) {
  const auto span = static_cast<std::size_t>(std::max(order, 0));
  if (seq.size() <= span) return {1, 0};
  return {0, seq.size() - 1 - span};
}

VerificationReport check_annihilates(const RatRecEq& eq, const SequenceTable& seq, IndexRange range) {
  VerificationReport rep;
  rep.range = range;
  const auto m = static_cast<std::size_t>(eq.order);
  for (std::size_t n = range.first; n <= range.last && range.size() > 0; ++n) {
    auto w = window_at(seq, n, m + 1);
    if (!w) {
      rep.singular_indices.push_back(n);
      continue;
    }
    const Rational lhs = w->back();
    w->pop_back();
    auto rhs = eq.evaluate(*w);
    if (!rhs) {
      rep.singular_indices.push_back(n);
    } else if (*rhs == lhs) {
      ++rep.hold_count;
    } else {
      rep.violations.push_back({n, lhs, *rhs});
    }
  }
  return rep;
}

VerificationReport check_annihilates(const DiffPoly& eq, const SequenceTable& seq, IndexRange range) {
  VerificationReport rep;
  rep.range = range;
  const auto top = eq.body.max_shift();
  const std::size_t len = top ? *top + 1 : 0;
  for (std::size_t n = range.first; n <= range.last && range.size() > 0; ++n) {
    auto w = window_at(seq, n, len);
    if (!w) {
      rep.singular_indices.push_back(n);
      continue;
    }
    const Rational value = evaluate_at(eq.body, *w, Rational(static_cast<unsigned long>(n)));
    if (value == 0) {
      ++rep.hold_count;
    } else {
      rep.violations.push_back({n, value, Rational(0)});
    }
  }
  return rep;
}

std::optional<CFinite> classify_cfinite(const RatRecEq& r) {
  if (r.den.is_zero() || !r.den.is_constant()) return std::nullopt;
  if (r.num.contains(VarId::n()) || r.num.total_degree() > 1) return std::nullopt;
  const Rational c = r.den.constant_value();
  CFinite out;
  out.constant = r.num.coeff_in(VarId::n(), 0).evaluate([](VarId) { return Rational(0); }) / c;
  for (int i = 0; i < r.order; ++i) {
    out.coefficients.push_back(r.num.coeff_in(VarId::shift(static_cast<std::uint32_t>(i)), 1).constant_value() / c);
  }
  return out;
}

RatRecEq reconstruct_cfinite(const CFinite& c) {
  RatRecEq r;
  r.order = static_cast<int>(c.coefficients.size());
  r.num = MultiPoly(c.constant);
  for (std::size_t i = 0; i < c.coefficients.size(); ++i) {
    r.num += var_s(static_cast<std::uint32_t>(i)) * c.coefficients[i];
  }
  r.den = MultiPoly(Rational(1));
  return r;
}

HolonomicEq random_holonomic(std::uint64_t seed, int max_order, int max_degree, const std::vector<Integer>& coeff_set,
                             bool exact_shape) {
  if (max_order < 1) throw std::invalid_argument("random_holonomic: max_order must be at least 1");
  if (max_degree < 0) throw std::invalid_argument("random_holonomic: max_degree must be nonnegative");
  if (std::none_of(coeff_set.begin(), coeff_set.end(), [](const Integer& z) { return z != 0; })) {
    throw std::invalid_argument("random_holonomic: coefficient set has no nonzero value");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto draw = [&]() -> const Integer& {
    return coeff_set[static_cast<std::size_t>(uniform(0, static_cast<int>(coeff_set.size()) - 1))];
  };
  auto draw_nonzero = [&]() -> const Integer& {
    for (;;) {
      const Integer& z = draw();
      if (z != 0) return z;
    }
  };

  const int l = exact_shape ? max_order : uniform(1, max_order);
  const int d = exact_shape ? max_degree : uniform(0, max_degree);
  std::vector<UniPoly> coeffs;
  for (int i = 0; i <= l; ++i) {
    std::vector<Rational> c;
    for (int k = 0; k <= d; ++k) c.emplace_back(draw());
    coeffs.emplace_back(std::move(c));
  }
  auto set_top = [&](int i) {
    std::vector<Rational> c = coeffs[static_cast<std::size_t>(i)].coefficients();
    c.resize(static_cast<std::size_t>(d) + 1);
    c[static_cast<std::size_t>(d)] = draw_nonzero();
    coeffs[static_cast<std::size_t>(i)] = UniPoly(std::move(c));
  };
  if (coeffs[static_cast<std::size_t>(l)].is_zero() || (exact_shape && coeffs[static_cast<std::size_t>(l)].degree() < d)) {
    set_top(l);
  }
  if (coeffs[0].is_zero()) set_top(0);
  return HolonomicEq(std::move(coeffs));
}

namespace {

double thread_cpu_seconds() {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + static_cast<double>(ts.tv_nsec) * 1e-9;
}

BenchRow run_one(const BenchInput& in, Method method, std::chrono::duration<double> timeout) {
  BenchRow row;
  row.id = in.id;
  row.method = method;
  ConvertOptions opts;
  opts.method = method;
  opts.timeout = timeout;
  const double start = thread_cpu_seconds();
  try {
    RatRecEq r = convert(in.eq, opts);
    row.cpu_seconds = thread_cpu_seconds() - start;
    row.order = r.order;
    row.degree = r.degree();
    row.status = "ok";
  } catch (const Timeout&) {
    row.status = "timeout";
  } catch (const NotFoundWithinBound&) {
    row.cpu_seconds = thread_cpu_seconds() - start;
    row.status = "not-found";
  } catch (const std::exception& e) {
    row.cpu_seconds = thread_cpu_seconds() - start;
    row.status = std::string("error: ") + e.what();
  }
  return row;
}

}  // namespace

std::vector<BenchRow> bench(const std::vector<BenchInput>& inputs, const std::vector<Method>& methods,
                            std::chrono::duration<double> timeout, unsigned workers) {
  if (timeout.count() <= 0) throw std::invalid_argument("bench: timeout must be positive");
  const std::size_t tasks = inputs.size() * methods.size();
  std::vector<BenchRow> rows(tasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks; t = next++) {
      rows[t] = run_one(inputs[t / methods.size()], methods[t % methods.size()], timeout);
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(tasks, 1))));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return rows;
}

std::string render_bench_table(const std::vector<BenchRow>& rows, std::chrono::duration<double> timeout) {
  std::size_t id_width = 5;
  for (const auto& r : rows) id_width = std::max(id_width, r.id.size());
  std::ostringstream out;
  char line[512];
  std::snprintf(line, sizeof line, "%-*s  %-6s  %10s  %5s  %6s  %s\n", static_cast<int>(id_width), "input", "method",
                "cpu_s", "order", "degree", "status");
  out << line;
  for (const auto& r : rows) {
    char cpu[32];
    if (r.cpu_seconds) {
      std::snprintf(cpu, sizeof cpu, "%.3f", *r.cpu_seconds);
    } else {
      std::snprintf(cpu, sizeof cpu, "%g+", timeout.count());
    }
    const std::string order = r.order ? std::to_string(*r.order) : "-";
    const std::string degree = r.degree ? std::to_string(*r.degree) : "-";
    std::snprintf(line, sizeof line, "%-*s  %-6s  %10s  %5s  %6s  %s\n", static_cast<int>(id_width), r.id.c_str(),
                  method_name(r.method), cpu, order.c_str(), degree.c_str(), r.status.c_str());
    out << line;
  }
  return out.str();
}

SomosResult somos_generate(const HolonomicEq& h, std::span<const Integer> inits, std::size_t N, Method method) {
  if (!h.is_homogeneous()) throw NotSomosEligible("equation has an inhomogeneous part");
  if (h.order() < 1) throw NotSomosEligible("equation has order 0");
  if (h.coeff(h.order()) != UniPoly{Rational(1)}) throw NotSomosEligible("leading coefficient is not 1");
  for (const auto& p : h.coeffs()) {
    for (const auto& c : p.coefficients()) {
      if (!is_integer(c)) throw NotSomosEligible("coefficient " + to_string(c) + " is not an integer");
    }
  }
  if (inits.size() != static_cast<std::size_t>(h.order())) {
    throw NotSomosEligible("expected " + std::to_string(h.order()) + " initial values");
  }
  std::vector<Rational> q(inits.begin(), inits.end());
  SomosResult out;
  out.table = unroll_holonomic(h, q, std::max(N, q.size()));
  for (std::size_t i = 0; i < out.table.size(); ++i) {
    if (!out.table.defined(i) || !is_integer(out.table.at(i))) {
      throw InternalContradiction("term " + std::to_string(i) + " is not an integer");
    }
  }
  ConvertOptions opts;
  opts.method = method;
  out.equation = convert(h, opts);
  out.report = check_annihilates(out.equation, out.table, full_range(out.table, out.equation.order));
  return out;
}

}  // namespace ratrec
