#include "ratrec/errors.hpp"
#include "ratrec/verify.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace ratrec;
using oracle::H;
using oracle::P;

TEST_CASE("unroll_holonomic examples") {
  const SequenceTable c = unroll_holonomic(H("(n+2)*s(n+1) - (4*n+2)*s(n)"), std::vector<Rational>{1}, 6);
  std::vector<Rational> cat;
  for (std::size_t i = 0; i < c.size(); ++i) cat.push_back(c.at(i));
  CHECK(cat == std::vector<Rational>{1, 1, 2, 5, 14, 42, 132});

  const SequenceTable f = unroll_holonomic(H("s(n+1) - (n+1)^2*s(n)"), std::vector<Rational>{1}, 4);
  CHECK(f.at(4) == 576);
  CHECK(f.at(3) == 36);

  const SequenceTable s = unroll_holonomic(H("(n-2)*s(n+1) - s(n)"), std::vector<Rational>{1}, 10);
  REQUIRE(s.first_singularity.has_value());
  CHECK(s.first_singularity->index == 3);
  CHECK(s.defined(2));
  CHECK_FALSE(s.defined(3));

  CHECK_THROWS_AS(unroll_holonomic(H("s(n+2) - s(n)"), std::vector<Rational>{1}, 5), ArityError);
}

TEST_CASE("unroll_holonomic handles inhomogeneous parts") {
  const SequenceTable t = unroll_holonomic(H("s(n+1) - s(n) - n"), std::vector<Rational>{0}, 20);
  for (long n = 0; n <= 20; ++n) CHECK(t.at(static_cast<std::size_t>(n)) == n * (n - 1) / 2);
}

TEST_CASE("unroll agrees with simulate and brute force") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const HolonomicEq h = oracle::random_holo(rng, 1 + t % 4, t % 4, 3);
    std::vector<Rational> inits;
    for (int i = 0; i < h.order(); ++i) inits.emplace_back(i - 1);
    const SequenceTable a = unroll_holonomic(h, inits, 50);
    const SequenceTable b = simulate_system(holo_to_system(h, inits), 50);
    const auto u = oracle::brute_terms(h, inits, 50);
    for (std::size_t n = 0; n < u.size(); ++n) CHECK(a.at(n) == u[n]);
    for (std::size_t n = 0; n <= 50; ++n) {
      if (a.defined(n) && b.defined(n)) CHECK(a.at(n) == b.at(n));
    }
  }
}

TEST_CASE("unroll_ratrec reproduces Catalan numbers") {
  const RatRecEq r = to_ratrec_form(DiffPoly(P("s(n+2)*(10*s(n) - s(n+1)) - 2*s(n+1)*(8*s(n) + s(n+1))")));
  const SequenceTable t = unroll_ratrec(r, std::vector<Rational>{1, 1}, 30);
  for (unsigned long n = 0; n <= 30; ++n) CHECK(t.at(n) == Rational(oracle::catalan(n)));
  CHECK_THROWS_AS(unroll_ratrec(r, std::vector<Rational>{1}, 30), ArityError);
}

TEST_CASE("check_annihilates") {
  const SequenceTable cat = unroll_holonomic(H("(n+2)*s(n+1) - (4*n+2)*s(n)"), std::vector<Rational>{1}, 102);
  const RatRecEq eq18 = to_ratrec_form(DiffPoly(P("s(n+2)*(10*s(n) - s(n+1)) - 2*s(n+1)*(8*s(n) + s(n+1))")));
  const VerificationReport ok = check_annihilates(eq18, cat, {0, 100});
  CHECK(ok.hold_count == 101);
  CHECK(ok.passed());
  CHECK(ok.singular_indices.empty());

  RatRecEq bad = eq18;
  bad.num += var_s(0);
  const VerificationReport ko = check_annihilates(bad, cat, {0, 100});
  CHECK_FALSE(ko.passed());
  CHECK(ko.hold_count + ko.singular_indices.size() + ko.violations.size() == ko.range.size());

  std::vector<Rational> alt;
  for (long n = 0; n <= 60; ++n) alt.emplace_back((n % 2 ? -1 : 1) + n);
  SequenceTable s;
  for (const auto& v : alt) s.terms.emplace_back(v);
  const RatRecEq cf = to_ratrec_form(DiffPoly(P("s(n+3) - s(n+2) - s(n+1) + s(n)")));
  const VerificationReport r = check_annihilates(cf, s, full_range(s, 3));
  CHECK(r.hold_count == 58);
  CHECK(r.passed());

  const DiffPoly holo(P("(n+2)*s(n+1) - (4*n+2)*s(n)"));
  const VerificationReport d = check_annihilates(holo, cat, full_range(cat, 1));
  CHECK(d.passed());
  CHECK(d.hold_count == 102);
}

TEST_CASE("check_annihilates routes vanishing denominators to singular indices") {
  SequenceTable s;
  for (int v : {2, 1, 1, 1, 3, 0}) s.terms.emplace_back(v);
  const RatRecEq r = to_ratrec_form(DiffPoly(P("s(n)*s(n+1) - s(n+1)")));
  const VerificationReport rep = check_annihilates(r, s, full_range(s, 1));
  CHECK(rep.singular_indices == std::vector<std::size_t>{1, 2, 3});
  CHECK(rep.violations.size() == 1);
  CHECK(rep.hold_count + rep.singular_indices.size() + rep.violations.size() == rep.range.size());
}

TEST_CASE("classify_cfinite") {
  const RatRecEq m3 = to_ratrec_form(DiffPoly(P("s(n+5) - s(n) + 3*s(n+1) - 4*s(n+2) + 4*s(n+3) - 3*s(n+4)")));
  const auto c = classify_cfinite(m3);
  REQUIRE(c.has_value());
  CHECK(c->constant == 0);
  CHECK(c->coefficients == std::vector<Rational>{1, -3, 4, -4, 3});

  const RatRecEq p5 = convert(H("s(n) - 96*n^5 + 9*n^4 + 93*n^3 + 81*n^2 + 16*n + 86"));
  const auto c5 = classify_cfinite(p5);
  REQUIRE(c5.has_value());
  CHECK(c5->constant == 11520);
  CHECK(c5->coefficients == std::vector<Rational>{1, -5, 10, -10, 5});

  CHECK_FALSE(classify_cfinite(to_ratrec_form(DiffPoly(P("s(n+2)*(10*s(n) - s(n+1)) - 2*s(n+1)*(8*s(n) + s(n+1))"))))
                  .has_value());
}

TEST_CASE("classify_cfinite round-trips") {
  for (const char* text : {"s(n+3) - s(n+2) - s(n+1) + s(n)", "2*s(n+2) - 3*s(n) + 5", "7*s(n+1) - 1/3*s(n) - 2/9"}) {
    const RatRecEq r = normalize_pair(to_ratrec_form(DiffPoly(P(text))));
    const auto c = classify_cfinite(r);
    REQUIRE(c.has_value());
    CHECK(normalize_pair(reconstruct_cfinite(*c)) == r);
  }
}

TEST_CASE("random_holonomic") {
  CHECK(random_holonomic(5, 10, 5) == random_holonomic(5, 10, 5));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const HolonomicEq h = random_holonomic(seed, 4, 3);
    CHECK(h.order() >= 1);
    CHECK(h.order() <= 4);
    CHECK(h.degree() <= 3);
    CHECK_FALSE(h.coeff(h.order()).is_zero());
    CHECK(random_holonomic(seed, 3, 0).degree() == 0);
    const HolonomicEq e = random_holonomic(seed, 10, 5, {-1, 0, 1}, true);
    CHECK(e.order() == 10);
    CHECK(e.degree() == 5);
    for (const auto& p : e.coeffs())
      for (const auto& c : p.coefficients()) CHECK((c == -1 || c == 0 || c == 1));
  }
}

TEST_CASE("bench produces one row per task") {
  const std::vector<BenchInput> in = {{"cat", H("(n+2)*s(n+1) - (4*n+2)*s(n)")}, {"fac2", H("s(n+1) - (n+1)^2*s(n)")}};
  const auto rows = bench(in, {Method::LA, Method::GB}, std::chrono::seconds(30), 2);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].id == "cat");
  CHECK(rows[0].method == Method::LA);
  CHECK(rows[3].method == Method::GB);
  for (const auto& r : rows) {
    CHECK(r.status == "ok");
    CHECK(r.cpu_seconds.has_value());
  }
  CHECK(rows[2].order == 3);
  CHECK(rows[3].order == 3);
  const auto again = bench(in, {Method::LA, Method::GB}, std::chrono::seconds(30), 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].order == again[i].order);
    CHECK(rows[i].degree == again[i].degree);
  }
}

TEST_CASE("bench reports timeouts as rows") {
  const std::vector<BenchInput> in = {{"fac4", H("s(n+1) - (n+1)^4*s(n)")}};
  const auto rows = bench(in, {Method::GB}, std::chrono::duration<double>(1e-6), 1);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].status == "timeout");
  CHECK_FALSE(rows[0].cpu_seconds.has_value());
  CHECK_FALSE(rows[0].order.has_value());
  const std::string table = render_bench_table(rows, std::chrono::seconds(300));
  CHECK(table.find("300+") != std::string::npos);
}

TEST_CASE("somos_generate") {
  const SomosResult f = somos_generate(H("s(n+1) - (n+1)*s(n)"), std::vector<Integer>{1}, 20);
  for (unsigned long n = 0; n <= 20; ++n) CHECK(f.table.at(n) == Rational(oracle::factorial(n)));
  CHECK(oracle::proportional(f.equation.cleared().body, P("s(n)*s(n+2) - s(n+1)*(s(n+1) + s(n))")));
  CHECK(f.report.passed());

  const SomosResult g = somos_generate(H("s(n+2) - (n+1)*s(n)"), std::vector<Integer>{1, 1}, 30);
  for (std::size_t i = 0; i < g.table.size(); ++i) CHECK(is_integer(g.table.at(i)));
  CHECK(g.report.passed());

  CHECK_THROWS_AS(somos_generate(H("2*s(n+1) - s(n)"), std::vector<Integer>{1}, 5), NotSomosEligible);
  CHECK_THROWS_AS(somos_generate(H("s(n+1) - 1/2*s(n)"), std::vector<Integer>{1}, 5), NotSomosEligible);
  CHECK_THROWS_AS(somos_generate(H("s(n+1) - s(n) - n"), std::vector<Integer>{1}, 5), NotSomosEligible);
}
