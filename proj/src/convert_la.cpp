#include "ratrec/convert_la.hpp"

#include "ratrec/errors.hpp"

namespace ratrec {

GammaTable gamma_decompose(const HolonomicEq& h) {
  GammaTable g;
  g.order = h.order();
  g.degree = h.degree();
  const DiffPoly p = h.to_diffpoly();
  const auto d = static_cast<std::uint32_t>(g.degree);
  for (std::uint32_t j = 0; j <= d; ++j) {
    auto cs = shift(p, j).body.coeffs_in(VarId::n());
    cs.resize(d + 1);
    g.entries.push_back(std::move(cs));
  }
  return g;
}

PowerSystem build_power_system(const GammaTable& g) {
  PowerSystem sys;
  for (int j = 0; j < g.degree; ++j) {
    std::vector<MultiPoly> row;
    for (int k = 1; k <= g.degree; ++k) row.push_back(g.at(j, k));
    sys.matrix.push_back(std::move(row));
    sys.rhs.push_back(-g.at(j, 0));
  }
  return sys;
}

std::vector<RationalFunction> solve_powers(const PowerSystem& system) {
  return bareiss_solve(system.matrix, system.rhs);
}

HolonomicEq homogenize(const HolonomicEq& h) {
  if (h.is_homogeneous()) throw std::invalid_argument("homogenize: equation is already homogeneous");
  const int r = h.inhom()->degree();
  const int steps = r + 1;
  std::vector<UniPoly> out(static_cast<std::size_t>(h.order() + steps + 1));
  // Delta^(r+1) = sum_t C(r+1, t) (-1)^(r+1-t) sigma^t
  for (int t = 0; t <= steps; ++t) {
    Rational w(binomial(static_cast<unsigned long>(steps), static_cast<unsigned long>(t)));
    if ((steps - t) % 2) w = -w;
    for (int i = 0; i <= h.order(); ++i) {
      out[static_cast<std::size_t>(i + t)] =
          out[static_cast<std::size_t>(i + t)] + upoly_compose_shift(h.coeff(i), static_cast<unsigned>(t)) * UniPoly{w};
    }
  }
  return HolonomicEq(std::move(out));
}

RatRecEq convert_la(const HolonomicEq& h, const LaOptions& options) {
  auto finish = [&](const RatRecEq& r) {
    RatRecEq out = options.cancel_common_factor ? reduce_ratrec(r) : normalize_pair(r);
    if (!is_well_formed(out)) throw InternalContradiction("conversion produced an ill-formed equation");
    return out;
  };

  const int d = h.degree();
  const DiffPoly p = h.to_diffpoly();
  if (d == 0) return finish(to_ratrec_form(p));

  // sigma^d(p) with n^k replaced by rho_k and cleared of det(M) is the
  // determinant of the power system bordered by the row of sigma^d(p).
  const GammaTable gamma = gamma_decompose(h);
  const PowerSystem sys = build_power_system(gamma);
  PolyMatrix bordered = sys.matrix;
  for (int j = 0; j < d; ++j) bordered[static_cast<std::size_t>(j)].push_back(gamma.at(j, 0));
  std::vector<MultiPoly> last;
  for (int k = 1; k <= d; ++k) last.push_back(gamma.at(d, k));
  last.push_back(gamma.at(d, 0));
  bordered.push_back(std::move(last));
  MultiPoly cleared;
  try {
    cleared = bordered_determinant(std::move(bordered), options.deadline);
  } catch (const SingularSystem&) {
    if (h.is_homogeneous()) throw;
    return convert_la(homogenize(h), options);
  }

  const auto top = VarId::shift(static_cast<std::uint32_t>(h.order() + d));
  if (cleared.coeff_in(top, 1).is_zero()) {
    throw InternalContradiction("coefficient of the top shift vanished after substitution");
  }
  return finish(to_ratrec_form(DiffPoly(std::move(cleared))));
}

}  // namespace ratrec
