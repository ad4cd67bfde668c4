#include "ratrec/convert_gb.hpp"

#include "ratrec/algebra.hpp"
#include "ratrec/convert_la.hpp"
#include "ratrec/errors.hpp"

namespace ratrec {

namespace {

RatRecEq finish(const DiffPoly& pick) {
  RatRecEq r = reduce_ratrec(to_ratrec_form(pick));
  if (!is_well_formed(r)) throw InternalContradiction("conversion produced an ill-formed equation");
  return r;
}

}  // namespace

GbResult convert_gb_detailed(const HolonomicEq& input, const GbOptions& options) {
  const HolonomicEq h = input.is_homogeneous() ? input : homogenize(input);
  const DiffPoly p = h.to_diffpoly();
  if (is_simple_ratrec(p)) return {finish(p), 0};

  GroebnerLimits limits;
  limits.deadline = Deadline::after(options.timeout, options.cancel);
  limits.max_coeff_bits = options.max_coeff_bits;

  const int bound = options.userbound.value_or(h.degree());
  if (bound < 1) throw std::invalid_argument("convert_gb: iteration bound must be positive");

  if (h.degree() == 1 && options.resultant_fast_path) {
    MultiPoly res = resultant_in_n(p.body, shift(p, 1).body);
    if (!res.is_zero()) {
      if (auto pick = pick_simple_ratrec({res})) return {finish(*pick), 1};
    }
  }

  for (int j = 1; j <= bound; ++j) {
    std::vector<MultiPoly> gens;
    for (int i = 0; i <= j; ++i) gens.push_back(shift(p, static_cast<unsigned>(i)).body);
    std::optional<DiffPoly> pick;
    auto accept = [&pick](const GroebnerBasis& partial) {
      pick = pick_simple_ratrec(eliminate_n(partial));
      return pick.has_value();
    };
    auto run = [&](const GroebnerLimits& lim, MonomialOrder order) {
      pick.reset();
      GroebnerBasis basis = order == MonomialOrder::Lex ? buchberger(gens, lim, order)
                                                        : buchberger_by_degree(gens, lim, order, accept);
      if (!pick) pick = pick_simple_ratrec(eliminate_n(basis));
    };
    if (options.order) {
      run(limits, *options.order);
    } else {
      GroebnerLimits capped = limits;
      capped.max_terms = options.lex_max_terms;
      try {
        run(capped, MonomialOrder::Lex);
      } catch (const CapExceeded&) {
        run(limits, MonomialOrder::BlockGrevlex);
      }
    }
    if (pick) return {finish(*pick), j};
  }
  throw NotFoundWithinBound(bound);
}

}  // namespace ratrec
