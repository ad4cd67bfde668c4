#include "ratrec/dynsys.hpp"

#include "ratrec/errors.hpp"

#include <stdexcept>

namespace ratrec {

RationalDynSystem holo_to_system(const HolonomicEq& h, std::span<const Rational> inits) {
  if (!h.is_homogeneous()) throw Unsupported("holo_to_system needs a homogeneous equation (homogenize first)");
  const int l = h.order();
  if (l < 1) throw Unsupported("order-0 equations define no recursion");
  if (inits.size() != static_cast<std::size_t>(l)) {
    throw ArityError("expected " + std::to_string(l) + " initial values, got " + std::to_string(inits.size()));
  }
  const auto counter = static_cast<std::uint32_t>(l);
  const MultiPoly x_counter = var_s(counter);

  RationalDynSystem sys;
  sys.denominator = h.coeff(l).to_multipoly().substitute(VarId::n(), x_counter);
  for (std::uint32_t i = 0; i + 1 < counter; ++i) sys.numerators.push_back(sys.denominator * var_s(i + 1));
  MultiPoly last;
  for (int i = 0; i < l; ++i) {
    last -= h.coeff(i).to_multipoly().substitute(VarId::n(), x_counter) * var_s(static_cast<std::uint32_t>(i));
  }
  sys.numerators.push_back(std::move(last));
  sys.numerators.push_back(sys.denominator * (x_counter + MultiPoly(Rational(1))));
  sys.output_index = 1;
  sys.initial_state.assign(inits.begin(), inits.end());
  sys.initial_state.emplace_back(0);
  return sys;
}

SequenceTable simulate_system(const RationalDynSystem& sys, std::size_t steps) {
  const auto k = sys.dimension();
  if (k == 0 || sys.initial_state.size() != k) throw std::invalid_argument("malformed dynamical system");
  if (sys.output_index < 1 || sys.output_index > k) throw std::invalid_argument("output index out of range");
  for (const auto& p : sys.numerators) {
    auto top = p.max_shift();
    if (p.contains(VarId::n()) || (top && *top >= k)) {
      throw std::invalid_argument("update uses a variable outside the state");
    }
  }

  SequenceTable table;
  table.terms.resize(steps + 1);
  std::vector<Rational> state = sys.initial_state;
  for (std::size_t n = 0; n <= steps; ++n) {
    table.terms[n] = state[sys.output_index - 1];
    if (n == steps) break;
    Rational q = evaluate_at(sys.denominator, state);
    if (q == 0) {
      table.first_singularity = Singularity{n, "update denominator vanishes"};
      break;
    }
    std::vector<Rational> next(k);
    for (std::size_t i = 0; i < k; ++i) next[i] = evaluate_at(sys.numerators[i], state) / q;
    state = std::move(next);
  }
  return table;
}

}  // namespace ratrec
