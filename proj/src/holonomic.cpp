#include "ratrec/holonomic.hpp"

#include "ratrec/errors.hpp"

#include <algorithm>

namespace ratrec {

HolonomicEq::HolonomicEq(std::vector<UniPoly> coeffs, std::optional<UniPoly> inhom)
    : coeffs_(std::move(coeffs)), inhom_(std::move(inhom)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) throw NotHolonomic("holonomic equation needs a nonzero coefficient of some shift");
  if (inhom_ && inhom_->is_zero()) inhom_.reset();
}

int HolonomicEq::degree() const {
  int d = 0;
  for (const auto& p : coeffs_) d = std::max(d, p.degree());
  if (inhom_) d = std::max(d, inhom_->degree());
  return d;
}

DiffPoly HolonomicEq::to_diffpoly() const {
  MultiPoly p;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    p += coeffs_[i].to_multipoly() * var_s(static_cast<std::uint32_t>(i));
  }
  if (inhom_) p += inhom_->to_multipoly();
  return DiffPoly(std::move(p));
}

HolonomicEq holonomic_from_diffpoly(const DiffPoly& p) {
  const auto top = p.body.max_shift();
  if (!top) throw NotHolonomic("no shift of s(n) occurs");
  std::vector<std::vector<MultiPoly::Term>> parts(*top + 1);
  std::vector<MultiPoly::Term> inhom;
  const VarId n = VarId::n();
  for (const auto& [m, c] : p.body.terms()) {
    if (m.shift_degree() > 1) throw NotHolonomic("difference polynomial is nonlinear in the shifts");
    Monomial npart(n, m.degree(n));
    if (m.shift_degree() == 0) {
      inhom.emplace_back(npart, c);
    } else {
      const auto s = m.without(n).factors().front().var;
      parts[s.shift_index()].emplace_back(npart, c);
    }
  }
  std::vector<UniPoly> coeffs;
  coeffs.reserve(parts.size());
  for (auto& t : parts) coeffs.push_back(UniPoly::from_multipoly(MultiPoly::from_terms(std::move(t))));
  std::optional<UniPoly> ih;
  if (!inhom.empty()) ih = UniPoly::from_multipoly(MultiPoly::from_terms(std::move(inhom)));
  return HolonomicEq(std::move(coeffs), std::move(ih));
}

}  // namespace ratrec
