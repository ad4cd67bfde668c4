#include "ratrec/printer.hpp"

#include "ratrec/errors.hpp"
#include "ratrec/parser.hpp"

namespace ratrec {

namespace {

using nlohmann::json;

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += f.var.name();
    if (f.exp > 1) out += '^' + std::to_string(f.exp);
  }
  return out;
}

// Appends "c*m" with its sign handled by the caller.
void append_term(std::string& out, const Monomial& m, const Rational& magnitude) {
  if (m.is_one()) {
    out += to_string(magnitude);
  } else if (magnitude == 1) {
    out += monomial_text(m);
  } else {
    out += to_string(magnitude) + '*' + monomial_text(m);
  }
}

void append_signed(std::string& out, bool first, bool negative) {
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
}

std::string holonomic_text(const HolonomicEq& h) {
  std::string out;
  bool first = true;
  auto add = [&](const UniPoly& p, const std::string& suffix) {
    if (p.is_zero()) return;
    const MultiPoly mp = p.to_multipoly();
    if (mp.size() == 1) {
      const auto& [m, c] = mp.leading_term();
      append_signed(out, first, c < 0);
      const Rational mag = abs(c);
      if (suffix.empty()) {
        append_term(out, m, mag);
      } else if (m.is_one()) {
        out += (mag == 1 ? "" : to_string(mag) + "*") + suffix;
      } else {
        append_term(out, m, mag);
        out += '*' + suffix;
      }
    } else {
      append_signed(out, first, false);
      out += suffix.empty() ? to_text(mp) : "(" + to_text(mp) + ")*" + suffix;
    }
    first = false;
  };
  for (int i = h.order(); i >= 0; --i) add(h.coeff(i), VarId::shift(static_cast<std::uint32_t>(i)).name());
  if (h.inhom()) add(*h.inhom(), "");
  return out;
}

json variable_names(const MultiPoly& p) {
  json names = json::array();
  for (VarId v : p.variables()) names.push_back(v.name());
  return names;
}

VarId variable_from_name(const std::string& name) {
  MultiPoly p;
  try {
    p = parse_equation(name).body;
  } catch (const ParseError&) {
    throw FormatError("bad variable name '" + name + "'");
  }
  if (p.size() != 1 || p.leading_coefficient() != 1 || p.leading_monomial().factors().size() != 1 ||
      p.leading_monomial().factors()[0].exp != 1) {
    throw FormatError("bad variable name '" + name + "'");
  }
  return p.leading_monomial().factors()[0].var;
}

Rational rational_from_json(const json& v) {
  if (!v.is_string()) throw FormatError("coefficient must be a decimal string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw FormatError("bad coefficient '" + v.get<std::string>() + "'");
  }
}

UniPoly unipoly_from_json(const json& v) {
  if (!v.is_array()) throw FormatError("coefficient list must be an array");
  std::vector<Rational> cs;
  for (const auto& c : v) cs.push_back(rational_from_json(c));
  return UniPoly(std::move(cs));
}

json unipoly_to_json(const UniPoly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

const json& field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

}  // namespace

std::string to_text(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    append_signed(out, first, c < 0);
    append_term(out, m, abs(c));
    first = false;
  }
  return out;
}

std::string print_equation(const RatRecEq& eq, OutputFormat format) {
  switch (format) {
    case OutputFormat::Solved: {
      const std::string lhs = VarId::shift(static_cast<std::uint32_t>(eq.order)).name() + " = ";
      if (eq.den.is_constant()) return lhs + to_text(eq.num * (1 / eq.den.constant_value()));
      return lhs + "(" + to_text(eq.num) + ") / (" + to_text(eq.den) + ")";
    }
    case OutputFormat::Zero:
      return to_text(eq.cleared().body) + " = 0";
    case OutputFormat::Json:
      return to_json(eq).dump();
  }
  throw FormatError("unknown output format");
}

std::string print_equation(const HolonomicEq& eq, OutputFormat format) {
  switch (format) {
    case OutputFormat::Solved:
      throw FormatError("solved format requires a simple ratrec equation");
    case OutputFormat::Zero:
      return holonomic_text(eq) + " = 0";
    case OutputFormat::Json:
      return to_json(eq).dump();
  }
  throw FormatError("unknown output format");
}

std::string print_equation(const DiffPoly& eq, OutputFormat format) {
  switch (format) {
    case OutputFormat::Solved:
      throw FormatError("solved format requires a simple ratrec equation");
    case OutputFormat::Zero:
      return to_text(eq.body) + " = 0";
    case OutputFormat::Json:
      return to_json(eq).dump();
  }
  throw FormatError("unknown output format");
}

json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::object();
    for (const auto& f : m.factors()) mono[f.var.name()] = f.exp;
    terms.push_back({{"coeff", to_string(c)}, {"monomial", std::move(mono)}});
  }
  return terms;
}

json to_json(const RatRecEq& eq) {
  return {{"kind", "ratrec"},
          {"order", eq.order},
          {"degree", eq.degree()},
          {"num", to_json(eq.num)},
          {"den", to_json(eq.den)},
          {"variables", variable_names(eq.cleared().body)}};
}

json to_json(const HolonomicEq& eq) {
  json coeffs = json::array();
  for (const auto& p : eq.coeffs()) coeffs.push_back(unipoly_to_json(p));
  return {{"kind", "holonomic"},
          {"order", eq.order()},
          {"degree", eq.degree()},
          {"coefficients", std::move(coeffs)},
          {"inhom", eq.inhom() ? unipoly_to_json(*eq.inhom()) : json(nullptr)},
          {"variables", variable_names(eq.to_diffpoly().body)}};
}

json to_json(const DiffPoly& eq) {
  const auto od = eq.is_zero() ? OrderDegree{-1, 0, 0} : order_and_degree(eq);
  return {{"kind", "diffpoly"},
          {"order", od.order},
          {"degree", od.total_degree},
          {"terms", to_json(eq.body)},
          {"variables", variable_names(eq.body)}};
}

MultiPoly poly_from_json(const json& terms) {
  if (!terms.is_array()) throw FormatError("term list must be an array");
  std::vector<MultiPoly::Term> out;
  for (const auto& t : terms) {
    if (!t.is_object()) throw FormatError("term must be an object");
    const json& mono = field(t, "monomial");
    if (!mono.is_object()) throw FormatError("monomial must be an object");
    std::vector<Monomial::Factor> factors;
    for (const auto& [name, e] : mono.items()) {
      if (!e.is_number_unsigned()) throw FormatError("exponent must be a nonnegative integer");
      factors.push_back({variable_from_name(name), e.get<std::uint32_t>()});
    }
    out.emplace_back(Monomial::from_factors(std::move(factors)), rational_from_json(field(t, "coeff")));
  }
  return MultiPoly::from_terms(std::move(out));
}

AnyEquation equation_from_json(const json& doc) {
  try {
    const std::string kind = field(doc, "kind").get<std::string>();
    if (kind == "holonomic") {
      std::vector<UniPoly> coeffs;
      for (const auto& c : field(doc, "coefficients")) coeffs.push_back(unipoly_from_json(c));
      std::optional<UniPoly> inhom;
      if (doc.contains("inhom") && !doc.at("inhom").is_null()) inhom = unipoly_from_json(doc.at("inhom"));
      return HolonomicEq(std::move(coeffs), std::move(inhom));
    }
    if (kind == "ratrec") {
      RatRecEq r;
      r.order = field(doc, "order").get<int>();
      r.num = poly_from_json(field(doc, "num"));
      r.den = poly_from_json(field(doc, "den"));
      if (!is_well_formed(r)) throw FormatError("ratrec document violates the equation invariants");
      return r;
    }
    if (kind == "diffpoly") return DiffPoly(poly_from_json(field(doc, "terms")));
    throw FormatError("unknown kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed equation document: ") + e.what());
  } catch (const NotHolonomic& e) {
    throw FormatError(e.what());
  }
}

}  // namespace ratrec
