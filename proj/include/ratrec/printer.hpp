#pragma once

#include "ratrec/difference.hpp"
#include "ratrec/holonomic.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace ratrec {

enum class OutputFormat { Solved, Zero, Json };

/// Expanded canonical text, terms in descending lex order, e.g.
/// "2*s(n+1)^2 - 16*s(n+1)*s(n)". The zero polynomial prints as "0".
std::string to_text(const MultiPoly& p);

/// Solved: "s(n+m) = (num) / (den)", or the expanded quotient when den is a
/// constant. Zero: "... = 0", which parse_equation reads back exactly.
/// Json: the document produced by to_json.
std::string print_equation(const RatRecEq& eq, OutputFormat format);
/// Solved format is rejected with FormatError.
std::string print_equation(const HolonomicEq& eq, OutputFormat format);
std::string print_equation(const DiffPoly& eq, OutputFormat format);

// Coefficients are decimal strings "p" or "p/q"; monomials map variable names
// ("n", "s(n)", "s(n+i)") to exponents.
nlohmann::json to_json(const MultiPoly& p);
nlohmann::json to_json(const RatRecEq& eq);
nlohmann::json to_json(const HolonomicEq& eq);
nlohmann::json to_json(const DiffPoly& eq);

using AnyEquation = std::variant<HolonomicEq, RatRecEq, DiffPoly>;

/// Dispatches on "kind". Throws FormatError on malformed documents.
AnyEquation equation_from_json(const nlohmann::json& doc);
MultiPoly poly_from_json(const nlohmann::json& terms);

}  // namespace ratrec
