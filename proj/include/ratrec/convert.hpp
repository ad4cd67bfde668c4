#pragma once

#include "ratrec/convert_gb.hpp"
#include "ratrec/convert_la.hpp"

#include <atomic>
#include <chrono>
#include <optional>
#include <string_view>

namespace ratrec {

enum class Method { LA, GB };

/// "la" or "gb", case-insensitive. Throws std::invalid_argument.
Method parse_method(std::string_view text);
const char* method_name(Method m);

struct ConvertOptions {
  Method method = Method::LA;
  std::optional<int> userbound;  // GB only
  std::chrono::duration<double> timeout{300.0};
  const std::atomic<bool>* cancel = nullptr;
};

/// Throws Timeout, NotFoundWithinBound, SingularSystem or InternalContradiction.
RatRecEq convert(const HolonomicEq& h, const ConvertOptions& options = {});

}  // namespace ratrec
