#include "ratrec/convert.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace ratrec {

Method parse_method(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "la") return Method::LA;
  if (t == "gb") return Method::GB;
  throw std::invalid_argument("unknown method '" + std::string(text) + "' (expected la or gb)");
}

const char* method_name(Method m) { return m == Method::LA ? "LA" : "GB"; }

RatRecEq convert(const HolonomicEq& h, const ConvertOptions& options) {
  if (options.method == Method::LA) {
    LaOptions la;
    la.deadline = Deadline::after(options.timeout, options.cancel);
    return convert_la(h, la);
  }
  GbOptions gb;
  gb.userbound = options.userbound;
  gb.timeout = options.timeout;
  gb.cancel = options.cancel;
  return convert_gb(h, gb);
}

}  // namespace ratrec
