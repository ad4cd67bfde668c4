#include "ratrec/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ratrec {

namespace {

bool is_signed_digits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_signed_digits(num) || den.empty() ||
      !std::all_of(den.begin(), den.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Rational q(Integer(n, 10), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q) { return q.get_str(10); }

std::size_t bit_size(const Rational& q) {
  return std::max(mpz_sizeinbase(q.get_num_mpz_t(), 2), mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace ratrec
