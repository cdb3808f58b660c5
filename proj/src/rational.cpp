#include "fpoly/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fpoly {
namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : text.substr(slash + 1);
  if (!is_integer_literal(num) || den.empty() ||
      !std::all_of(den.begin(), den.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_decimal_string(const Rational& value, int digits) {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // Round half away from zero.
  const mpz_class num = abs(value.get_num()) * scale * 2 + value.get_den();
  const mpz_class rounded = num / (value.get_den() * 2);
  const mpz_class whole = rounded / scale;
  std::string frac_text = mpz_class(rounded % scale).get_str();
  frac_text.insert(0, static_cast<std::size_t>(digits) - frac_text.size(), '0');
  std::string out = (value < 0 && rounded != 0 ? "-" : "") + whole.get_str();
  if (digits > 0) out += "." + frac_text;
  return out;
}

mpz_class ceil(const Rational& value) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

mpz_class floor(const Rational& value) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

std::uint64_t ceil_natural(const Rational& value) {
  const mpz_class c = ceil(value);
  if (c < 0 || !c.fits_ulong_p()) {
    throw std::out_of_range("ceiling of " + to_string(value) + " is not a natural number");
  }
  return c.get_ui();
}

Rational max_of(std::span<const Rational> values) {
  if (values.empty()) throw std::invalid_argument("max_of: empty input");
  return *std::max_element(values.begin(), values.end());
}

}  // namespace fpoly
