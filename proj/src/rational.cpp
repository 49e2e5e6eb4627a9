// SPDX-License-Identifier: Apache-2.0

#include "edgenorm/rational.hpp"

#include <cctype>

#include "edgenorm/errors.hpp"

namespace edgenorm {

BigInt floor(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt ceil(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// Divisibility rather than den == 1, so non-canonical inputs are judged correctly.
bool is_integer(const Rational& q) {
  return mpz_divisible_p(q.get_num_mpz_t(), q.get_den_mpz_t()) != 0;
}

BigInt denominator_lcm(std::span<const Rational> values) {
  BigInt l = 1;
  for (const auto& q : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  return l;
}

Exponent to_exponent(const BigInt& z) {
  if (!z.fits_slong_p()) throw OverflowError("integer " + z.get_str() + " exceeds 64 bits");
  return static_cast<Exponent>(z.get_si());
}

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  auto valid_integer = [](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start >= s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den)) {
    throw ParseError("'" + text + "'", "not a rational number");
  }
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  BigInt d(den);
  if (d == 0) throw ParseError("'" + text + "'", "zero denominator");
  Rational q(BigInt(num), d);
  q.canonicalize();
  return q;
}

}  // namespace edgenorm
