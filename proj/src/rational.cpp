#include "gnkb/rational.hpp"

#include <algorithm>
#include <cctype>

#include "gnkb/errors.hpp"

namespace gnkb {

Rational make_rational(long num, long den) {
  if (den == 0) throw ParameterError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt parse_int(const std::string& s) {
  std::string body = s;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  if (!all_digits(body)) throw ParameterError("not an integer: '" + s + "'");
  BigInt v(body, 10);
  return negative ? BigInt(-v) : v;
}

BigInt pow10(unsigned e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
  return p;
}

// Rounds a non-negative rational to the nearest integer, halves upward.
BigInt round_half_up(const Rational& a) {
  BigInt twice_num = 2 * a.get_num() + a.get_den();
  BigInt den = 2 * a.get_den();
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), twice_num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw ParameterError("empty rational");
  if (auto slash = t.find('/'); slash != std::string::npos) {
    BigInt num = parse_int(t.substr(0, slash));
    BigInt den = parse_int(t.substr(slash + 1));
    if (den == 0) throw ParameterError("zero denominator in '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = t.find('.'); dot != std::string::npos) {
    std::string whole = t.substr(0, dot);
    std::string frac = t.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac)))
      throw ParameterError("not a decimal: '" + text + "'");
    BigInt scale = pow10(static_cast<unsigned>(frac.size()));
    BigInt num = BigInt(whole, 10) * scale + (frac.empty() ? BigInt(0) : BigInt(frac, 10));
    Rational r(negative ? BigInt(-num) : num, scale);
    r.canonicalize();
    return r;
  }
  return Rational(parse_int(t));
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int significant) {
  if (significant < 1) throw ParameterError("significant digits must be positive");
  if (value == 0) return "0";
  Rational a = abs(value);
  std::string sign = value < 0 ? "-" : "";

  // 10^e <= a < 10^(e+1)
  long e = static_cast<long>(a.get_num().get_str().size()) -
           static_cast<long>(a.get_den().get_str().size());
  auto power = [](long ex) {
    return ex >= 0 ? Rational(pow10(static_cast<unsigned>(ex))) : Rational(1, pow10(static_cast<unsigned>(-ex)));
  };
  while (power(e) > a) --e;
  while (power(e + 1) <= a) ++e;

  long decimals = significant - 1 - e;
  BigInt digits = round_half_up(a * power(decimals));
  if (digits == pow10(static_cast<unsigned>(significant))) {
    // rounding carried into a new leading digit
    ++e;
    decimals = significant - 1 - e;
    digits = round_half_up(a * power(decimals));
  }
  if (decimals <= 0) {
    return sign + BigInt(digits * pow10(static_cast<unsigned>(-decimals))).get_str();
  }
  std::string s = digits.get_str();
  auto width = static_cast<std::size_t>(decimals) + 1;
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(decimals), ".");
  return sign + s;
}

Rational pow(const Rational& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace gnkb
