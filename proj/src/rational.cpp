#include "tangent/rational.hpp"

#include <cctype>
#include <string>

#include "tangent/error.hpp"

namespace tangent {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw InvalidParameter("malformed integer '" + std::string(s) + "'");
  BigInt value(std::string(s), 10);
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidParameter("empty rational");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(text.substr(0, slash));
    const BigInt den = parse_integer(text.substr(slash + 1));
    if (sgn(den) == 0) throw InvalidParameter("zero denominator in '" + std::string(text) + "'");
    Rational out(num, den);
    out.canonicalize();
    return out;
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw InvalidParameter("malformed decimal '" + std::string(text) + "'");
    BigInt num(std::string(whole) + std::string(frac) + (whole.empty() && frac.empty() ? "0" : ""),
               10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational out(negative ? BigInt(-num) : num, den);
    out.canonicalize();
    return out;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) {
  Rational v(value);
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational exact_rational(double value) {
  if (!std::isfinite(value)) throw InvalidParameter("cannot convert a non-finite double");
  Rational out(value);  // mpq_set_d is exact
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

bool exact_sqrt(const Rational& value, Rational& root) {
  if (sgn(value) < 0) return false;
  if (!mpz_perfect_square_p(value.get_num_mpz_t()) || !mpz_perfect_square_p(value.get_den_mpz_t()))
    return false;
  BigInt num, den;
  mpz_sqrt(num.get_mpz_t(), value.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), value.get_den_mpz_t());
  root = Rational(num, den);
  root.canonicalize();
  return true;
}

}  // namespace tangent
