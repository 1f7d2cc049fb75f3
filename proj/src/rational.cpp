#include "mft/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace mft {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view original = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  mpz_class num;
  mpz_class den = 1;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto p = text.substr(0, slash);
    const auto q = text.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) {
      throw std::invalid_argument("malformed rational '" + std::string(original) + "'");
    }
    num = mpz_class(std::string(p), 10);
    den = mpz_class(std::string(q), 10);
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(original) + "'");
    }
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) {
      throw std::invalid_argument("malformed decimal '" + std::string(original) + "'");
    }
    num = mpz_class(std::string(whole) + std::string(frac), 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  } else {
    if (!all_digits(text)) {
      throw std::invalid_argument("malformed number '" + std::string(original) + "'");
    }
    num = mpz_class(std::string(text), 10);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, int exponent) {
  Rational result = 1;
  Rational factor = exponent < 0 ? Rational(1) / base : base;
  for (int e = exponent < 0 ? -exponent : exponent; e > 0; e >>= 1) {
    if (e & 1) result *= factor;
    factor *= factor;
  }
  return result;
}

}  // namespace mft
