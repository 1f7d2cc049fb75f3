#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace mft {

/// Exact rational number backed by GMP.
///
/// The value is kept in canonical form at all times: the denominator is
/// positive and shares no factor with the numerator, so structural equality
/// of (num, den) is value equality.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)

  explicit Rational(const mpz_class& integer) : value_(integer) {}

  /// Throws std::domain_error when den is zero.
  Rational(const mpz_class& num, const mpz_class& den);

  /// Accepts "-12", "0.25", "-3/4" and "+1". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  double to_double() const { return value_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  const mpq_class& gmp() const { return value_; }

 private:
  mpq_class value_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, int exponent);

}  // namespace mft

namespace Eigen {

template <>
struct NumTraits<mft::Rational> : GenericNumTraits<mft::Rational> {
  using Real = mft::Rational;
  using NonInteger = mft::Rational;
  using Nested = mft::Rational;
  using Literal = mft::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
