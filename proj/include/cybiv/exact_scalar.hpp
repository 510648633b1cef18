#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace cybiv {

/// Exact rational number with canonical (reduced, positive-denominator) form.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(long num, long den);
  explicit ExactScalar(mpq_class value);
  explicit ExactScalar(const mpz_class& value) : value_(value) {}

  /// Parses "a" or "a/b" with optional sign; throws std::invalid_argument.
  static ExactScalar parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_one() const { return value_ == 1; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] const mpq_class& value() const { return value_; }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] std::string to_string() const { return value_.get_str(); }

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  /// Throws std::domain_error on division by zero.
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  ExactScalar operator-() const;

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b);

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

}  // namespace cybiv
