#include "cybiv/exact_scalar.hpp"

#include <stdexcept>

namespace cybiv {

ExactScalar::ExactScalar(long num, long den) : value_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_.canonicalize();
}

ExactScalar::ExactScalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

ExactScalar ExactScalar::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  auto valid_int = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num, true)) throw std::invalid_argument("malformed number '" + s + "'");
  mpq_class q;
  if (slash == std::string::npos) {
    q = mpq_class(mpz_class(num));
  } else {
    std::string den = s.substr(slash + 1);
    if (!valid_int(den, false)) throw std::invalid_argument("malformed number '" + s + "'");
    mpz_class d(den);
    if (d == 0) throw std::domain_error("zero denominator in '" + s + "'");
    q = mpq_class(mpz_class(num), d);
  }
  return ExactScalar(q);
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  value_ += o.value_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  value_ -= o.value_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  value_ *= o.value_;
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

ExactScalar ExactScalar::operator-() const { return ExactScalar(mpq_class(-value_)); }

std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.to_string(); }

}  // namespace cybiv
