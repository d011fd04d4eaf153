#include "vpower/rational.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace vpower {

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  mpz_class num;
  mpz_class den = 1;
  const std::string head(text.substr(0, slash));
  if (head.empty() || num.set_str(head, 10) != 0) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  if (slash != std::string_view::npos) {
    const std::string tail(text.substr(slash + 1));
    if (tail.empty() || tail[0] == '-' || tail[0] == '+' || den.set_str(tail, 10) != 0) {
      throw std::invalid_argument("malformed rational: " + std::string(text));
    }
  }
  return Rational(num, den);
}

std::string Rational::fraction() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::str() const { return q_.get_str(); }

std::string Rational::decimal() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", to_double());
  return buf;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Rational inverse_power_of_two(unsigned k) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
  return Rational(mpz_class(1), den);
}

}  // namespace vpower
