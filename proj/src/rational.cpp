#include "lecp/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace lecp {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t digits_start = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits_start) return std::nullopt;
  if (i < n) {
    if (text[i] != '/') return std::nullopt;
    ++i;
    std::size_t den_start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != n) return std::nullopt;
    // All-zero denominator is malformed, not a value.
    bool all_zero = true;
    for (std::size_t j = den_start; j < n; ++j) all_zero = all_zero && text[j] == '0';
    if (all_zero) return std::nullopt;
  }
  mpq_class v;
  if (v.set_str(std::string(text), 10) != 0) return std::nullopt;
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::pow(unsigned long k) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
  return Rational(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace lecp
