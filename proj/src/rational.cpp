#include "qhs/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace qhs {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const std::string& s) {
  if (v_.set_str(s, 10) != 0 || s.empty())
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
  return Rational(mpq_class(1) / v_);
}

std::uint32_t Rational::mod_p(std::uint32_t p) const {
  mpz_class den_mod = v_.get_den() % p;
  if (den_mod == 0) throw std::domain_error("Rational: denominator vanishes mod p");
  mpz_class num_mod = v_.get_num() % p;
  if (num_mod < 0) num_mod += p;
  // den^(p-2) mod p
  mpz_class inv;
  mpz_class e(p - 2), m(p);
  mpz_powm(inv.get_mpz_t(), den_mod.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  mpz_class r = (num_mod * inv) % p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qhs
