#include "hgc/scalar.hpp"

#include <ostream>

namespace hgc {

namespace {

Scalar reduce(mpq_class v, unsigned long mod) {
  if (mod == 0) {
    v.canonicalize();
    Scalar s = Scalar::rational(v);
    return s;
  }
  // Arithmetic in F_p never produces a true denominator; normalize anyway.
  v.canonicalize();
  if (v.get_den() != 1)
    throw Error("FieldMismatch", "non-integral residue in F_p arithmetic");
  return Scalar::modular(v.get_num(), mod);
}

}  // namespace

Scalar Scalar::operator-() const { return reduce(-v_, mod_); }

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  return reduce(v_ + o.v_, mod_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  return reduce(v_ - o.v_, mod_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  return reduce(v_ * o.v_, mod_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("DivisionByZero", "inverse of zero");
  if (mod_ == 0) return reduce(1 / v_, 0);
  mpz_class inv;
  mpz_class p(static_cast<signed long>(mod_));
  mpz_class num = v_.get_num();
  if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error("DivisionByZero", "non-invertible residue mod " +
                                      std::to_string(mod_));
  return Scalar::modular(inv, mod_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

Field Field::prime(unsigned long p) {
  if (p < 2) throw Error("NotPrime", "characteristic must be a prime");
  mpz_class z(static_cast<signed long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw Error("NotPrime", std::to_string(p) + " is not prime");
  return Field(p);
}

Scalar Field::parse(const std::string& text) const {
  if (text.empty()) throw Error("MalformedScalar", "empty scalar literal");
  for (char c : text)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw Error("MalformedScalar", "bad character in scalar: " + text);
  mpq_class v;
  if (v.set_str(text, 10) != 0)
    throw Error("MalformedScalar", "unparsable scalar: " + text);
  if (v.get_den() == 0)
    throw Error("MalformedScalar", "zero denominator: " + text);
  v.canonicalize();
  if (p_ == 0) return Scalar::rational(v);
  if (v.get_den() != 1)
    throw Error("MalformedScalar",
                "fractional literal in F_" + std::to_string(p_) + ": " + text);
  return Scalar::modular(v.get_num(), p_);
}

}  // namespace hgc
