#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hgc {

/// Error with a stable machine-readable code plus a human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// An element of either Q or F_p, kept in canonical form at all times.
///
/// Rationals are stored in lowest terms with positive denominator (GMP's
/// canonical form).  Elements of F_p are stored as the least non-negative
/// residue with denominator 1 and carry the modulus so that mixed-field
/// arithmetic is rejected instead of silently coerced.
class Scalar {
 public:
  Scalar() : mod_(0) {}  // zero of Q

  static Scalar rational(const mpq_class& v) {
    Scalar s;
    s.v_ = v;
    s.v_.canonicalize();
    s.mod_ = 0;
    return s;
  }

  static Scalar modular(const mpz_class& v, unsigned long p) {
    Scalar s;
    mpz_class r = v % static_cast<signed long>(p);
    if (r < 0) r += static_cast<signed long>(p);
    s.v_ = mpq_class(r);
    s.mod_ = p;
    return s;
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  unsigned long modulus() const { return mod_; }  // 0 means Q
  const mpq_class& value() const { return v_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on zero divisor
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const {
    return mod_ == o.mod_ && v_ == o.v_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;

  /// Canonical text form: "a/b" in lowest terms (positive denominator),
  /// plain "a" for integers, least non-negative residue for F_p.
  std::string str() const { return v_.get_str(); }

 private:
  void require_same_field(const Scalar& o) const {
    if (mod_ != o.mod_)
      throw Error("FieldMismatch", "scalars from different fields: mod " +
                                       std::to_string(mod_) + " vs " +
                                       std::to_string(o.mod_));
  }

  mpq_class v_;
  unsigned long mod_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// A coefficient field: Q or F_p for a prime p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(unsigned long p);

  bool is_rational() const { return p_ == 0; }
  unsigned long characteristic() const { return p_; }

  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long n) const {
    return p_ == 0 ? Scalar::rational(mpq_class(n))
                   : Scalar::modular(mpz_class(n), p_);
  }

  /// Parses the canonical text form ("a", "a/b", "-a/b").
  Scalar parse(const std::string& text) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_;  // 0 = rationals
};

}  // namespace hgc
