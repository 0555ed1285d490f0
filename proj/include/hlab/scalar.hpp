#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "hlab/errors.hpp"

namespace hlab {

// Ground field: the rationals (characteristic 0) or F_p with p a prime below 2^32.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p) {
    if (!is_prime(p)) throw InvalidParameter("characteristic " + std::to_string(p) + " is not a prime");
    if (p >= (std::uint64_t{1} << 32)) throw InvalidParameter("prime must fit in 32 bits");
    Field f;
    f.p_ = p;
    return f;
  }
  // 0 selects the rationals.
  static Field from_characteristic(std::uint64_t p) { return p == 0 ? rationals() : prime(p); }

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

  friend bool operator==(const Field&, const Field&) = default;

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint64_t p_ = 0;
};

inline void check_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw FieldMismatch("mixed field contexts: " + a.name() + " vs " + b.name());
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("division by zero in " + Field::prime(p).name());
  return mod_pow(a, p - 2, p);
}

inline std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

// An exact field element. Rationals are kept canonical (lowest terms, positive
// denominator); residues lie in [0, p).
class Scalar {
 public:
  Scalar() : Scalar(Field::rationals(), 0) {}
  Scalar(const Field& f, long long v) : field_(f) {
    if (f.is_rational()) {
      value_ = mpq_class(static_cast<long>(v));
    } else {
      long long p = static_cast<long long>(f.characteristic());
      long long r = v % p;
      if (r < 0) r += p;
      value_ = static_cast<std::uint64_t>(r);
    }
  }
  Scalar(const Field& f, const mpq_class& q) : field_(f) {
    if (f.is_rational()) {
      mpq_class c = q;
      c.canonicalize();
      value_ = c;
    } else {
      std::uint64_t p = f.characteristic();
      std::uint64_t den = reduce_mod(q.get_den(), p);
      if (den == 0) throw std::domain_error("rational with denominator divisible by p has no image in " + f.name());
      value_ = reduce_mod(q.get_num(), p) * mod_inv(den, p) % p;
    }
  }
  static Scalar residue(const Field& f, std::uint64_t r) {
    Scalar s;
    s.field_ = f;
    s.value_ = r % f.characteristic();
    return s;
  }

  const Field& field() const { return field_; }
  bool is_zero() const {
    if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
    return std::get<std::uint64_t>(value_) == 0;
  }
  bool is_one() const {
    if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
    return std::get<std::uint64_t>(value_) == 1;
  }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

  mpz_class numerator() const {
    if (field_.is_rational()) return rational().get_num();
    return mpz_class(static_cast<unsigned long>(residue()));
  }
  mpz_class denominator() const {
    if (field_.is_rational()) return rational().get_den();
    return mpz_class(1);
  }

  std::string to_string() const {
    if (field_.is_rational()) return rational().get_str();
    return std::to_string(residue());
  }

  Scalar operator-() const {
    Scalar r = *this;
    if (field_.is_rational()) {
      r.value_ = mpq_class(-rational());
    } else if (residue() != 0) {
      r.value_ = field_.characteristic() - residue();
    }
    return r;
  }
  Scalar& operator+=(const Scalar& o) {
    check_same_field(field_, o.field_);
    if (field_.is_rational()) {
      std::get<mpq_class>(value_) += o.rational();
    } else {
      std::uint64_t p = field_.characteristic();
      value_ = (residue() + o.residue()) % p;
    }
    return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }
  Scalar& operator*=(const Scalar& o) {
    check_same_field(field_, o.field_);
    if (field_.is_rational()) {
      std::get<mpq_class>(value_) *= o.rational();
    } else {
      value_ = residue() * o.residue() % field_.characteristic();
    }
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    check_same_field(field_, o.field_);
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (field_.is_rational()) {
      std::get<mpq_class>(value_) /= o.rational();
    } else {
      std::uint64_t p = field_.characteristic();
      value_ = residue() * mod_inv(o.residue(), p) % p;
    }
    return *this;
  }
  Scalar inverse() const { return Scalar(field_, 1) /= *this; }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    if (a.field_.is_rational()) return a.rational() == b.rational();
    return a.residue() == b.residue();
  }

  // Image of a rational scalar in F_p (throws when the denominator vanishes mod p).
  Scalar reduce(const Field& target) const {
    if (!field_.is_rational()) {
      check_same_field(field_, target);
      return *this;
    }
    return Scalar(target, rational());
  }

 private:
  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace hlab
