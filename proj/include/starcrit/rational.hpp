#ifndef STARCRIT_RATIONAL_HPP
#define STARCRIT_RATIONAL_HPP

#include <string>
#include <vector>

#include "starcrit/numeric.hpp"

namespace starcrit {

// Exact rational, always reduced, denominator always >= 1.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(const BigInt &num) : value_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(long num) : value_(num) {}           // NOLINT(google-explicit-constructor)
  Rational(const BigInt &num, const BigInt &den) : value_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    value_.canonicalize();
  }

  BigInt numerator() const { return BigInt(value_.get_num()); }
  BigInt denominator() const { return BigInt(value_.get_den()); }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_positive() const { return sgn(value_) > 0; }

  // Floor and ceiling as integers.
  BigInt floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num().get_mpz_t(), value_.get_den().get_mpz_t());
    return q;
  }
  BigInt ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num().get_mpz_t(), value_.get_den().get_mpz_t());
    return q;
  }

  Rational reciprocal() const {
    if (value_ == 0) throw std::domain_error("Rational: reciprocal of zero");
    Rational r;
    mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
  }

  std::string str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
  }

  friend Rational operator+(const Rational &a, const Rational &b) { return Rational(a.value_ + b.value_); }
  friend Rational operator-(const Rational &a, const Rational &b) { return Rational(a.value_ - b.value_); }
  friend Rational operator*(const Rational &a, const Rational &b) { return Rational(a.value_ * b.value_); }
  friend Rational operator/(const Rational &a, const Rational &b) {
    if (b.value_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.value_ / b.value_);
  }
  Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
  Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational &a, const Rational &b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational &a, const Rational &b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational &a, const Rational &b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational &a, const Rational &b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational &a, const Rational &b) { return a.value_ >= b.value_; }

 private:
  explicit Rational(const mpq_class &v) : value_(v) {}
  mpq_class value_;
};

inline Rational rational_sum(const std::vector<Rational> &terms) {
  Rational acc;
  for (const Rational &t : terms) acc += t;
  return acc;
}

inline Rational unit_fraction(const BigInt &d) { return Rational(1, d); }

}  // namespace starcrit

#endif
