#pragma once

// Exact rational arithmetic.  Thin value wrapper around GMP's mpq_class
// keeping the canonical form num/den with gcd(num, den) = 1 and den > 0.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tautchi {

static_assert(sizeof(long) == 8, "LP64 expected");

class Rational {
public:
  Rational() : q_(0) {}
  Rational(long long n) : q_(static_cast<long>(n)) {}
  Rational(int n) : q_(n) {}
  Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rational(const mpz_class& n) : q_(n) {}

  // Accepts "num", "num/den", optional leading '-'.
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(mpq_class(mpz_class(s)));
      mpz_class num(s.substr(0, slash));
      mpz_class den(s.substr(slash + 1));
      if (den == 0) throw std::domain_error("Rational: zero denominator");
      mpq_class q;
      q = mpq_class(num) / mpq_class(den);
      return Rational(q);
    } catch (const std::invalid_argument&) {
      throw std::domain_error("Rational: cannot parse '" + s + "'");
    }
  }

  const mpz_class num() const { return q_.get_num(); }
  const mpz_class den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r(*this); r.q_ = -r.q_; return r; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(1 / q_);
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  // "num/den", with "/den" omitted for integers.
  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  long long to_ll() const {
    if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
    if (!q_.get_num().fits_slong_p())
      throw std::overflow_error("Rational: integer does not fit in long long");
    return q_.get_num().get_si();
  }

private:
  mpq_class q_;
};

} // namespace tautchi
