#pragma once

// Polynomials in two formal variables u, v with Rational coefficients.
// Sparse map keyed by (u-degree, v-degree); zero coefficients never stored.

#include "tautchi/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace tautchi {

class UVPoly {
public:
  using Key = std::pair<int, int>; // (u-degree, v-degree)
  using Map = std::map<Key, Rational>;

  UVPoly() = default;
  UVPoly(const Rational& c) { if (!c.is_zero()) c_[{0, 0}] = c; }
  UVPoly(long long n) : UVPoly(Rational(n)) {}
  UVPoly(int n) : UVPoly(Rational(n)) {}

  static UVPoly monomial(int udeg, int vdeg, const Rational& c = Rational(1));

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == Key{0, 0});
  }
  Rational coeff(int udeg, int vdeg) const;
  Rational constant_term() const { return coeff(0, 0); }
  int max_udeg() const;
  int max_vdeg() const;
  const Map& terms() const { return c_; }

  UVPoly& operator+=(const UVPoly& o);
  UVPoly& operator-=(const UVPoly& o);
  UVPoly operator-() const;
  friend UVPoly operator+(UVPoly a, const UVPoly& b) { return a += b; }
  friend UVPoly operator-(UVPoly a, const UVPoly& b) { return a -= b; }
  friend UVPoly operator*(const UVPoly& a, const UVPoly& b);
  UVPoly& operator*=(const UVPoly& o) { *this = *this * o; return *this; }
  UVPoly& operator*=(const Rational& s);
  friend UVPoly operator*(UVPoly a, const Rational& s) { return a *= s; }
  friend UVPoly operator*(const Rational& s, UVPoly a) { return a *= s; }

  friend bool operator==(const UVPoly& a, const UVPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UVPoly& a, const UVPoly& b) { return !(a == b); }

  // u -> u^r, v -> v^r.
  UVPoly substitute_powers(int r) const;

  // Every coefficient an integer?
  bool has_integer_coeffs() const;

  // Human-readable, e.g. "1 - 6*v + 3*u*v".
  std::string str() const;

private:
  Map c_;
  void set(const Key& k, const Rational& val);
};

} // namespace tautchi
