#pragma once

// Laurent polynomials in the equivariant variable z.
//
// ZLaurent has Rational coefficients and is what localization denominators
// are made of.  LaurentZ has UVPoly coefficients and carries the expanded
// numerators.  Both are sparse maps exponent -> coefficient with no stored
// zeros; the zero polynomial is the empty map.

#include "tautchi/rational.hpp"
#include "tautchi/uvpoly.hpp"

#include <map>
#include <string>

namespace tautchi {

class ZLaurent {
public:
  using Map = std::map<int, Rational>;

  ZLaurent() = default;
  ZLaurent(const Rational& c) { if (!c.is_zero()) c_[0] = c; }
  ZLaurent(long long n) : ZLaurent(Rational(n)) {}
  ZLaurent(int n) : ZLaurent(Rational(n)) {}
  static ZLaurent monomial(int exp, const Rational& c = Rational(1));
  // 1 - z^k (k != 0 allowed negative).
  static ZLaurent one_minus_z(int k);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  Rational coeff(int exp) const;
  int min_exp() const; // pre: nonzero
  int max_exp() const; // pre: nonzero
  const Map& terms() const { return c_; }

  ZLaurent& operator+=(const ZLaurent& o);
  ZLaurent& operator-=(const ZLaurent& o);
  ZLaurent operator-() const;
  friend ZLaurent operator+(ZLaurent a, const ZLaurent& b) { return a += b; }
  friend ZLaurent operator-(ZLaurent a, const ZLaurent& b) { return a -= b; }
  friend ZLaurent operator*(const ZLaurent& a, const ZLaurent& b);
  ZLaurent& operator*=(const ZLaurent& o) { *this = *this * o; return *this; }
  ZLaurent& operator*=(const Rational& s);
  ZLaurent shifted(int k) const; // multiply by z^k

  friend bool operator==(const ZLaurent& a, const ZLaurent& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ZLaurent& a, const ZLaurent& b) { return !(a == b); }

  // Exact division: quotient with *this == q * d, false if the remainder
  // is nonzero.  d must be nonzero.
  bool try_divide(const ZLaurent& d, ZLaurent& q) const;

  Rational eval_at_one() const;
  std::string str() const;

private:
  Map c_;
  void set(int exp, const Rational& val);
};

class LaurentZ {
public:
  using Map = std::map<int, UVPoly>;

  LaurentZ() = default;
  LaurentZ(const UVPoly& c) { if (!c.is_zero()) c_[0] = c; }
  LaurentZ(const Rational& c) : LaurentZ(UVPoly(c)) {}
  LaurentZ(long long n) : LaurentZ(UVPoly(n)) {}
  LaurentZ(int n) : LaurentZ(UVPoly(n)) {}
  static LaurentZ monomial(int exp, const UVPoly& c);
  static LaurentZ from_zlaurent(const ZLaurent& p);

  bool is_zero() const { return c_.empty(); }
  UVPoly coeff(int exp) const;
  int min_exp() const; // pre: nonzero
  int max_exp() const; // pre: nonzero
  const Map& terms() const { return c_; }

  LaurentZ& operator+=(const LaurentZ& o);
  LaurentZ& operator-=(const LaurentZ& o);
  LaurentZ operator-() const;
  friend LaurentZ operator+(LaurentZ a, const LaurentZ& b) { return a += b; }
  friend LaurentZ operator-(LaurentZ a, const LaurentZ& b) { return a -= b; }
  friend LaurentZ operator*(const LaurentZ& a, const LaurentZ& b);
  LaurentZ& operator*=(const LaurentZ& o) { *this = *this * o; return *this; }
  friend LaurentZ operator*(const LaurentZ& a, const ZLaurent& b);
  LaurentZ& operator*=(const UVPoly& s);
  LaurentZ& operator*=(const Rational& s);
  LaurentZ shifted(int k) const;

  friend bool operator==(const LaurentZ& a, const LaurentZ& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LaurentZ& a, const LaurentZ& b) { return !(a == b); }

  // Exact division by a u,v-free Laurent polynomial.
  bool try_divide(const ZLaurent& d, LaurentZ& q) const;

  UVPoly eval_at_one() const;
  std::string str() const;

private:
  Map c_;
  void set(int exp, const UVPoly& val);
};

} // namespace tautchi
