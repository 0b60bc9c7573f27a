#pragma once

// Truncated formal power series in Q with UVPoly coefficients, exact to a
// fixed order N (coefficients of Q^0 .. Q^N are all stored, higher ones
// dropped).  Binary operations between different orders truncate to the
// smaller one.

#include "tautchi/errors.hpp"
#include "tautchi/uvpoly.hpp"

#include <string>
#include <vector>

namespace tautchi {

class QSeries {
public:
  explicit QSeries(int order) : coeffs_(static_cast<std::size_t>(check_order(order)) + 1) {}
  QSeries(int order, std::vector<UVPoly> coeffs);

  static QSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const UVPoly& coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  void set_coeff(int n, UVPoly c) { coeffs_.at(static_cast<std::size_t>(n)) = std::move(c); }
  const std::vector<UVPoly>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  QSeries truncated(int order) const; // pre: order <= this->order()

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o) { *this = *this + o; return *this; }
  QSeries& operator-=(const QSeries& o) { *this = *this - o; return *this; }
  QSeries& operator*=(const QSeries& o) { *this = *this * o; return *this; }
  friend QSeries operator*(QSeries a, const Rational& s);

  friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

  std::string str() const;

private:
  std::vector<UVPoly> coeffs_;
  static int check_order(int order);
};

// Multiplicative inverse; the constant term must be an invertible constant
// (NotUnitError otherwise).
QSeries series_inv(const QSeries& a);

// log of a series with constant term 1 (NonzeroConstantError otherwise).
QSeries series_log(const QSeries& a);

// exp of a series with constant term 0 (NonzeroConstantError otherwise).
QSeries series_exp(const QSeries& a);

// (1 - t Q)^e for t in {1, u, v, uv}, computed as exp(e * log(1 - t Q)).
enum class BinomBase { OneMinusQ, OneMinusUQ, OneMinusVQ, OneMinusUVQ };
QSeries binom_power(BinomBase base, long long e, int order);

} // namespace tautchi
