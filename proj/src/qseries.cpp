#include "tautchi/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace tautchi {

int QSeries::check_order(int order) {
  if (order < 0) throw UsageError("QSeries: order must be >= 0");
  return order;
}

QSeries::QSeries(int order, std::vector<UVPoly> coeffs) : coeffs_(std::move(coeffs)) {
  check_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries QSeries::one(int order) {
  QSeries s(order);
  s.coeffs_[0] = UVPoly(1);
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const UVPoly& c) { return c.is_zero(); });
}

QSeries QSeries::truncated(int order) const {
  QSeries s(std::min(order, this->order()));
  for (int n = 0; n <= s.order(); ++n) s.coeffs_[static_cast<std::size_t>(n)] = coeff(n);
  return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.order(), b.order()));
  for (int n = 0; n <= r.order(); ++n) r.set_coeff(n, a.coeff(n) + b.coeff(n));
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.order(), b.order()));
  for (int n = 0; n <= r.order(); ++n) r.set_coeff(n, a.coeff(n) - b.coeff(n));
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.order(), b.order()));
  for (int n = 0; n <= r.order(); ++n) {
    UVPoly c;
    for (int k = 0; k <= n; ++k) c += a.coeff(k) * b.coeff(n - k);
    r.set_coeff(n, std::move(c));
  }
  return r;
}

QSeries QSeries::operator-() const {
  QSeries r(order());
  for (int n = 0; n <= order(); ++n) r.coeffs_[static_cast<std::size_t>(n)] = -coeff(n);
  return r;
}

QSeries operator*(QSeries a, const Rational& s) {
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

std::string QSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n <= order(); ++n) {
    if (coeff(n).is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool wrap = coeff(n).terms().size() > 1;
    if (n == 0) {
      os << coeff(n).str();
    } else {
      os << (wrap ? "(" : "") << coeff(n).str() << (wrap ? ")" : "") << "*Q";
      if (n > 1) os << "^" << n;
    }
  }
  if (first) os << "0";
  os << " + O(Q^" << order() + 1 << ")";
  return os.str();
}

QSeries series_inv(const QSeries& a) {
  const UVPoly& c0 = a.coeff(0);
  if (!c0.is_constant() || c0.is_zero())
    throw NotUnitError("series_inv: constant term is not an invertible constant");
  const Rational u0 = c0.constant_term().inverse();
  QSeries b(a.order());
  b.set_coeff(0, UVPoly(u0));
  for (int n = 1; n <= a.order(); ++n) {
    UVPoly s;
    for (int k = 1; k <= n; ++k) s += a.coeff(k) * b.coeff(n - k);
    b.set_coeff(n, s * (-u0));
  }
  return b;
}

QSeries series_log(const QSeries& a) {
  if (a.coeff(0) != UVPoly(1))
    throw NonzeroConstantError("series_log: constant term must be 1");
  const int N = a.order();
  QSeries x = a - QSeries::one(N); // vanishing constant term
  QSeries r(N), xk = x;
  for (int k = 1; k <= N; ++k) {
    Rational c(k % 2 == 1 ? 1 : -1, k);
    r += xk * c;
    if (k < N) xk *= x;
  }
  return r;
}

QSeries series_exp(const QSeries& a) {
  if (!a.coeff(0).is_zero())
    throw NonzeroConstantError("series_exp: constant term must be 0");
  const int N = a.order();
  QSeries r = QSeries::one(N);
  QSeries xk = QSeries::one(N);
  Rational inv_fact(1);
  for (int k = 1; k <= N; ++k) {
    xk *= a;
    inv_fact /= Rational(k);
    r += xk * inv_fact;
  }
  return r;
}

QSeries binom_power(BinomBase base, long long e, int order) {
  UVPoly t;
  switch (base) {
    case BinomBase::OneMinusQ: t = UVPoly(1); break;
    case BinomBase::OneMinusUQ: t = UVPoly::monomial(1, 0); break;
    case BinomBase::OneMinusVQ: t = UVPoly::monomial(0, 1); break;
    case BinomBase::OneMinusUVQ: t = UVPoly::monomial(1, 1); break;
  }
  QSeries b = QSeries::one(order);
  if (order >= 1) b.set_coeff(1, -t);
  if (e == 0) return QSeries::one(order);
  return series_exp(series_log(b) * Rational(e));
}

} // namespace tautchi
