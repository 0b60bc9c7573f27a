#include "tautchi/zlaurent.hpp"

#include <cassert>
#include <sstream>

namespace tautchi {

ZLaurent ZLaurent::monomial(int exp, const Rational& c) {
  ZLaurent p;
  if (!c.is_zero()) p.c_[exp] = c;
  return p;
}

ZLaurent ZLaurent::one_minus_z(int k) {
  assert(k != 0);
  ZLaurent p;
  p.c_[0] = Rational(1);
  p.c_[k] = Rational(-1);
  return p;
}

bool ZLaurent::is_one() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one();
}

Rational ZLaurent::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Rational(0) : it->second;
}

int ZLaurent::min_exp() const { return c_.begin()->first; }
int ZLaurent::max_exp() const { return c_.rbegin()->first; }

void ZLaurent::set(int exp, const Rational& val) {
  if (val.is_zero())
    c_.erase(exp);
  else
    c_[exp] = val;
}

ZLaurent& ZLaurent::operator+=(const ZLaurent& o) {
  for (const auto& [e, c] : o.c_) set(e, coeff(e) + c);
  return *this;
}

ZLaurent& ZLaurent::operator-=(const ZLaurent& o) {
  for (const auto& [e, c] : o.c_) set(e, coeff(e) - c);
  return *this;
}

ZLaurent ZLaurent::operator-() const {
  ZLaurent r;
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

ZLaurent operator*(const ZLaurent& a, const ZLaurent& b) {
  ZLaurent r;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
  return r;
}

ZLaurent& ZLaurent::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [e, c] : c_) c *= s;
  return *this;
}

ZLaurent ZLaurent::shifted(int k) const {
  ZLaurent r;
  for (const auto& [e, c] : c_) r.c_[e + k] = c;
  return r;
}

bool ZLaurent::try_divide(const ZLaurent& d, ZLaurent& q) const {
  assert(!d.is_zero());
  q = ZLaurent();
  if (is_zero()) return true;
  // z is invertible, so normalize both operands to honest polynomials
  // with nonzero constant term and divide classically; the net z-power
  // goes back into the quotient.
  const int sn = min_exp(), sd = d.min_exp();
  ZLaurent rem = shifted(-sn);
  const ZLaurent den = d.shifted(-sd);
  const int dmax = den.max_exp();
  const Rational dlead = den.coeff(dmax);
  while (!rem.is_zero() && rem.max_exp() >= dmax) {
    int e = rem.max_exp() - dmax;
    Rational c = rem.coeff(rem.max_exp()) / dlead;
    q.set(e, q.coeff(e) + c);
    rem -= den.shifted(e) * ZLaurent(c);
  }
  if (!rem.is_zero()) return false;
  q = q.shifted(sn - sd);
  return true;
}

Rational ZLaurent::eval_at_one() const {
  Rational s;
  for (const auto& [e, c] : c_) s += c;
  return s;
}

std::string ZLaurent::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    if (e != 0) os << "*z^" << e;
  }
  return os.str();
}

LaurentZ LaurentZ::monomial(int exp, const UVPoly& c) {
  LaurentZ p;
  if (!c.is_zero()) p.c_[exp] = c;
  return p;
}

LaurentZ LaurentZ::from_zlaurent(const ZLaurent& p) {
  LaurentZ r;
  for (const auto& [e, c] : p.terms()) r.c_[e] = UVPoly(c);
  return r;
}

UVPoly LaurentZ::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? UVPoly() : it->second;
}

int LaurentZ::min_exp() const { return c_.begin()->first; }
int LaurentZ::max_exp() const { return c_.rbegin()->first; }

void LaurentZ::set(int exp, const UVPoly& val) {
  if (val.is_zero())
    c_.erase(exp);
  else
    c_[exp] = val;
}

LaurentZ& LaurentZ::operator+=(const LaurentZ& o) {
  for (const auto& [e, c] : o.c_) set(e, coeff(e) + c);
  return *this;
}

LaurentZ& LaurentZ::operator-=(const LaurentZ& o) {
  for (const auto& [e, c] : o.c_) set(e, coeff(e) - c);
  return *this;
}

LaurentZ LaurentZ::operator-() const {
  LaurentZ r;
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

LaurentZ operator*(const LaurentZ& a, const LaurentZ& b) {
  LaurentZ r;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
  return r;
}

LaurentZ operator*(const LaurentZ& a, const ZLaurent& b) {
  LaurentZ r;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.terms()) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
  return r;
}

LaurentZ& LaurentZ::operator*=(const UVPoly& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [e, c] : c_) c *= s;
  return *this;
}

LaurentZ& LaurentZ::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [e, c] : c_) c *= s;
  return *this;
}

LaurentZ LaurentZ::shifted(int k) const {
  LaurentZ r;
  for (const auto& [e, c] : c_) r.c_[e + k] = c;
  return r;
}

bool LaurentZ::try_divide(const ZLaurent& d, LaurentZ& q) const {
  assert(!d.is_zero());
  q = LaurentZ();
  if (is_zero()) return true;
  const int sn = min_exp(), sd = d.min_exp();
  LaurentZ rem = shifted(-sn);
  const ZLaurent den = d.shifted(-sd);
  const int dmax = den.max_exp();
  const Rational dlead_inv = den.coeff(dmax).inverse();
  while (!rem.is_zero() && rem.max_exp() >= dmax) {
    int e = rem.max_exp() - dmax;
    UVPoly c = rem.coeff(rem.max_exp()) * dlead_inv;
    q.set(e, q.coeff(e) + c);
    LaurentZ sub;
    for (const auto& [ed, cd] : den.terms()) sub.set(ed + e, c * cd);
    rem -= sub;
  }
  if (!rem.is_zero()) return false;
  q = q.shifted(sn - sd);
  return true;
}

UVPoly LaurentZ::eval_at_one() const {
  UVPoly s;
  for (const auto& [e, c] : c_) s += c;
  return s;
}

std::string LaurentZ::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (e != 0) os << "*z^" << e;
  }
  return os.str();
}

} // namespace tautchi
