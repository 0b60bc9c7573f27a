#include "tautchi/uvpoly.hpp"

#include <sstream>

namespace tautchi {

UVPoly UVPoly::monomial(int udeg, int vdeg, const Rational& c) {
  UVPoly p;
  if (!c.is_zero()) p.c_[{udeg, vdeg}] = c;
  return p;
}

Rational UVPoly::coeff(int udeg, int vdeg) const {
  auto it = c_.find({udeg, vdeg});
  return it == c_.end() ? Rational(0) : it->second;
}

int UVPoly::max_udeg() const {
  int d = 0;
  for (const auto& [k, c] : c_) d = std::max(d, k.first);
  return d;
}

int UVPoly::max_vdeg() const {
  int d = 0;
  for (const auto& [k, c] : c_) d = std::max(d, k.second);
  return d;
}

void UVPoly::set(const Key& k, const Rational& val) {
  if (val.is_zero())
    c_.erase(k);
  else
    c_[k] = val;
}

UVPoly& UVPoly::operator+=(const UVPoly& o) {
  for (const auto& [k, c] : o.c_) set(k, coeff(k.first, k.second) + c);
  return *this;
}

UVPoly& UVPoly::operator-=(const UVPoly& o) {
  for (const auto& [k, c] : o.c_) set(k, coeff(k.first, k.second) - c);
  return *this;
}

UVPoly UVPoly::operator-() const {
  UVPoly r;
  for (const auto& [k, c] : c_) r.c_[k] = -c;
  return r;
}

UVPoly operator*(const UVPoly& a, const UVPoly& b) {
  UVPoly r;
  for (const auto& [ka, ca] : a.c_)
    for (const auto& [kb, cb] : b.c_) {
      UVPoly::Key k{ka.first + kb.first, ka.second + kb.second};
      r.set(k, r.coeff(k.first, k.second) + ca * cb);
    }
  return r;
}

UVPoly& UVPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [k, c] : c_) c *= s;
  return *this;
}

UVPoly UVPoly::substitute_powers(int r) const {
  UVPoly p;
  for (const auto& [k, c] : c_) p.c_[{k.first * r, k.second * r}] = c;
  return p;
}

bool UVPoly::has_integer_coeffs() const {
  for (const auto& [k, c] : c_)
    if (!c.is_integer()) return false;
  return true;
}

std::string UVPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : c_) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      a = a.abs();
    }
    bool has_var = k.first > 0 || k.second > 0;
    if (!has_var || !a.is_one()) {
      os << a.str();
      if (has_var) os << "*";
    }
    if (k.first > 0) {
      os << "u";
      if (k.first > 1) os << "^" << k.first;
      if (k.second > 0) os << "*";
    }
    if (k.second > 0) {
      os << "v";
      if (k.second > 1) os << "^" << k.second;
    }
  }
  return os.str();
}

} // namespace tautchi
