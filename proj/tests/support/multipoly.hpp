#pragma once

// Test-only sparse polynomial ring over named commuting atoms, used to run
// the templated combiners symbolically and compare term-by-term against
// hand-expanded low orders.

#include "tautchi/rational.hpp"

#include <map>
#include <string>

namespace tautchi::testsupport {

class MultiPoly {
public:
  using Mono = std::map<std::string, int>; // atom -> exponent > 0
  using Map = std::map<Mono, Rational>;

  MultiPoly() = default;
  MultiPoly(int n) {
    if (n != 0) c_[{}] = Rational(n);
  }
  static MultiPoly atom(const std::string& name) {
    MultiPoly p;
    p.c_[{{name, 1}}] = Rational(1);
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  const Map& terms() const { return c_; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    for (const auto& [m, c] : b.c_) a.add(m, c);
    return a;
  }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
    for (const auto& [m, c] : b.c_) a.add(m, -c);
    return a;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.c_)
      for (const auto& [mb, cb] : b.c_) {
        Mono m = ma;
        for (const auto& [name, e] : mb) m[name] += e;
        r.add(m, ca * cb);
      }
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.c_ == b.c_; }

private:
  Map c_;
  void add(const Mono& m, const Rational& val) {
    auto it = c_.find(m);
    if (it == c_.end()) {
      if (!val.is_zero()) c_[m] = val;
      return;
    }
    it->second += val;
    if (it->second.is_zero()) c_.erase(it);
  }
};

} // namespace tautchi::testsupport
