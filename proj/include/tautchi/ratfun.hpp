#pragma once

// Rational functions in z with LaurentZ numerators and u,v-free denominators.
//
// Denominators are kept factored as c * z^shift * prod_k (1 - z^k)^{m_k} * rest
// because every denominator the localization pipeline produces is literally a
// product of (1 - z^{+-k}) factors.  Factored gcd/lcm bookkeeping keeps
// incremental sums reduced exactly, with none of the coefficient blowup a
// univariate Euclid over Q would cause.  The full divide-out happens once, in
// as_laurent().

#include "tautchi/errors.hpp"
#include "tautchi/zlaurent.hpp"

#include <map>
#include <vector>

namespace tautchi {

struct FactoredDen {
  Rational c = Rational(1);    // nonzero scale, kept positive by normalization
  int shift = 0;               // power of z
  std::map<int, int> cyc;      // k >= 1 -> multiplicity of (1 - z^k)
  ZLaurent rest = ZLaurent(1); // leftover factor; 1 in the whole pipeline

  ZLaurent expand() const;
  bool is_one() const;
  // Multiply in a factor (1 - z^t), t != 0; negative t is normalized via
  // (1 - z^{-k}) = -z^{-k} (1 - z^k).
  void mul_one_minus_z(int t);
};

class RatFunZ {
public:
  RatFunZ() = default;                         // zero
  explicit RatFunZ(LaurentZ num);              // num / 1
  RatFunZ(LaurentZ num, const ZLaurent& den);  // den factored by trial division
  static RatFunZ from_factored(LaurentZ num, FactoredDen den);

  const LaurentZ& num() const { return num_; }
  const FactoredDen& den() const { return den_; }
  ZLaurent den_expanded() const { return den_.expand(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFunZ& operator+=(const RatFunZ& o);
  friend RatFunZ operator+(RatFunZ a, const RatFunZ& b) { return a += b; }
  RatFunZ operator-() const;

  // Semantic equality by cross-multiplication.
  friend bool operator==(const RatFunZ& a, const RatFunZ& b);
  friend bool operator!=(const RatFunZ& a, const RatFunZ& b) { return !(a == b); }

  // Exact quotient as a Laurent polynomial; NotConstantError if the
  // denominator does not divide the numerator.
  LaurentZ as_laurent() const;
  // as_laurent() restricted to z-degree 0; NotConstantError otherwise.
  UVPoly constant_value() const;
  // The non-equivariant value: as_laurent() evaluated at z = 1.
  UVPoly eval_at_one() const;

private:
  LaurentZ num_;
  FactoredDen den_;
  void normalize();
};

// Balanced fold; the reduced value is independent of the input order.
RatFunZ ratfun_sum(std::vector<RatFunZ> parts);

UVPoly ratfun_to_constant(const RatFunZ& f);

} // namespace tautchi
