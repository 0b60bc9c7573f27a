#include "tautchi/ratfun.hpp"

#include <algorithm>
#include <cassert>

namespace tautchi {

ZLaurent FactoredDen::expand() const {
  ZLaurent r = ZLaurent::monomial(shift, c);
  for (const auto& [k, m] : cyc)
    for (int i = 0; i < m; ++i) r *= ZLaurent::one_minus_z(k);
  if (!rest.is_one()) r *= rest;
  return r;
}

bool FactoredDen::is_one() const {
  return c.is_one() && shift == 0 && cyc.empty() && rest.is_one();
}

void FactoredDen::mul_one_minus_z(int t) {
  assert(t != 0);
  if (t > 0) {
    // (1 - z^{-t}) with t < 0 never reaches here; keep the positive form.
    cyc[t] += 1;
  } else {
    // (1 - z^t) = -z^t (1 - z^{-t}) for t < 0.
    c = -c;
    shift += t;
    cyc[-t] += 1;
  }
}

RatFunZ::RatFunZ(LaurentZ num) : num_(std::move(num)) {}

RatFunZ RatFunZ::from_factored(LaurentZ num, FactoredDen den) {
  RatFunZ f;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  f.normalize();
  return f;
}

RatFunZ::RatFunZ(LaurentZ num, const ZLaurent& den) : num_(std::move(num)) {
  if (den.is_zero()) throw std::domain_error("RatFunZ: zero denominator");
  FactoredDen d;
  d.shift = den.min_exp();
  ZLaurent body = den.shifted(-d.shift);
  // Trial-divide by (1 - z^k), largest k first so that e.g. 1 - z^2 is
  // recognized as a single factor rather than (1 - z)(1 + z).
  for (int k = body.max_exp(); k >= 1; --k) {
    ZLaurent q;
    while (!body.is_zero() && body.max_exp() >= k && body.try_divide(ZLaurent::one_minus_z(k), q)) {
      d.cyc[k] += 1;
      body = q;
    }
  }
  // Exact division preserves the nonzero constant term, so body stays an
  // ordinary polynomial; whatever is left is a constant or goes to rest.
  if (body.max_exp() == 0) {
    d.c = body.coeff(0);
  } else {
    d.rest = body;
  }
  den_ = std::move(d);
  normalize();
}

// Positive rational content of the numerator: gcd of all coefficient
// numerators over lcm of all coefficient denominators.
static Rational content(const LaurentZ& p) {
  mpz_class g = 0, l = 1;
  for (const auto& [e, uv] : p.terms())
    for (const auto& [k, c] : uv.terms()) {
      g = gcd(g, c.num());
      l = lcm(l, c.den());
    }
  if (g == 0) return Rational(1);
  return Rational(mpq_class(g, l));
}

void RatFunZ::normalize() {
  if (num_.is_zero()) {
    den_ = FactoredDen();
    return;
  }
  int m = num_.min_exp();
  if (m != 0) {
    num_ = num_.shifted(-m);
    den_.shift -= m;
  }
  Rational r = content(num_);
  if (!r.is_one()) {
    num_ *= r.inverse();
    den_.c /= r;
  }
  if (den_.c.sign() < 0) {
    num_ = -num_;
    den_.c = -den_.c;
  }
}

RatFunZ& RatFunZ::operator+=(const RatFunZ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  const FactoredDen& A = den_;
  const FactoredDen& B = o.den_;
  const bool shared_rest = A.rest == B.rest;

  // lcm = A * B / gcd, computed factorwise.
  FactoredDen L;
  L.c = A.c * B.c;
  L.shift = std::max(A.shift, B.shift);
  L.cyc = A.cyc;
  for (const auto& [k, m] : B.cyc) {
    auto it = L.cyc.find(k);
    if (it == L.cyc.end())
      L.cyc[k] = m;
    else
      it->second = std::max(it->second, m);
  }
  L.rest = shared_rest ? A.rest : A.rest * B.rest;

  auto complement = [&](const FactoredDen& D) {
    // (poly part of L) / (poly part of D), expanded.
    ZLaurent comp = ZLaurent::monomial(L.shift - D.shift, Rational(1));
    for (const auto& [k, m] : L.cyc) {
      auto it = D.cyc.find(k);
      int extra = m - (it == D.cyc.end() ? 0 : it->second);
      for (int i = 0; i < extra; ++i) comp *= ZLaurent::one_minus_z(k);
    }
    if (!shared_rest) {
      const ZLaurent& other = (&D == &A) ? B.rest : A.rest;
      if (!other.is_one()) comp *= other;
    }
    return comp;
  };

  LaurentZ n = num_ * complement(A);
  n *= B.c;
  LaurentZ n2 = o.num_ * complement(B);
  n2 *= A.c;
  n += n2;

  num_ = std::move(n);
  den_ = std::move(L);
  normalize();
  return *this;
}

RatFunZ RatFunZ::operator-() const {
  RatFunZ r = *this;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const RatFunZ& a, const RatFunZ& b) {
  return a.num_ * b.den_expanded() == b.num_ * a.den_expanded();
}

LaurentZ RatFunZ::as_laurent() const {
  if (num_.is_zero()) return LaurentZ();
  LaurentZ q;
  if (!num_.try_divide(den_.expand(), q))
    throw NotConstantError("RatFunZ: denominator does not divide numerator");
  return q;
}

UVPoly RatFunZ::constant_value() const {
  LaurentZ q = as_laurent();
  if (q.is_zero()) return UVPoly();
  if (q.min_exp() != 0 || q.max_exp() != 0)
    throw NotConstantError("RatFunZ: value depends on z");
  return q.coeff(0);
}

UVPoly RatFunZ::eval_at_one() const { return as_laurent().eval_at_one(); }

RatFunZ ratfun_sum(std::vector<RatFunZ> parts) {
  if (parts.empty()) return RatFunZ();
  // Balanced fold keeps intermediate denominators close in shape, so the
  // factorwise lcm stays small.
  while (parts.size() > 1) {
    std::vector<RatFunZ> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
    if (parts.size() % 2 == 1) next.push_back(parts.back());
    parts = std::move(next);
  }
  return parts.front();
}

UVPoly ratfun_to_constant(const RatFunZ& f) { return f.constant_value(); }

} // namespace tautchi
