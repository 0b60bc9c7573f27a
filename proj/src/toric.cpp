#include "tautchi/toric.hpp"

#include "tautchi/errors.hpp"
#include "tautchi/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tautchi::toric {

ToricSurface::ToricSurface(std::vector<Vec2> rays, Kind kind, int e)
    : rays_(std::move(rays)), kind_(kind), e_(e) {
  validate();
}

void ToricSurface::validate() const {
  const int n = num_rays();
  if (n < 3) throw InvalidFanError("fan: need at least 3 rays");
  for (const Vec2& v : rays_) {
    if (v[0] == 0 && v[1] == 0) throw InvalidFanError("fan: zero ray");
    if (std::gcd(std::abs(v[0]), std::abs(v[1])) != 1)
      throw InvalidFanError("fan: ray not primitive");
  }
  long long sign = det(rays_[0], rays_[1]);
  if (sign != 1 && sign != -1)
    throw InvalidFanError("fan: consecutive rays must span the lattice");
  for (int i = 0; i < n; ++i) {
    long long d = det(rays_[static_cast<std::size_t>(i)], rays_[static_cast<std::size_t>((i + 1) % n)]);
    if (d != sign)
      throw InvalidFanError("fan: consecutive determinants must all be +1 or all -1");
  }
  // Winding count: each cone spans an arc < pi, so the +x direction lies in
  // the half-open arc [v_i, v_{i+1}) for exactly one i iff the rays walk
  // around the origin exactly once.  Orientation-reversed fans are checked
  // on the reversed list.
  std::vector<Vec2> r = rays_;
  if (sign < 0) std::reverse(r.begin(), r.end());
  int crossings = 0;
  for (int i = 0; i < n; ++i) {
    Vec2 v = r[static_cast<std::size_t>(i)];
    Vec2 w = r[static_cast<std::size_t>((i + 1) % n)];
    if ((v[0] == 1 && v[1] == 0) || (v[1] < 0 && w[1] > 0)) ++crossings;
  }
  if (crossings != 1) throw InvalidFanError("fan: rays must wind around the origin exactly once");
}

ToricSurface ToricSurface::p2() {
  return ToricSurface({{1, 0}, {0, 1}, {-1, -1}}, Kind::P2);
}

ToricSurface ToricSurface::p1xp1() {
  return ToricSurface({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, Kind::P1xP1);
}

ToricSurface ToricSurface::hirzebruch(int e) {
  if (e < 0) throw InvalidFanError("hirzebruch: e must be >= 0");
  return ToricSurface({{1, 0}, {0, 1}, {-1, e}, {0, -1}}, Kind::Hirzebruch, e);
}

std::vector<Chart> charts(const ToricSurface& S) {
  std::vector<Chart> out;
  const int n = S.num_rays();
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Chart ch;
    ch.index = i;
    ch.v1 = S.rays()[static_cast<std::size_t>(i)];
    ch.v2 = S.rays()[static_cast<std::size_t>((i + 1) % n)];
    const int d = static_cast<int>(det(ch.v1, ch.v2)); // +-1
    ch.w1 = {ch.v2[1] / d, -ch.v2[0] / d};
    ch.w2 = {-ch.v1[1] / d, ch.v1[0] / d};
    out.push_back(ch);
  }
  return out;
}

static void check_bundle(const ToricSurface& S, const ToricLineBundle& Lb, const char* who) {
  if (static_cast<int>(Lb.ray_coeffs.size()) != S.num_rays())
    throw UsageError(std::string(who) + ": one ray coefficient per ray required");
}

ToricLineBundle trivial_bundle(const ToricSurface& S) {
  return {std::vector<int>(static_cast<std::size_t>(S.num_rays()), 0)};
}

ToricLineBundle canonical_bundle(const ToricSurface& S) {
  return {std::vector<int>(static_cast<std::size_t>(S.num_rays()), -1)};
}

ToricLineBundle tensor(const ToricLineBundle& a, const ToricLineBundle& b) {
  if (a.ray_coeffs.size() != b.ray_coeffs.size())
    throw UsageError("tensor: bundles live on different fans");
  ToricLineBundle r = a;
  for (std::size_t i = 0; i < r.ray_coeffs.size(); ++i) r.ray_coeffs[i] += b.ray_coeffs[i];
  return r;
}

ToricLineBundle dual(const ToricLineBundle& a) {
  ToricLineBundle r = a;
  for (int& c : r.ray_coeffs) c = -c;
  return r;
}

Vec2 fiber_character(const ToricSurface& S, const ToricLineBundle& Lb, const Chart& chart) {
  check_bundle(S, Lb, "fiber_character");
  const int n = S.num_rays();
  const int a1 = Lb.ray_coeffs[static_cast<std::size_t>(chart.index)];
  const int a2 = Lb.ray_coeffs[static_cast<std::size_t>((chart.index + 1) % n)];
  // <m, v_i> = a_{v_i}, <m, v_{i+1}> = a_{v_{i+1}} in the dual basis.
  return add(scale(a1, chart.w1), scale(a2, chart.w2));
}

Specialization chart_admissible_spec(const ToricSurface& S) {
  const auto chs = charts(S);
  for (int b = 1;; ++b) {
    Specialization s{1, b};
    bool ok = true;
    for (const Chart& ch : chs)
      if (s(ch.w1) == 0 || s(ch.w2) == 0) {
        ok = false;
        break;
      }
    if (ok) return s;
  }
}

long long chi_line_bundle(const ToricSurface& S, const ToricLineBundle& Lb) {
  check_bundle(S, Lb, "chi_line_bundle");
  const Specialization s = chart_admissible_spec(S);
  std::vector<RatFunZ> parts;
  for (const Chart& ch : charts(S)) {
    const Vec2 m = fiber_character(S, Lb, ch);
    LaurentZ num = LaurentZ::monomial(static_cast<int>(s(m)), UVPoly(1));
    FactoredDen den;
    den.mul_one_minus_z(static_cast<int>(-s(ch.w1)));
    den.mul_one_minus_z(static_cast<int>(-s(ch.w2)));
    parts.push_back(RatFunZ::from_factored(std::move(num), std::move(den)));
  }
  const UVPoly val = ratfun_sum(std::move(parts)).eval_at_one();
  if (!val.is_constant())
    throw NotConstantError("chi_line_bundle: localization sum is not a constant");
  return val.constant_term().to_ll();
}

UVPoly chi_lambda_pair(const ToricSurface& S, const ToricLineBundle& K, const ToricLineBundle& L) {
  const long long c0 = chi_line_bundle(S, trivial_bundle(S));
  const long long cK = chi_line_bundle(S, dual(K));
  const long long cL = chi_line_bundle(S, L);
  const long long cKL = chi_line_bundle(S, tensor(dual(K), L));
  UVPoly r(c0);
  r -= UVPoly::monomial(1, 0, Rational(cK));
  r -= UVPoly::monomial(0, 1, Rational(cL));
  r += UVPoly::monomial(1, 1, Rational(cKL));
  return r;
}

ToricSurface blowup_at_chart(const ToricSurface& S, int chart_index) {
  const int n = S.num_rays();
  if (chart_index < 0 || chart_index >= n) throw UsageError("blowup_at_chart: chart out of range");
  std::vector<Vec2> rays = S.rays();
  const Vec2 e = add(rays[static_cast<std::size_t>(chart_index)],
                     rays[static_cast<std::size_t>((chart_index + 1) % n)]);
  rays.insert(rays.begin() + chart_index + 1, e);
  return ToricSurface(std::move(rays));
}

ToricLineBundle pullback_and_twist(const ToricSurface& S, int chart_index,
                                   const ToricLineBundle& Lb, int c) {
  check_bundle(S, Lb, "pullback_and_twist");
  const int n = S.num_rays();
  if (chart_index < 0 || chart_index >= n)
    throw UsageError("pullback_and_twist: chart out of range");
  std::vector<int> coeffs = Lb.ray_coeffs;
  const int a = coeffs[static_cast<std::size_t>(chart_index)] +
                coeffs[static_cast<std::size_t>((chart_index + 1) % n)] - c;
  coeffs.insert(coeffs.begin() + chart_index + 1, a);
  return {std::move(coeffs)};
}

bool fan_isomorphic(const ToricSurface& A, const ToricSurface& B) {
  const int n = A.num_rays();
  if (n != B.num_rays()) return false;
  const auto& a = A.rays();
  const auto& b = B.rays();
  auto at = [n](const std::vector<Vec2>& r, int i) {
    return r[static_cast<std::size_t>(((i % n) + n) % n)];
  };
  for (int j = 0; j < n; ++j) {
    for (int dir : {1, -1}) {
      // M is determined by a_0 -> b_j, a_1 -> b_{j+dir}; (a_0, a_1) is a
      // lattice basis, so M is integral by construction.
      const Vec2 p = at(b, j), q = at(b, j + dir);
      const long long d = det(a[0], a[1]); // +-1
      // Columns of M from M * a0 = p, M * a1 = q.
      const long long m00 = (p[0] * a[1][1] - q[0] * a[0][1]) * d;
      const long long m01 = (q[0] * a[0][0] - p[0] * a[1][0]) * d;
      const long long m10 = (p[1] * a[1][1] - q[1] * a[0][1]) * d;
      const long long m11 = (q[1] * a[0][0] - p[1] * a[1][0]) * d;
      if (std::abs(m00 * m11 - m01 * m10) != 1) continue;
      bool ok = true;
      for (int k = 0; k < n && ok; ++k) {
        const Vec2 v = a[static_cast<std::size_t>(k)];
        const Vec2 img{static_cast<int>(m00 * v[0] + m01 * v[1]),
                       static_cast<int>(m10 * v[0] + m11 * v[1])};
        ok = img == at(b, j + dir * k);
      }
      if (ok) return true;
    }
  }
  return false;
}

// ---- products of projective spaces ----------------------------------------

static void check_proj(const ProjProduct& X, const ProjBundle& Lb, const char* who) {
  if (X.lambda.size() != Lb.m.size())
    throw UsageError(std::string(who) + ": one twist per factor required");
}

ProjBundle trivial_bundle(const ProjProduct& X) {
  return {std::vector<int>(X.lambda.size(), 0)};
}

ProjBundle tensor(const ProjBundle& a, const ProjBundle& b) {
  if (a.m.size() != b.m.size()) throw UsageError("tensor: bundles live on different products");
  ProjBundle r = a;
  for (std::size_t i = 0; i < r.m.size(); ++i) r.m[i] += b.m[i];
  return r;
}

ProjBundle dual(const ProjBundle& a) {
  ProjBundle r = a;
  for (int& c : r.m) c = -c;
  return r;
}

long long chi_line_bundle(const ProjProduct& X, const ProjBundle& Lb) {
  check_proj(X, Lb, "chi_line_bundle");
  Rational r(1);
  for (std::size_t i = 0; i < X.lambda.size(); ++i) {
    const int l = X.lambda[i];
    if (l < 1) throw UsageError("chi_line_bundle: factors must be P^l with l >= 1");
    // binom(m + l, l) as a polynomial in m, exact for every integer m.
    for (int t = 1; t <= l; ++t) r *= Rational(Lb.m[i] + t, t);
  }
  return r.to_ll();
}

UVPoly chi_lambda_pair(const ProjProduct& X, const ProjBundle& K, const ProjBundle& L) {
  const long long c0 = chi_line_bundle(X, trivial_bundle(X));
  const long long cK = chi_line_bundle(X, dual(K));
  const long long cL = chi_line_bundle(X, L);
  const long long cKL = chi_line_bundle(X, tensor(dual(K), L));
  UVPoly r(c0);
  r -= UVPoly::monomial(1, 0, Rational(cK));
  r -= UVPoly::monomial(0, 1, Rational(cL));
  r += UVPoly::monomial(1, 1, Rational(cKL));
  return r;
}

// ---- degeneration scenarios ------------------------------------------------

DegenerationScenario make_blowup_scenario(const ToricSurface& S, int chart_index,
                                          const ToricLineBundle& K0, const ToricLineBundle& L0,
                                          int cK, int cL) {
  check_bundle(S, K0, "make_blowup_scenario");
  check_bundle(S, L0, "make_blowup_scenario");
  ToricSurface Y1 = blowup_at_chart(S, chart_index);
  ToricLineBundle K1 = pullback_and_twist(S, chart_index, K0, cK);
  ToricLineBundle L1 = pullback_and_twist(S, chart_index, L0, cL);
  ToricSurface Y2 = ToricSurface::p2();
  ToricSurface PD = ToricSurface::hirzebruch(1);
  std::ostringstream prov;
  prov << "degeneration to the normal cone of the fixed point of chart " << chart_index
       << "; bundles pr*K0 - " << cK << "*Exc and pr*L0 - " << cL
       << "*Exc restricted to the general fiber, the blowup, the exceptional P^2, "
          "and the P^1-bundle over the gluing curve";
  return DegenerationScenario{
      MarkedSurface{S, K0, L0},
      MarkedSurface{std::move(Y1), std::move(K1), std::move(L1)},
      MarkedSurface{std::move(Y2), {{cK, 0, 0}}, {{cL, 0, 0}}},
      MarkedSurface{std::move(PD), {{cK, 0, 0, 0}}, {{cL, 0, 0, 0}}},
      prov.str()};
}

// ---- cobordism generators ---------------------------------------------------

std::vector<GeneratorTriple> cobordism_generators(int n) {
  if (n < 1) throw UsageError("cobordism_generators: n must be >= 1");
  std::vector<GeneratorTriple> out;
  for (const auto& lambda : partitions_of(n)) {
    const std::size_t l = lambda.size();
    const ProjProduct X{lambda};
    const ProjBundle zero{std::vector<int>(l, 0)};
    auto unit = [&](std::size_t i) {
      ProjBundle b = zero;
      b.m[i] = 1;
      return b;
    };
    std::vector<GeneratorTriple> block;
    block.push_back({X, zero, zero});
    for (std::size_t i = 0; i < l; ++i) block.push_back({X, unit(i), zero});
    for (std::size_t j = 0; j < l; ++j) block.push_back({X, zero, unit(j)});
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j)
        if (i != j) block.push_back({X, unit(i), unit(j)});
    // The construction yields distinct triples; the dedup guards the
    // degenerate cases if the admissible set ever changes.
    for (const auto& t : block)
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  return out;
}

} // namespace tautchi::toric
