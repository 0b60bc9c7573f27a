#include "tautchi/hilbloc.hpp"

#include "tautchi/errors.hpp"
#include "tautchi/partitions.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

using namespace tautchi;
using namespace tautchi::hilb;

namespace {

// Coefficients of (prod_k (1 - q^k)^{-1})^charts, the fixed-point counting
// series, computed by integer convolution.
std::vector<long long> fixed_point_counts(int charts, int upto) {
  std::vector<long long> p(static_cast<std::size_t>(upto) + 1, 0);
  p[0] = 1;
  // One chart: partition numbers via the standard product expansion.
  for (int k = 1; k <= upto; ++k)
    for (int m = k; m <= upto; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - k)];
  std::vector<long long> r(static_cast<std::size_t>(upto) + 1, 0);
  r[0] = 1;
  for (int c = 0; c < charts; ++c) {
    std::vector<long long> next(static_cast<std::size_t>(upto) + 1, 0);
    for (int i = 0; i <= upto; ++i)
      for (int j = 0; i + j <= upto; ++j)
        next[static_cast<std::size_t>(i + j)] += r[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(j)];
    r = std::move(next);
  }
  return r;
}

std::multiset<std::pair<int, int>> as_multiset(const std::vector<toric::Vec2>& v) {
  std::multiset<std::pair<int, int>> s;
  for (const toric::Vec2& w : v) s.insert({w[0], w[1]});
  return s;
}

} // namespace

TEST_CASE("partition enumeration matches the classical counts") {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    const auto ps = partitions(n);
    CHECK(ps.size() == counts[static_cast<std::size_t>(n)]);
    for (const Partition& p : ps) {
      CHECK(p.size() == n);
      CHECK(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
      for (int part : p.parts) CHECK(part >= 1);
    }
  }
  CHECK(partitions(0).size() == 1);
  CHECK(partitions(0)[0].parts.empty());
}

TEST_CASE("arm and leg combinatorics") {
  const Partition p{{3, 2}};
  // Diagram rows: XXX / XX.
  CHECK(p.arm(0, 0) == 2);
  CHECK(p.leg(0, 0) == 1);
  CHECK(p.arm(0, 2) == 0);
  CHECK(p.leg(0, 2) == 0);
  CHECK(p.arm(1, 0) == 1);
  CHECK(p.leg(1, 0) == 0);
  CHECK(p.size() == 5);
  CHECK(p.rows() == 2);
}

TEST_CASE("fixed points are partition tuples of total size n") {
  const toric::ToricSurface p2 = toric::ToricSurface::p2();
  for (int n = 0; n <= 4; ++n) {
    const auto fps = enumerate_fixed_points(p2, n);
    std::set<std::vector<std::vector<int>>> seen;
    for (const FixedPoint& fp : fps) {
      CHECK(fp.mu.size() == 3);
      CHECK(fp.size() == n);
      std::vector<std::vector<int>> key;
      for (const Partition& mu : fp.mu) key.push_back(mu.parts);
      seen.insert(key);
    }
    CHECK(seen.size() == fps.size());
  }
  CHECK_THROWS_AS(enumerate_fixed_points(p2, -1), UsageError);
}

TEST_CASE("fixed point counts match the generating function") {
  const toric::ToricSurface p2 = toric::ToricSurface::p2();
  const auto expect3 = fixed_point_counts(3, 6);
  for (int n = 0; n <= 6; ++n)
    CHECK(enumerate_fixed_points(p2, n).size() == static_cast<std::size_t>(expect3[static_cast<std::size_t>(n)]));
  const toric::ToricSurface q = toric::ToricSurface::p1xp1();
  const auto expect4 = fixed_point_counts(4, 5);
  for (int n = 0; n <= 5; ++n)
    CHECK(enumerate_fixed_points(q, n).size() == static_cast<std::size_t>(expect4[static_cast<std::size_t>(n)]));
  // Frozen spot values.
  CHECK(enumerate_fixed_points(p2, 5).size() == 108);
  CHECK(enumerate_fixed_points(p2, 6).size() == 221);
  CHECK(enumerate_fixed_points(q, 4).size() == 105);
}

TEST_CASE("structure sheaf and tangent weights on the standard chart") {
  const toric::Chart std_chart = toric::charts(toric::ToricSurface::p2())[0];
  REQUIRE(std_chart.w1 == toric::Vec2{1, 0});
  REQUIRE(std_chart.w2 == toric::Vec2{0, 1});

  const Partition row2{{2}};
  // O_Z weights -c w1 - r w2 over boxes (0,0), (0,1).
  CHECK(as_multiset(oz_character(row2, std_chart)) ==
        std::multiset<std::pair<int, int>>{{0, 0}, {-1, 0}});
  // Tangent weights per box: (a+1) w1 - l w2 and -a w1 + (l+1) w2.
  CHECK(as_multiset(tangent_character(row2, std_chart)) ==
        std::multiset<std::pair<int, int>>{{2, 0}, {-1, 1}, {1, 0}, {0, 1}});

  const Partition hook{{2, 1}};
  CHECK(as_multiset(oz_character(hook, std_chart)) ==
        std::multiset<std::pair<int, int>>{{0, 0}, {-1, 0}, {0, -1}});
  CHECK(tangent_character(hook, std_chart).size() == 6);
}

TEST_CASE("tautological weights add the fiber character") {
  const toric::ToricSurface S = toric::ToricSurface::p2();
  const toric::ToricLineBundle L{{1, 0, 0}};
  const auto fps = enumerate_fixed_points(S, 2);
  for (const FixedPoint& fp : fps) {
    const auto w = taut_character(S, L, fp);
    CHECK(w.size() == 2);
    // A twist shifts every weight uniformly.
    const auto wt = taut_character(S, L, fp, {3, -1});
    REQUIRE(wt.size() == w.size());
    auto base = w;
    for (auto& x : base) x = toric::add(x, {3, -1});
    CHECK(as_multiset(wt) == as_multiset(base));
  }
  CHECK_THROWS_AS(taut_character(S, L, FixedPoint{{Partition{{1}}}}), UsageError);
}

TEST_CASE("admissibility scanning") {
  const toric::ToricSurface p2 = toric::ToricSurface::p2();
  // (1, 1) pairs to zero against the chart character (-1, 1), so it is out
  // at every order; (1, 2) survives until the (a, l) = (0, 2) box appears.
  CHECK_FALSE(is_admissible(p2, 1, {1, 1}));
  CHECK(is_admissible(p2, 1, {1, 2}));
  CHECK(is_admissible(p2, 2, {1, 2}));
  CHECK_FALSE(is_admissible(p2, 3, {1, 2}));
  CHECK(find_specialization(p2, 1) == toric::Specialization{1, 2});
  CHECK(find_specialization(p2, 3) == toric::Specialization{1, 3});
  const auto s = find_specialization(p2, 4);
  CHECK(is_admissible(p2, 4, s));
  CHECK(s.a == 1);
  // The found specialization never kills a weight during the sum.
  CHECK_NOTHROW(hilb_chi_series(p2, toric::trivial_bundle(p2), toric::trivial_bundle(p2), 3, s));
  // An inadmissible one is rejected mid-sum.
  CHECK_THROWS_AS(hilb_chi_series(p2, toric::trivial_bundle(p2), toric::trivial_bundle(p2), 2,
                                  toric::Specialization{1, 1}),
                  InadmissibleSpecializationError);
}

TEST_CASE("series starts at 1 and reduces correctly at n = 1") {
  const toric::ToricSurface S = toric::ToricSurface::p2();
  const toric::ToricLineBundle K{{1, 0, 0}}, L{{2, 0, 0}};
  const QSeries s = hilb_chi_series(S, K, L, 1);
  CHECK(s.coeff(0) == UVPoly(1));
  CHECK(s.coeff(1) == toric::chi_lambda_pair(S, K, L));
}

TEST_CASE("n = 1 reduction holds across surfaces and bundles") {
  using toric::ToricLineBundle;
  using toric::ToricSurface;
  struct Case {
    ToricSurface S;
    ToricLineBundle K, L;
  };
  const std::vector<Case> cases{
      {ToricSurface::p2(), {{1, 0, 0}}, {{2, 0, 0}}},
      {ToricSurface::p2(), {{-1, 0, 0}}, {{0, 0, 2}}},
      {ToricSurface::p1xp1(), {{1, 0, 0, 0}}, {{0, 1, 0, 0}}},
      {ToricSurface::hirzebruch(1), {{1, 1, 0, 0}}, {{0, -1, 1, 0}}},
      {ToricSurface::hirzebruch(2), {{0, 0, 0, 0}}, {{1, 0, 2, 0}}},
  };
  for (const Case& c : cases)
    CHECK(hilb_chi_series(c.S, c.K, c.L, 1).coeff(1) == toric::chi_lambda_pair(c.S, c.K, c.L));
}

TEST_CASE("u = v = 0 leaves the structure sheaf series") {
  // The constant term of each coefficient is chi(O_{Hilb^n}); with
  // chi(O_S) = 1 the whole constant-term series is 1/(1 - Q).
  const toric::ToricSurface S = toric::ToricSurface::p2();
  const QSeries s = hilb_chi_series(S, toric::trivial_bundle(S), toric::trivial_bundle(S), 3);
  for (int n = 0; n <= 3; ++n) CHECK(s.coeff(n).constant_term() == Rational(1));
}

TEST_CASE("coefficients are integral polynomials with bounded degrees") {
  const toric::ToricSurface S = toric::ToricSurface::p1xp1();
  const toric::ToricLineBundle K{{1, 0, 0, 0}}, L{{0, 1, 0, 0}};
  const QSeries s = hilb_chi_series(S, K, L, 3);
  for (int n = 0; n <= 3; ++n) {
    CHECK(s.coeff(n).has_integer_coeffs());
    CHECK(s.coeff(n).max_udeg() <= n);
    CHECK(s.coeff(n).max_vdeg() <= n);
  }
}

TEST_CASE("the series does not depend on the specialization") {
  const toric::ToricSurface S = toric::ToricSurface::p2();
  const toric::ToricLineBundle K{{1, 0, 0}}, L{{2, 0, 0}};
  const QSeries ref = hilb_chi_series(S, K, L, 3);
  int checked = 0;
  for (int b = 2; b <= 12 && checked < 3; ++b) {
    if (!is_admissible(S, 3, {1, b})) continue;
    ++checked;
    CHECK(hilb_chi_series(S, K, L, 3, toric::Specialization{1, b}) == ref);
  }
  CHECK(checked == 3);
}

TEST_CASE("the series does not depend on the equivariant lift") {
  const toric::ToricSurface S = toric::ToricSurface::p2();
  const toric::ToricLineBundle K{{1, 0, 0}}, L{{2, 0, 0}};
  const QSeries ref = hilb_chi_series(S, K, L, 3);
  CHECK(hilb_chi_series(S, K, L, 3, std::nullopt, {1, 0}, {0, 0}) == ref);
  CHECK(hilb_chi_series(S, K, L, 3, std::nullopt, {0, 0}, {-2, 5}) == ref);
  CHECK(hilb_chi_series(S, K, L, 3, std::nullopt, {7, 3}, {1, -1}) == ref);
}

TEST_CASE("linearly equivalent bundles give the same series") {
  const toric::ToricSurface S = toric::ToricSurface::p2();
  const QSeries a = hilb_chi_series(S, {{1, 0, 0}}, {{2, 0, 0}}, 2);
  const QSeries b = hilb_chi_series(S, {{0, 1, 0}}, {{0, 0, 2}}, 2);
  CHECK(a == b);
}

TEST_CASE("series input validation") {
  const toric::ToricSurface S = toric::ToricSurface::p2();
  CHECK_THROWS_AS(hilb_chi_series(S, toric::trivial_bundle(S), toric::trivial_bundle(S), -1),
                  UsageError);
  CHECK_THROWS_AS(hilb_chi_series(S, {{1, 0}}, toric::trivial_bundle(S), 1), UsageError);
}
