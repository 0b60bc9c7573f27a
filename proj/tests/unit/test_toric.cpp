#include "tautchi/toric.hpp"

#include "tautchi/errors.hpp"

#include "doctest.h"

#include <set>
#include <vector>

using namespace tautchi;
using namespace tautchi::toric;

TEST_CASE("fan validation accepts the builtins") {
  CHECK(ToricSurface::p2().num_rays() == 3);
  CHECK(ToricSurface::p1xp1().num_rays() == 4);
  CHECK(ToricSurface::hirzebruch(3).num_rays() == 4);
  // Orientation-reversed input is a legal cyclic order.
  CHECK(ToricSurface({{-1, -1}, {0, 1}, {1, 0}}).num_rays() == 3);
}

TEST_CASE("fan validation rejects bad ray lists") {
  CHECK_THROWS_AS(ToricSurface({{1, 0}, {0, 1}}), InvalidFanError);
  CHECK_THROWS_AS(ToricSurface({{1, 0}, {0, 1}, {0, 0}}), InvalidFanError);
  CHECK_THROWS_AS(ToricSurface({{2, 0}, {0, 1}, {-1, -1}}), InvalidFanError);
  // Non-unimodular cone.
  CHECK_THROWS_AS(ToricSurface({{1, 0}, {1, 2}, {-1, -1}}), InvalidFanError);
  // Mixed orientation.
  CHECK_THROWS_AS(ToricSurface({{1, 0}, {0, 1}, {1, 1}}), InvalidFanError);
  // Winds around the origin twice.
  CHECK_THROWS_AS(ToricSurface({{1, 0}, {0, 1}, {-1, -1}, {1, 0}, {0, 1}, {-1, -1}}),
                  InvalidFanError);
  CHECK_THROWS_AS(ToricSurface::hirzebruch(-1), InvalidFanError);
}

TEST_CASE("charts carry the dual basis") {
  for (const ToricSurface& S :
       {ToricSurface::p2(), ToricSurface::p1xp1(), ToricSurface::hirzebruch(2),
        ToricSurface({{-1, -1}, {0, 1}, {1, 0}})}) {
    const auto chs = charts(S);
    CHECK(static_cast<int>(chs.size()) == S.num_rays());
    for (const Chart& ch : chs) {
      CHECK(det(ch.v1, ch.v2) * det(ch.w1, ch.w2) == 1); // dual bases
      CHECK(ch.w1[0] * ch.v1[0] + ch.w1[1] * ch.v1[1] == 1);
      CHECK(ch.w1[0] * ch.v2[0] + ch.w1[1] * ch.v2[1] == 0);
      CHECK(ch.w2[0] * ch.v1[0] + ch.w2[1] * ch.v1[1] == 0);
      CHECK(ch.w2[0] * ch.v2[0] + ch.w2[1] * ch.v2[1] == 1);
    }
  }
}

TEST_CASE("fiber characters pair correctly with the rays") {
  const ToricSurface S = ToricSurface::p2();
  const ToricLineBundle L{{5, -2, 7}};
  const auto chs = charts(S);
  for (const Chart& ch : chs) {
    const Vec2 m = fiber_character(S, L, ch);
    const int i = ch.index, j = (ch.index + 1) % 3;
    CHECK(m[0] * ch.v1[0] + m[1] * ch.v1[1] == L.ray_coeffs[static_cast<std::size_t>(i)]);
    CHECK(m[0] * ch.v2[0] + m[1] * ch.v2[1] == L.ray_coeffs[static_cast<std::size_t>(j)]);
  }
}

TEST_CASE("euler characteristics on the plane") {
  const ToricSurface S = ToricSurface::p2();
  auto o = [&](int a) { return ToricLineBundle{{a, 0, 0}}; };
  CHECK(chi_line_bundle(S, o(0)) == 1);
  CHECK(chi_line_bundle(S, o(1)) == 3);
  CHECK(chi_line_bundle(S, o(2)) == 6);
  CHECK(chi_line_bundle(S, o(5)) == 21);
  CHECK(chi_line_bundle(S, o(-1)) == 0);
  CHECK(chi_line_bundle(S, o(-2)) == 0);
  CHECK(chi_line_bundle(S, o(-3)) == 1);
  CHECK(chi_line_bundle(S, o(-4)) == 3);
}

TEST_CASE("euler characteristics on the quadric") {
  const ToricSurface S = ToricSurface::p1xp1();
  auto o = [&](int a, int b) { return ToricLineBundle{{a, b, 0, 0}}; };
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) CHECK(chi_line_bundle(S, o(a, b)) == (a + 1) * (b + 1));
}

TEST_CASE("linearly equivalent divisors give the same chi") {
  const ToricSurface S = ToricSurface::p2();
  // The three coordinate lines are linearly equivalent.
  CHECK(chi_line_bundle(S, {{1, 0, 0}}) == chi_line_bundle(S, {{0, 1, 0}}));
  CHECK(chi_line_bundle(S, {{1, 0, 0}}) == chi_line_bundle(S, {{0, 0, 1}}));
  CHECK(chi_line_bundle(S, {{2, 1, 0}}) == chi_line_bundle(S, {{0, 0, 3}}));
}

TEST_CASE("serre duality") {
  for (const ToricSurface& S :
       {ToricSurface::p2(), ToricSurface::p1xp1(), ToricSurface::hirzebruch(1)}) {
    std::vector<ToricLineBundle> samples;
    samples.push_back(trivial_bundle(S));
    for (int i = 0; i < S.num_rays(); ++i) {
      ToricLineBundle b = trivial_bundle(S);
      b.ray_coeffs[static_cast<std::size_t>(i)] = 2;
      samples.push_back(b);
      b.ray_coeffs[static_cast<std::size_t>(i)] = -1;
      samples.push_back(b);
    }
    const ToricLineBundle K = canonical_bundle(S);
    for (const auto& L : samples)
      CHECK(chi_line_bundle(S, L) == chi_line_bundle(S, tensor(K, dual(L))));
  }
}

TEST_CASE("chi pairing on the plane") {
  const ToricSurface S = ToricSurface::p2();
  const UVPoly p = chi_lambda_pair(S, {{1, 0, 0}}, {{2, 0, 0}});
  UVPoly expected(1);
  expected -= UVPoly::monomial(0, 1, Rational(6));
  expected += UVPoly::monomial(1, 1, Rational(3));
  CHECK(p == expected);
}

TEST_CASE("blowup inserts the exceptional ray") {
  const ToricSurface S = ToricSurface::p2();
  const ToricSurface B = blowup_at_chart(S, 0);
  CHECK(B.num_rays() == 4);
  CHECK(B.rays()[1] == Vec2{1, 1});
  for (int i = 0; i < 3; ++i) CHECK(fan_isomorphic(blowup_at_chart(S, i), ToricSurface::hirzebruch(1)));
  CHECK_THROWS_AS(blowup_at_chart(S, 3), UsageError);
}

TEST_CASE("fan isomorphism distinguishes surfaces") {
  CHECK(fan_isomorphic(ToricSurface::p1xp1(), ToricSurface::hirzebruch(0)));
  CHECK_FALSE(fan_isomorphic(ToricSurface::p2(), ToricSurface::p1xp1()));
  CHECK_FALSE(fan_isomorphic(ToricSurface::hirzebruch(1), ToricSurface::hirzebruch(2)));
  CHECK_FALSE(fan_isomorphic(ToricSurface::hirzebruch(1), ToricSurface::p1xp1()));
  // Shear the plane's fan: same surface, different coordinates, shifted labels.
  const ToricSurface sheared({{1, 1}, {-2, -1}, {1, 0}});
  CHECK(fan_isomorphic(ToricSurface::p2(), sheared));
  // Orientation-reversing relabelings count too.
  CHECK(fan_isomorphic(ToricSurface::p2(), ToricSurface({{-1, -1}, {0, 1}, {1, 0}})));
}

TEST_CASE("pullback with zero twist preserves chi") {
  const ToricSurface S = ToricSurface::p2();
  for (int chart = 0; chart < 3; ++chart) {
    const ToricSurface B = blowup_at_chart(S, chart);
    for (int a = -2; a <= 3; ++a) {
      const ToricLineBundle L{{a, 0, 0}};
      CHECK(chi_line_bundle(B, pullback_and_twist(S, chart, L, 0)) == chi_line_bundle(S, L));
    }
  }
}

TEST_CASE("twisting by the exceptional divisor") {
  const ToricSurface S = ToricSurface::p2();
  const ToricSurface B = blowup_at_chart(S, 0);
  // O(-E): trivial pullback twisted once.
  const ToricLineBundle minus_e = pullback_and_twist(S, 0, trivial_bundle(S), 1);
  CHECK(minus_e.ray_coeffs == std::vector<int>{0, -1, 0, 0});
  CHECK(chi_line_bundle(B, minus_e) == 0);
  // The same bundle written on the standard Hirzebruch fan.
  CHECK(chi_line_bundle(ToricSurface::hirzebruch(1), {{0, -1, 0, 0}}) == 0);
  // A line through the blown-up point loses one section's worth.
  CHECK(chi_line_bundle(B, pullback_and_twist(S, 0, {{1, 0, 0}}, 1)) == 2);
  // Twisting the other way adds the exceptional curve's sections.
  CHECK(chi_line_bundle(B, pullback_and_twist(S, 0, trivial_bundle(S), -1)) == 1);
}

TEST_CASE("degeneration scenario shape") {
  const ToricSurface S = ToricSurface::p2();
  const DegenerationScenario scn = make_blowup_scenario(S, 1, {{1, 0, 0}}, {{2, 0, 0}}, 1, 1);
  CHECK(scn.X.S == S);
  CHECK(fan_isomorphic(scn.Y1.S, ToricSurface::hirzebruch(1)));
  CHECK(scn.Y2.S == ToricSurface::p2());
  CHECK(scn.PD.S == ToricSurface::hirzebruch(1));
  CHECK(scn.Y2.K.ray_coeffs == std::vector<int>{1, 0, 0});
  CHECK(scn.PD.L.ray_coeffs == std::vector<int>{1, 0, 0, 0});
  CHECK(!scn.provenance.empty());
}

TEST_CASE("products of projective spaces") {
  const ProjProduct p2{{2}};
  auto o2 = [](int m) { return ProjBundle{{m}}; };
  CHECK(chi_line_bundle(p2, o2(0)) == 1);
  CHECK(chi_line_bundle(p2, o2(1)) == 3);
  CHECK(chi_line_bundle(p2, o2(-1)) == 0);
  CHECK(chi_line_bundle(p2, o2(-3)) == 1);
  const ProjProduct p3{{3}};
  CHECK(chi_line_bundle(p3, ProjBundle{{-4}}) == -1);
  CHECK(chi_line_bundle(p3, ProjBundle{{2}}) == 10);
  const ProjProduct p11{{1, 1}};
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      CHECK(chi_line_bundle(p11, ProjBundle{{a, b}}) == (a + 1) * (b + 1));
}

TEST_CASE("projective products agree with their toric models") {
  const ProjProduct p11{{1, 1}};
  const ToricSurface q = ToricSurface::p1xp1();
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      CHECK(chi_line_bundle(p11, ProjBundle{{a, b}}) ==
            chi_line_bundle(q, ToricLineBundle{{a, b, 0, 0}}));
    }
  CHECK(chi_lambda_pair(p11, ProjBundle{{1, 0}}, ProjBundle{{0, 1}}) ==
        chi_lambda_pair(q, ToricLineBundle{{1, 0, 0, 0}}, ToricLineBundle{{0, 1, 0, 0}}));
  CHECK(chi_lambda_pair(ProjProduct{{2}}, ProjBundle{{1}}, ProjBundle{{2}}) ==
        chi_lambda_pair(ToricSurface::p2(), ToricLineBundle{{1, 0, 0}}, ToricLineBundle{{2, 0, 0}}));
}

TEST_CASE("cobordism generator enumeration") {
  const std::vector<std::size_t> expected{3, 10, 23, 51};
  for (int n = 1; n <= 4; ++n) {
    const auto gens = cobordism_generators(n);
    CHECK(gens.size() == expected[static_cast<std::size_t>(n - 1)]);
    std::set<std::pair<std::vector<int>, std::pair<std::vector<int>, std::vector<int>>>> seen;
    for (const auto& g : gens) {
      int total = 0;
      for (int l : g.space.lambda) {
        CHECK(l >= 1);
        total += l;
      }
      CHECK(total == n);
      CHECK(g.K.m.size() == g.space.lambda.size());
      CHECK(g.L.m.size() == g.space.lambda.size());
      // Twists are 0/1 vectors with at most one 1 each, never on the same
      // factor unless both are trivial.
      int ki = -1, li = -1, ks = 0, ls = 0;
      for (std::size_t i = 0; i < g.K.m.size(); ++i) {
        CHECK(g.K.m[i] >= 0);
        CHECK(g.K.m[i] <= 1);
        CHECK(g.L.m[i] >= 0);
        CHECK(g.L.m[i] <= 1);
        ks += g.K.m[i];
        ls += g.L.m[i];
        if (g.K.m[i] == 1) ki = static_cast<int>(i);
        if (g.L.m[i] == 1) li = static_cast<int>(i);
      }
      CHECK(ks <= 1);
      CHECK(ls <= 1);
      if (ki >= 0 && li >= 0) CHECK(ki != li);
      seen.insert({g.space.lambda, {g.K.m, g.L.m}});
    }
    CHECK(seen.size() == gens.size());
  }
  CHECK_THROWS_AS(cobordism_generators(0), UsageError);
}

TEST_CASE("bundle plumbing errors") {
  const ToricSurface S = ToricSurface::p2();
  CHECK_THROWS_AS(chi_line_bundle(S, ToricLineBundle{{1, 0}}), UsageError);
  CHECK_THROWS_AS(tensor(ToricLineBundle{{1, 0}}, ToricLineBundle{{1, 0, 0}}), UsageError);
  CHECK_THROWS_AS(pullback_and_twist(S, 5, trivial_bundle(S), 0), UsageError);
  CHECK_THROWS_AS(chi_line_bundle(ProjProduct{{0}}, ProjBundle{{0}}), UsageError);
  CHECK_THROWS_AS(chi_line_bundle(ProjProduct{{1, 1}}, ProjBundle{{0}}), UsageError);
}

TEST_CASE("chart admissible specializations avoid the walls") {
  for (const ToricSurface& S :
       {ToricSurface::p2(), ToricSurface::p1xp1(), ToricSurface::hirzebruch(4)}) {
    const Specialization s = chart_admissible_spec(S);
    for (const Chart& ch : charts(S)) {
      CHECK(s(ch.w1) != 0);
      CHECK(s(ch.w2) != 0);
    }
  }
}
