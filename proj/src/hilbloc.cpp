#include "tautchi/hilbloc.hpp"

#include "tautchi/errors.hpp"
#include "tautchi/partitions.hpp"
#include "tautchi/ratfun.hpp"

#include <numeric>

namespace tautchi::hilb {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::leg(int r, int c) const {
  int l = 0;
  for (std::size_t rr = static_cast<std::size_t>(r) + 1; rr < parts.size(); ++rr)
    if (parts[rr] > c) ++l;
  return l;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(n)) out.push_back(Partition{std::move(p)});
  return out;
}

int FixedPoint::size() const {
  int s = 0;
  for (const Partition& p : mu) s += p.size();
  return s;
}

std::vector<FixedPoint> enumerate_fixed_points(const toric::ToricSurface& S, int n) {
  if (n < 0) throw UsageError("enumerate_fixed_points: n must be >= 0");
  const int k = S.num_rays(); // one chart per cone
  std::vector<std::vector<Partition>> table;
  table.reserve(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) table.push_back(partitions(m));
  std::vector<FixedPoint> out;
  std::vector<Partition> cur;
  // Chart sizes in descending-first composition order, partitions in the
  // order partitions() yields them.
  auto rec = [&](auto&& self, int chart, int left) -> void {
    if (chart == k - 1) {
      for (const Partition& p : table[static_cast<std::size_t>(left)]) {
        cur.push_back(p);
        out.push_back(FixedPoint{cur});
        cur.pop_back();
      }
      return;
    }
    for (int m = left; m >= 0; --m)
      for (const Partition& p : table[static_cast<std::size_t>(m)]) {
        cur.push_back(p);
        self(self, chart + 1, left - m);
        cur.pop_back();
      }
  };
  rec(rec, 0, n);
  return out;
}

std::vector<toric::Vec2> oz_character(const Partition& mu, const toric::Chart& chart) {
  std::vector<toric::Vec2> w;
  w.reserve(static_cast<std::size_t>(mu.size()));
  for (int r = 0; r < mu.rows(); ++r)
    for (int c = 0; c < mu.parts[static_cast<std::size_t>(r)]; ++c)
      w.push_back(toric::sub(toric::scale(-c, chart.w1), toric::scale(r, chart.w2)));
  return w;
}

std::vector<toric::Vec2> tangent_character(const Partition& mu, const toric::Chart& chart) {
  std::vector<toric::Vec2> w;
  w.reserve(2 * static_cast<std::size_t>(mu.size()));
  for (int r = 0; r < mu.rows(); ++r)
    for (int c = 0; c < mu.parts[static_cast<std::size_t>(r)]; ++c) {
      const int a = mu.arm(r, c), l = mu.leg(r, c);
      w.push_back(toric::add(toric::scale(a + 1, chart.w1), toric::scale(-l, chart.w2)));
      w.push_back(toric::add(toric::scale(-a, chart.w1), toric::scale(l + 1, chart.w2)));
    }
  return w;
}

std::vector<toric::Vec2> taut_character(const toric::ToricSurface& S,
                                        const toric::ToricLineBundle& E, const FixedPoint& fp,
                                        toric::Vec2 twist) {
  const auto chs = toric::charts(S);
  if (fp.mu.size() != chs.size())
    throw UsageError("taut_character: one partition per chart required");
  std::vector<toric::Vec2> w;
  for (std::size_t i = 0; i < chs.size(); ++i) {
    const toric::Vec2 m = toric::add(toric::fiber_character(S, E, chs[i]), twist);
    for (const toric::Vec2& o : oz_character(fp.mu[i], chs[i])) w.push_back(toric::add(m, o));
  }
  return w;
}

bool is_admissible(const toric::ToricSurface& S, int order, const toric::Specialization& s) {
  const int bound = std::max(0, order - 1); // arm + leg <= n - 1 <= order - 1
  for (const toric::Chart& ch : toric::charts(S))
    for (int a = 0; a <= bound; ++a)
      for (int l = 0; a + l <= bound; ++l) {
        if (s(toric::add(toric::scale(a + 1, ch.w1), toric::scale(-l, ch.w2))) == 0) return false;
        if (s(toric::add(toric::scale(-a, ch.w1), toric::scale(l + 1, ch.w2))) == 0) return false;
      }
  return true;
}

toric::Specialization find_specialization(const toric::ToricSurface& S, int order) {
  int m = 1;
  for (const toric::Chart& ch : toric::charts(S))
    for (const toric::Vec2& w : {ch.w1, ch.w2})
      m = std::max({m, std::abs(w[0]), std::abs(w[1])});
  // (1, order*m + 1) is provably admissible, so the scan terminates.
  const int stop = std::max(1, order) * m + 1;
  for (int b = 1; b <= stop; ++b) {
    toric::Specialization s{1, b};
    if (is_admissible(S, order, s)) return s;
  }
  throw InadmissibleSpecializationError("find_specialization: no admissible (1, b) found");
}

QSeries hilb_chi_series(const toric::ToricSurface& S, const toric::ToricLineBundle& E,
                        const toric::ToricLineBundle& F, int order,
                        std::optional<toric::Specialization> spec, toric::Vec2 twist_e,
                        toric::Vec2 twist_f) {
  if (order < 0) throw UsageError("hilb_chi_series: order must be >= 0");
  const auto chs = toric::charts(S);
  const toric::Specialization s = spec ? *spec : find_specialization(S, order);

  // Fiber characters of the chosen equivariant lifts, one per chart.
  std::vector<toric::Vec2> mE, mF;
  for (const toric::Chart& ch : chs) {
    mE.push_back(toric::add(toric::fiber_character(S, E, ch), twist_e));
    mF.push_back(toric::add(toric::fiber_character(S, F, ch), twist_f));
  }

  QSeries result = QSeries::one(order);
  for (int n = 1; n <= order; ++n) {
    std::vector<RatFunZ> parts;
    for (const FixedPoint& fp : enumerate_fixed_points(S, n)) {
      LaurentZ num(UVPoly(1));
      FactoredDen den;
      for (std::size_t i = 0; i < chs.size(); ++i) {
        const Partition& mu = fp.mu[i];
        for (int r = 0; r < mu.rows(); ++r)
          for (int c = 0; c < mu.parts[static_cast<std::size_t>(r)]; ++c) {
            const toric::Vec2 o = toric::sub(toric::scale(-c, chs[i].w1), toric::scale(r, chs[i].w2));
            // Numerator: (1 - u z^{-<s,e>}) (1 - v z^{+<s,f>}).
            {
              LaurentZ factor(UVPoly(1));
              factor += LaurentZ::monomial(static_cast<int>(-s(toric::add(mE[i], o))),
                                           -UVPoly::monomial(1, 0));
              num *= factor;
            }
            {
              LaurentZ factor(UVPoly(1));
              factor += LaurentZ::monomial(static_cast<int>(s(toric::add(mF[i], o))),
                                           -UVPoly::monomial(0, 1));
              num *= factor;
            }
            // Denominator: (1 - z^{-<s,w>}) per tangent weight.
            const int a = mu.arm(r, c), l = mu.leg(r, c);
            const long long t1 = s(toric::add(toric::scale(a + 1, chs[i].w1), toric::scale(-l, chs[i].w2)));
            const long long t2 = s(toric::add(toric::scale(-a, chs[i].w1), toric::scale(l + 1, chs[i].w2)));
            if (t1 == 0 || t2 == 0)
              throw InadmissibleSpecializationError(
                  "hilb_chi_series: specialization kills a tangent weight");
            den.mul_one_minus_z(static_cast<int>(-t1));
            den.mul_one_minus_z(static_cast<int>(-t2));
          }
      }
      parts.push_back(RatFunZ::from_factored(std::move(num), std::move(den)));
    }
    result.set_coeff(n, ratfun_sum(std::move(parts)).eval_at_one());
  }
  return result;
}

} // namespace tautchi::hilb
