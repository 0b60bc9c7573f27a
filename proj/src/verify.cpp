#include "tautchi/verify.hpp"

#include "tautchi/json_io.hpp"

#include <chrono>

namespace tautchi::verify {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

} // namespace

QSeries predicted_series_from_pair(const UVPoly& chi_pair, int order) {
  QSeries e(order);
  for (int r = 1; r <= order; ++r)
    e.set_coeff(r, chi_pair.substitute_powers(r) * Rational(1, r));
  return series_exp(e);
}

QSeries predicted_series(const toric::ToricSurface& X, const toric::ToricLineBundle& K,
                         const toric::ToricLineBundle& L, int order) {
  return predicted_series_from_pair(toric::chi_lambda_pair(X, K, L), order);
}

QSeries predicted_series(const toric::ProjProduct& X, const toric::ProjBundle& K,
                         const toric::ProjBundle& L, int order) {
  return predicted_series_from_pair(toric::chi_lambda_pair(X, K, L), order);
}

QSeries predicted_closed_form_from_chis(long long chi_o, long long chi_kdual, long long chi_l,
                                        long long chi_kdual_l, int order) {
  QSeries r = binom_power(BinomBase::OneMinusQ, -chi_o, order);
  r *= binom_power(BinomBase::OneMinusUQ, chi_kdual, order);
  r *= binom_power(BinomBase::OneMinusVQ, chi_l, order);
  r *= binom_power(BinomBase::OneMinusUVQ, -chi_kdual_l, order);
  return r;
}

QSeries predicted_closed_form(const toric::ToricSurface& X, const toric::ToricLineBundle& K,
                              const toric::ToricLineBundle& L, int order) {
  return predicted_closed_form_from_chis(
      toric::chi_line_bundle(X, toric::trivial_bundle(X)),
      toric::chi_line_bundle(X, toric::dual(K)), toric::chi_line_bundle(X, L),
      toric::chi_line_bundle(X, toric::tensor(toric::dual(K), L)), order);
}

QSeries predicted_closed_form(const toric::ProjProduct& X, const toric::ProjBundle& K,
                              const toric::ProjBundle& L, int order) {
  return predicted_closed_form_from_chis(
      toric::chi_line_bundle(X, toric::trivial_bundle(X)),
      toric::chi_line_bundle(X, toric::dual(K)), toric::chi_line_bundle(X, L),
      toric::chi_line_bundle(X, toric::tensor(toric::dual(K), L)), order);
}

VerdictReport verify_conjecture_surface(const toric::ToricSurface& S,
                                        const toric::ToricLineBundle& K,
                                        const toric::ToricLineBundle& L, int order,
                                        std::optional<toric::Specialization> spec) {
  const auto t0 = Clock::now();
  QSeries lhs = hilb::hilb_chi_series(S, K, L, order, spec);
  QSeries rhs = predicted_series(S, K, L, order);
  QSeries res = lhs - rhs;
  const bool pass = res.is_zero();
  ordered_json subject;
  subject["kind"] = "conjecture-surface";
  subject["surface"] = io::to_json(S);
  subject["K"] = io::to_json(K);
  subject["L"] = io::to_json(L);
  return VerdictReport{std::move(subject), order, std::move(lhs), std::move(rhs),
                       std::move(res),     pass,  ms_since(t0)};
}

VerdictReport verify_inclusion_exclusion(const toric::DegenerationScenario& scn, int order,
                                         std::optional<toric::Specialization> spec) {
  const auto t0 = Clock::now();
  const QSeries cX = hilb::hilb_chi_series(scn.X.S, scn.X.K, scn.X.L, order, spec);
  const QSeries cY1 = hilb::hilb_chi_series(scn.Y1.S, scn.Y1.K, scn.Y1.L, order, spec);
  const QSeries cY2 = hilb::hilb_chi_series(scn.Y2.S, scn.Y2.K, scn.Y2.L, order, spec);
  const QSeries cPD = hilb::hilb_chi_series(scn.PD.S, scn.PD.K, scn.PD.L, order, spec);
  QSeries lhs = series_log(cX) + series_log(cPD);
  QSeries rhs = series_log(cY1) + series_log(cY2);
  QSeries res = residual(cX, cY1, cY2, cPD);
  const bool pass = res.is_zero();
  ordered_json subject;
  subject["kind"] = "inclusion-exclusion";
  subject["scenario"] = io::to_json(scn);
  return VerdictReport{std::move(subject), order, std::move(lhs), std::move(rhs),
                       std::move(res),     pass,  ms_since(t0)};
}

UVPoly n1_defect(const toric::DegenerationScenario& scn) {
  return toric::chi_lambda_pair(scn.X.S, scn.X.K, scn.X.L) +
         toric::chi_lambda_pair(scn.PD.S, scn.PD.K, scn.PD.L) -
         toric::chi_lambda_pair(scn.Y1.S, scn.Y1.K, scn.Y1.L) -
         toric::chi_lambda_pair(scn.Y2.S, scn.Y2.K, scn.Y2.L);
}

std::vector<GeneratorEntry> generator_report(int n, int order) {
  std::vector<GeneratorEntry> out;
  for (const toric::GeneratorTriple& t : toric::cobordism_generators(n))
    out.push_back(GeneratorEntry{t, predicted_series(t.space, t.K, t.L, order)});
  return out;
}

} // namespace tautchi::verify
