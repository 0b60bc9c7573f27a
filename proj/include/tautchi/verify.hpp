#pragma once

// Cross-verification: predicted generating series (two independent routes)
// against the localization series, and the degeneration identity check.

#include "tautchi/hilbloc.hpp"
#include "tautchi/inclexcl.hpp"
#include "tautchi/qseries.hpp"
#include "tautchi/toric.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tautchi::verify {

using ordered_json = nlohmann::ordered_json;

// exp( sum_r chi_pair(u^r, v^r) Q^r / r ).
QSeries predicted_series_from_pair(const UVPoly& chi_pair, int order);
QSeries predicted_series(const toric::ToricSurface& X, const toric::ToricLineBundle& K,
                         const toric::ToricLineBundle& L, int order);
QSeries predicted_series(const toric::ProjProduct& X, const toric::ProjBundle& K,
                         const toric::ProjBundle& L, int order);

// (1-Q)^{-chi(O)} (1-uQ)^{chi(K^dual)} (1-vQ)^{chi(L)} (1-uvQ)^{-chi(K^dual ox L)}.
QSeries predicted_closed_form_from_chis(long long chi_o, long long chi_kdual, long long chi_l,
                                        long long chi_kdual_l, int order);
QSeries predicted_closed_form(const toric::ToricSurface& X, const toric::ToricLineBundle& K,
                              const toric::ToricLineBundle& L, int order);
QSeries predicted_closed_form(const toric::ProjProduct& X, const toric::ProjBundle& K,
                              const toric::ProjBundle& L, int order);

struct VerdictReport {
  ordered_json subject;
  int order = 0;
  QSeries lhs;
  QSeries rhs;
  QSeries residual;
  bool pass = false;
  std::int64_t timing_ms = 0;
};

// Localization series vs predicted series; residual = lhs - rhs.
VerdictReport verify_conjecture_surface(const toric::ToricSurface& S,
                                        const toric::ToricLineBundle& K,
                                        const toric::ToricLineBundle& L, int order,
                                        std::optional<toric::Specialization> spec = std::nullopt);

// The four series of a degeneration scenario; residual in log form,
// identically zero iff the inclusion-exclusion identity holds to this order.
VerdictReport verify_inclusion_exclusion(const toric::DegenerationScenario& scn, int order,
                                         std::optional<toric::Specialization> spec = std::nullopt);

// chi_pair(X) + chi_pair(PD) - chi_pair(Y1) - chi_pair(Y2); the Q^1
// coefficient of the inclusion-exclusion residual.
UVPoly n1_defect(const toric::DegenerationScenario& scn);

struct GeneratorEntry {
  toric::GeneratorTriple triple;
  QSeries predicted;
};

// Predicted series for every cobordism generator triple at level n.
std::vector<GeneratorEntry> generator_report(int n, int order);

} // namespace tautchi::verify
