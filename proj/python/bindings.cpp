// Thin JSON-string bindings over the C++ core: every structured argument and
// result crosses the boundary as serialized JSON, so the Python layer stays a
// small json.loads/json.dumps shim.

#include "tautchi/hilbloc.hpp"
#include "tautchi/inclexcl.hpp"
#include "tautchi/json_io.hpp"
#include "tautchi/toric.hpp"
#include "tautchi/verify.hpp"

#include <pybind11/pybind11.h>

#include <optional>
#include <string>

namespace py = pybind11;
using tautchi::io::ordered_json;

namespace {

ordered_json parse(const std::string& s, const char* who) {
  ordered_json j = ordered_json::parse(s, nullptr, false);
  if (j.is_discarded()) throw tautchi::UsageError(std::string(who) + ": invalid JSON");
  return j;
}

std::optional<tautchi::toric::Specialization> spec_from(int a, int b) {
  if (a == 0 && b == 0) return std::nullopt;
  return tautchi::toric::Specialization{a, b};
}

std::string combine(const std::string& a, const std::string& b, const std::string& d, int order) {
  using namespace tautchi;
  CoeffSeq ca = io::coeffseq_from_json(parse(a, "a"));
  CoeffSeq cb = io::coeffseq_from_json(parse(b, "b"));
  CoeffSeq cd = io::coeffseq_from_json(parse(d, "d"));
  auto pad = [order](CoeffSeq& c) {
    if (static_cast<int>(c.size()) < order) c.resize(static_cast<std::size_t>(order));
  };
  pad(ca);
  pad(cb);
  pad(cd);
  const CoeffSeq via_log = combine_log(ca, cb, cd, order);
  const CoeffSeq direct = combine_direct(ca, cb, cd, order);
  CoeffSeq strata;
  for (int n = 1; n <= order; ++n) strata.push_back(combine_strata(ca, cb, cd, n));
  ordered_json j;
  j["log"] = io::coeffseq_to_json(via_log);
  j["direct"] = io::coeffseq_to_json(direct);
  j["strata"] = io::coeffseq_to_json(strata);
  j["agree"] = via_log == direct && direct == strata;
  return j.dump();
}

std::string predicted_series(const std::string& surface, const std::string& K,
                             const std::string& L, int order) {
  using namespace tautchi;
  const toric::ToricSurface S = io::surface_from_json(parse(surface, "surface"));
  const QSeries s = verify::predicted_series(S, io::bundle_from_json(parse(K, "K")),
                                             io::bundle_from_json(parse(L, "L")), order);
  return io::to_json(s).dump();
}

std::string predicted_closed_form(const std::string& surface, const std::string& K,
                                  const std::string& L, int order) {
  using namespace tautchi;
  const toric::ToricSurface S = io::surface_from_json(parse(surface, "surface"));
  const QSeries s = verify::predicted_closed_form(S, io::bundle_from_json(parse(K, "K")),
                                                  io::bundle_from_json(parse(L, "L")), order);
  return io::to_json(s).dump();
}

std::string hilb_series(const std::string& surface, const std::string& K, const std::string& L,
                        int order, int spec_a, int spec_b) {
  using namespace tautchi;
  const toric::ToricSurface S = io::surface_from_json(parse(surface, "surface"));
  const QSeries s =
      hilb::hilb_chi_series(S, io::bundle_from_json(parse(K, "K")),
                            io::bundle_from_json(parse(L, "L")), order, spec_from(spec_a, spec_b));
  return io::to_json(s).dump();
}

std::string check_conjecture(const std::string& surface, const std::string& K,
                             const std::string& L, int order) {
  using namespace tautchi;
  const toric::ToricSurface S = io::surface_from_json(parse(surface, "surface"));
  const verify::VerdictReport rep = verify::verify_conjecture_surface(
      S, io::bundle_from_json(parse(K, "K")), io::bundle_from_json(parse(L, "L")), order);
  return io::to_json(rep).dump();
}

std::string check_degeneration(const std::string& surface, int chart, const std::string& K0,
                               const std::string& L0, int cK, int cL, int order) {
  using namespace tautchi;
  const toric::ToricSurface S = io::surface_from_json(parse(surface, "surface"));
  const toric::DegenerationScenario scn = toric::make_blowup_scenario(
      S, chart, io::bundle_from_json(parse(K0, "K0")), io::bundle_from_json(parse(L0, "L0")), cK, cL);
  const verify::VerdictReport rep = verify::verify_inclusion_exclusion(scn, order);
  ordered_json j;
  j["scenario"] = io::to_json(scn);
  j["report"] = io::to_json(rep);
  return j.dump();
}

std::string generators(int n, int order) {
  using namespace tautchi;
  ordered_json j = ordered_json::array();
  for (const auto& e : verify::generator_report(n, order < 0 ? n : order)) {
    ordered_json row = io::to_json(e.triple);
    row["predicted"] = io::to_json(e.predicted);
    j.push_back(std::move(row));
  }
  return j.dump();
}

long long chi(const std::string& surface, const std::string& bundle) {
  using namespace tautchi;
  const toric::ToricSurface S = io::surface_from_json(parse(surface, "surface"));
  return toric::chi_line_bundle(S, io::bundle_from_json(parse(bundle, "bundle")));
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Euler characteristic series of tautological sheaves on Hilbert schemes";
  m.def("combine", &combine, py::arg("a"), py::arg("b"), py::arg("d"), py::arg("order"),
        "Run the three inclusion-exclusion routes; JSON in, JSON out.");
  m.def("predicted_series", &predicted_series, py::arg("surface"), py::arg("K"), py::arg("L"),
        py::arg("order"));
  m.def("predicted_closed_form", &predicted_closed_form, py::arg("surface"), py::arg("K"),
        py::arg("L"), py::arg("order"));
  m.def("hilb_series", &hilb_series, py::arg("surface"), py::arg("K"), py::arg("L"),
        py::arg("order"), py::arg("spec_a") = 0, py::arg("spec_b") = 0);
  m.def("check_conjecture", &check_conjecture, py::arg("surface"), py::arg("K"), py::arg("L"),
        py::arg("order"));
  m.def("check_degeneration", &check_degeneration, py::arg("surface"), py::arg("chart"),
        py::arg("K0"), py::arg("L0"), py::arg("cK"), py::arg("cL"), py::arg("order"));
  m.def("generators", &generators, py::arg("n"), py::arg("order") = -1);
  m.def("chi", &chi, py::arg("surface"), py::arg("bundle"),
        "Exact Euler characteristic of a line bundle on a toric surface.");

  py::register_exception<tautchi::UsageError>(m, "UsageError");
  py::register_exception<tautchi::InvalidFanError>(m, "InvalidFanError");
  py::register_exception<tautchi::InadmissibleSpecializationError>(m,
                                                                   "InadmissibleSpecializationError");
}
