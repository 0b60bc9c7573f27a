#include "tautchi/cli.hpp"

#include "tautchi/errors.hpp"
#include "tautchi/hilbloc.hpp"
#include "tautchi/inclexcl.hpp"
#include "tautchi/json_io.hpp"
#include "tautchi/toric.hpp"
#include "tautchi/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace tautchi::cli {

namespace {

using io::ordered_json;

// ---- input parsing ---------------------------------------------------------

std::vector<int> parse_int_list(const std::string& s, const char* who) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(who) + ": expected a comma-separated integer list, got '" + s + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(who) + ": empty list");
  return out;
}

toric::ToricSurface parse_surface(const std::string& s) {
  if (s == "p2") return toric::ToricSurface::p2();
  if (s == "p1xp1") return toric::ToricSurface::p1xp1();
  if (s.size() >= 2 && s[0] == 'f') {
    try {
      std::size_t pos = 0;
      int e = std::stoi(s.substr(1), &pos);
      if (pos == s.size() - 1) return toric::ToricSurface::hirzebruch(e);
    } catch (const std::exception&) {
    }
  }
  if (!s.empty() && s[0] == '{') {
    ordered_json j = ordered_json::parse(s, nullptr, false);
    if (j.is_discarded()) throw UsageError("surface: invalid JSON '" + s + "'");
    return io::surface_from_json(j);
  }
  throw UsageError("surface: expected p2, p1xp1, f<e>, or a JSON object, got '" + s + "'");
}

// Ray coefficients, with the usual shorthands: one integer on p2 (O(a)),
// two on p1xp1 (O(a,b)); otherwise one coefficient per ray.
toric::ToricLineBundle parse_bundle(const std::string& s, const toric::ToricSurface& S,
                                    const char* who) {
  std::vector<int> v = parse_int_list(s, who);
  const int n = S.num_rays();
  if (static_cast<int>(v.size()) == n) return {std::move(v)};
  if (S.kind() == toric::ToricSurface::Kind::P2 && v.size() == 1) return {{v[0], 0, 0}};
  if (S.kind() == toric::ToricSurface::Kind::P1xP1 && v.size() == 2)
    return {{v[0], v[1], 0, 0}};
  throw UsageError(std::string(who) + ": expected " + std::to_string(n) +
                   " ray coefficients (or the builtin shorthand)");
}

CoeffSeq parse_coeffseq(const std::string& s, const char* who) {
  ordered_json j = ordered_json::parse(s, nullptr, false);
  if (j.is_discarded()) throw UsageError(std::string(who) + ": invalid JSON '" + s + "'");
  if (j.is_number_integer() || j.is_string()) {
    CoeffSeq c;
    c.push_back(UVPoly(io::rational_from_json(j)));
    return c;
  }
  return io::coeffseq_from_json(j);
}

toric::Specialization parse_spec(const std::string& s) {
  std::vector<int> v = parse_int_list(s, "--spec");
  if (v.size() != 2) throw UsageError("--spec: expected 'a,b'");
  return {v[0], v[1]};
}

toric::Vec2 parse_vec2(const std::string& s, const char* who) {
  std::vector<int> v = parse_int_list(s, who);
  if (v.size() != 2) throw UsageError(std::string(who) + ": expected 'x,y'");
  return {v[0], v[1]};
}

// ---- output ----------------------------------------------------------------

enum class Mode { Text, Json };

Mode output_mode(const std::string& flag) {
  std::string v = flag;
  if (v.empty()) {
    const char* env = std::getenv("TAUTCHI_OUTPUT");
    v = env ? env : "text";
  }
  if (v == "json") return Mode::Json;
  if (v == "text") return Mode::Text;
  throw UsageError("--output: expected 'json' or 'text', got '" + v + "'");
}

void emit(std::ostream& out, Mode mode, const ordered_json& j,
          const std::function<void(std::ostream&)>& text) {
  if (mode == Mode::Json)
    out << j.dump(2) << "\n";
  else
    text(out);
}

// Short inputs are zero-extended.
void pad_seq(CoeffSeq& c, int order) {
  if (static_cast<int>(c.size()) < order) c.resize(static_cast<std::size_t>(order));
}

// ---- subcommand state --------------------------------------------------------

struct CombineOpts {
  std::string a, b, d;
  int order = 0;
};

struct SurfaceOpts {
  std::string surface, K, L, spec, twist_k, twist_l;
  int order = 0;
  bool timings = false;
};

struct DegenOpts {
  std::string surface, K0, L0, spec;
  int chart = 0, cK = 0, cL = 0, order = 0;
  bool timings = false;
};

struct GenOpts {
  int n = 1, order = -1;
};

int run_combine(const CombineOpts& o, Mode mode, std::ostream& out) {
  CoeffSeq a = parse_coeffseq(o.a, "--a");
  CoeffSeq b = parse_coeffseq(o.b, "--b");
  CoeffSeq d = parse_coeffseq(o.d, "--d");
  if (o.order < 1) throw UsageError("combine: --order must be >= 1");
  pad_seq(a, o.order);
  pad_seq(b, o.order);
  pad_seq(d, o.order);
  const CoeffSeq via_log = combine_log(a, b, d, o.order);
  const CoeffSeq direct = combine_direct(a, b, d, o.order);
  CoeffSeq strata;
  for (int n = 1; n <= o.order; ++n) strata.push_back(combine_strata(a, b, d, n));
  const bool agree = via_log == direct && direct == strata;

  ordered_json j;
  j["order"] = o.order;
  j["a"] = io::coeffseq_to_json(a);
  j["b"] = io::coeffseq_to_json(b);
  j["d"] = io::coeffseq_to_json(d);
  ordered_json routes;
  routes["log"] = io::coeffseq_to_json(via_log);
  routes["direct"] = io::coeffseq_to_json(direct);
  routes["strata"] = io::coeffseq_to_json(strata);
  j["routes"] = std::move(routes);
  j["agree"] = agree;
  emit(out, mode, j, [&](std::ostream& os) {
    for (int n = 1; n <= o.order; ++n) {
      os << "c_" << n << ": log=" << via_log[static_cast<std::size_t>(n - 1)].str()
         << "  direct=" << direct[static_cast<std::size_t>(n - 1)].str()
         << "  strata=" << strata[static_cast<std::size_t>(n - 1)].str() << "\n";
    }
    os << "routes agree: " << (agree ? "yes" : "no") << "\n";
  });
  return agree ? 0 : 1;
}

int run_predict(const SurfaceOpts& o, Mode mode, std::ostream& out) {
  const toric::ToricSurface S = parse_surface(o.surface);
  const toric::ToricLineBundle K = parse_bundle(o.K, S, "--K");
  const toric::ToricLineBundle L = parse_bundle(o.L, S, "--L");
  const QSeries series = verify::predicted_series(S, K, L, o.order);
  const QSeries closed = verify::predicted_closed_form(S, K, L, o.order);
  const bool match = series == closed;

  ordered_json j;
  j["surface"] = io::to_json(S);
  j["K"] = io::to_json(K);
  j["L"] = io::to_json(L);
  j["order"] = o.order;
  j["chi"] = ordered_json{{"O", toric::chi_line_bundle(S, toric::trivial_bundle(S))},
                          {"K_dual", toric::chi_line_bundle(S, toric::dual(K))},
                          {"L", toric::chi_line_bundle(S, L)},
                          {"K_dual_L", toric::chi_line_bundle(S, toric::tensor(toric::dual(K), L))}};
  j["series"] = io::to_json(series);
  j["closed_form"] = io::to_json(closed);
  j["match"] = match;
  emit(out, mode, j, [&](std::ostream& os) {
    os << "predicted series: " << series.str() << "\n";
    os << "closed form:      " << closed.str() << "\n";
    os << "match: " << (match ? "yes" : "no") << "\n";
  });
  return match ? 0 : 1;
}

int run_hilb(const SurfaceOpts& o, Mode mode, std::ostream& out) {
  const toric::ToricSurface S = parse_surface(o.surface);
  const toric::ToricLineBundle K = parse_bundle(o.K, S, "--K");
  const toric::ToricLineBundle L = parse_bundle(o.L, S, "--L");
  std::optional<toric::Specialization> spec;
  if (!o.spec.empty()) spec = parse_spec(o.spec);
  const toric::Vec2 tk = o.twist_k.empty() ? toric::Vec2{0, 0} : parse_vec2(o.twist_k, "--twist-k");
  const toric::Vec2 tl = o.twist_l.empty() ? toric::Vec2{0, 0} : parse_vec2(o.twist_l, "--twist-l");
  const toric::Specialization used =
      spec ? *spec : hilb::find_specialization(S, o.order);
  const QSeries series = hilb::hilb_chi_series(S, K, L, o.order, used, tk, tl);
  std::vector<long long> counts;
  for (int n = 0; n <= o.order; ++n)
    counts.push_back(static_cast<long long>(hilb::enumerate_fixed_points(S, n).size()));

  ordered_json j;
  j["surface"] = io::to_json(S);
  j["K"] = io::to_json(K);
  j["L"] = io::to_json(L);
  j["order"] = o.order;
  j["specialization"] = ordered_json::array({used.a, used.b});
  j["fixed_points"] = counts;
  j["series"] = io::to_json(series);
  emit(out, mode, j, [&](std::ostream& os) {
    os << "specialization: (" << used.a << ", " << used.b << ")\n";
    os << "fixed points per order:";
    for (long long c : counts) os << " " << c;
    os << "\n";
    os << "series: " << series.str() << "\n";
  });
  return 0;
}

int run_check_conjecture(const SurfaceOpts& o, Mode mode, std::ostream& out) {
  const toric::ToricSurface S = parse_surface(o.surface);
  const toric::ToricLineBundle K = parse_bundle(o.K, S, "--K");
  const toric::ToricLineBundle L = parse_bundle(o.L, S, "--L");
  std::optional<toric::Specialization> spec;
  if (!o.spec.empty()) spec = parse_spec(o.spec);
  const verify::VerdictReport rep = verify::verify_conjecture_surface(S, K, L, o.order, spec);
  emit(out, mode, io::to_json(rep, o.timings), [&](std::ostream& os) {
    os << "localization: " << rep.lhs.str() << "\n";
    os << "predicted:    " << rep.rhs.str() << "\n";
    os << "verdict: " << (rep.pass ? "PASS" : "FAIL") << "\n";
    if (o.timings) os << "time: " << rep.timing_ms << " ms\n";
  });
  return rep.pass ? 0 : 1;
}

int run_check_degeneration(const DegenOpts& o, Mode mode, std::ostream& out) {
  const toric::ToricSurface S = parse_surface(o.surface);
  const toric::ToricLineBundle K0 = parse_bundle(o.K0, S, "--K0");
  const toric::ToricLineBundle L0 = parse_bundle(o.L0, S, "--L0");
  const toric::DegenerationScenario scn =
      toric::make_blowup_scenario(S, o.chart, K0, L0, o.cK, o.cL);
  std::optional<toric::Specialization> spec;
  if (!o.spec.empty()) spec = parse_spec(o.spec);
  const verify::VerdictReport rep = verify::verify_inclusion_exclusion(scn, o.order, spec);
  ordered_json j;
  j["scenario"] = io::to_json(scn);
  j["report"] = io::to_json(rep, o.timings);
  emit(out, mode, j, [&](std::ostream& os) {
    os << "log c(X) + log c(P_D):  " << rep.lhs.str() << "\n";
    os << "log c(Y1) + log c(Y2):  " << rep.rhs.str() << "\n";
    os << "residual: " << rep.residual.str() << "\n";
    os << "verdict: " << (rep.pass ? "PASS" : "FAIL") << "\n";
    if (o.timings) os << "time: " << rep.timing_ms << " ms\n";
  });
  return rep.pass ? 0 : 1;
}

int run_generators(const GenOpts& o, Mode mode, std::ostream& out) {
  const int order = o.order < 0 ? o.n : o.order;
  const auto entries = verify::generator_report(o.n, order);
  ordered_json j = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json row = io::to_json(e.triple);
    row["predicted"] = io::to_json(e.predicted);
    j.push_back(std::move(row));
  }
  emit(out, mode, j, [&](std::ostream& os) {
    for (const auto& e : entries) {
      os << "P^(";
      for (std::size_t i = 0; i < e.triple.space.lambda.size(); ++i)
        os << (i ? "," : "") << e.triple.space.lambda[i];
      os << ") K=(";
      for (std::size_t i = 0; i < e.triple.K.m.size(); ++i) os << (i ? "," : "") << e.triple.K.m[i];
      os << ") L=(";
      for (std::size_t i = 0; i < e.triple.L.m.size(); ++i) os << (i ? "," : "") << e.triple.L.m[i];
      os << "): " << e.predicted.str() << "\n";
    }
  });
  return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Euler characteristic series of tautological sheaves on Hilbert "
               "schemes of points over toric surfaces"};
  app.require_subcommand(1);
  std::string output_flag;
  app.add_option("--output", output_flag, "output mode: json or text (default: $TAUTCHI_OUTPUT or text)")
      ->capture_default_str();

  CombineOpts combine;
  auto* cmb = app.add_subcommand("combine", "run the three inclusion-exclusion routes and compare");
  cmb->add_option("--a", combine.a, "coefficient sequence a (JSON list or single value)")->required();
  cmb->add_option("--b", combine.b, "coefficient sequence b")->required();
  cmb->add_option("--d", combine.d, "coefficient sequence d")->required();
  cmb->add_option("--order", combine.order, "number of coefficients to compute")->required();

  SurfaceOpts predict;
  auto* prd = app.add_subcommand("predict", "predicted series and closed form for a surface pair");
  prd->add_option("--surface", predict.surface, "p2, p1xp1, f<e>, or fan JSON")->required();
  prd->add_option("--K", predict.K, "ray coefficients of K")->required();
  prd->add_option("--L", predict.L, "ray coefficients of L")->required();
  prd->add_option("--order", predict.order, "series order")->required();

  SurfaceOpts hilb_o;
  auto* hlb = app.add_subcommand("hilb", "localization series over Hilbert schemes of points");
  hlb->add_option("--surface", hilb_o.surface, "p2, p1xp1, f<e>, or fan JSON")->required();
  hlb->add_option("--K", hilb_o.K, "ray coefficients of K")->required();
  hlb->add_option("--L", hilb_o.L, "ray coefficients of L")->required();
  hlb->add_option("--order", hilb_o.order, "series order")->required();
  hlb->add_option("--spec", hilb_o.spec, "one-parameter subgroup 'a,b' (default: found automatically)");
  hlb->add_option("--twist-k", hilb_o.twist_k, "equivariant lift twist for K, 'x,y'");
  hlb->add_option("--twist-l", hilb_o.twist_l, "equivariant lift twist for L, 'x,y'");

  SurfaceOpts chk;
  auto* cnj = app.add_subcommand("check-conjecture", "localization series vs predicted series");
  cnj->add_option("--surface", chk.surface, "p2, p1xp1, f<e>, or fan JSON")->required();
  cnj->add_option("--K", chk.K, "ray coefficients of K")->required();
  cnj->add_option("--L", chk.L, "ray coefficients of L")->required();
  cnj->add_option("--order", chk.order, "series order")->required();
  cnj->add_option("--spec", chk.spec, "one-parameter subgroup 'a,b'");
  cnj->add_flag("--timings", chk.timings, "include timing in the report");

  DegenOpts deg;
  auto* dgn = app.add_subcommand("check-degeneration",
                                 "build a blowup scenario and verify the inclusion-exclusion identity");
  dgn->add_option("--surface", deg.surface, "p2, p1xp1, f<e>, or fan JSON")->required();
  dgn->add_option("--chart", deg.chart, "chart index of the blown-up fixed point")->required();
  dgn->add_option("--K0", deg.K0, "ray coefficients of K on the base surface")->required();
  dgn->add_option("--L0", deg.L0, "ray coefficients of L on the base surface")->required();
  dgn->add_option("--cK", deg.cK, "exceptional twist of K")->required();
  dgn->add_option("--cL", deg.cL, "exceptional twist of L")->required();
  dgn->add_option("--order", deg.order, "series order")->required();
  dgn->add_option("--spec", deg.spec, "one-parameter subgroup 'a,b'");
  dgn->add_flag("--timings", deg.timings, "include timing in the report");

  GenOpts gen;
  auto* gnr = app.add_subcommand("generators", "cobordism generator triples with predicted series");
  gnr->add_option("--n", gen.n, "level n >= 1")->required();
  gnr->add_option("--order", gen.order, "series order (default: n)");

  // Let --output be given after the subcommand too.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    const Mode mode = output_mode(output_flag);
    if (*cmb) return run_combine(combine, mode, out);
    if (*prd) return run_predict(predict, mode, out);
    if (*hlb) return run_hilb(hilb_o, mode, out);
    if (*cnj) return run_check_conjecture(chk, mode, out);
    if (*dgn) return run_check_degeneration(deg, mode, out);
    if (*gnr) return run_generators(gen, mode, out);
    err << "no subcommand given\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidFanError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InadmissibleSpecializationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotConstantError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace tautchi::cli
