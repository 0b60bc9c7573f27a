#include "tautchi/inclexcl.hpp"

#include "tautchi/errors.hpp"

namespace tautchi {

QSeries series_from_coeffs(const CoeffSeq& c, int order) {
  QSeries s = QSeries::one(order);
  for (int n = 1; n <= order && n <= static_cast<int>(c.size()); ++n)
    s.set_coeff(n, c[static_cast<std::size_t>(n - 1)]);
  return s;
}

CoeffSeq coeffs_from_series(const QSeries& s) {
  if (s.coeff(0) != UVPoly(1))
    throw NonzeroConstantError("coeffs_from_series: constant term must be 1");
  CoeffSeq c;
  c.reserve(static_cast<std::size_t>(s.order()));
  for (int n = 1; n <= s.order(); ++n) c.push_back(s.coeff(n));
  return c;
}

static void check_lengths(const CoeffSeq& a, const CoeffSeq& b, const CoeffSeq& d, int order) {
  if (order < 0) throw UsageError("combine: order must be >= 0");
  if (static_cast<int>(a.size()) < order || static_cast<int>(b.size()) < order ||
      static_cast<int>(d.size()) < order)
    throw UsageError("combine: sequences must have at least `order` entries");
}

CoeffSeq combine_log(const CoeffSeq& a, const CoeffSeq& b, const CoeffSeq& d, int order) {
  check_lengths(a, b, d, order);
  QSeries A = series_from_coeffs(a, order);
  QSeries B = series_from_coeffs(b, order);
  QSeries D = series_from_coeffs(d, order);
  QSeries C = series_exp(series_log(A) + series_log(B) - series_log(D));
  return coeffs_from_series(C);
}

CoeffSeq combine_direct(const CoeffSeq& a, const CoeffSeq& b, const CoeffSeq& d, int order) {
  check_lengths(a, b, d, order);
  CoeffSeq c;
  c.reserve(static_cast<std::size_t>(order));
  for (int n = 1; n <= order; ++n) c.push_back(combine_direct_coeff(a, b, d, n));
  return c;
}

UVPoly combine_strata(const CoeffSeq& a, const CoeffSeq& b, const CoeffSeq& d, int n) {
  if (n < 1) throw UsageError("combine_strata: n must be >= 1");
  check_lengths(a, b, d, n);
  return combine_strata_coeff(a, b, d, n);
}

QSeries residual(const QSeries& cX, const QSeries& cY1, const QSeries& cY2, const QSeries& cPD) {
  return series_log(cX) + series_log(cPD) - series_log(cY1) - series_log(cY2);
}

CoeffSeq infer_fourth(const CoeffSeq& a, const CoeffSeq& b, const CoeffSeq& c, int order) {
  check_lengths(a, b, c, order);
  QSeries A = series_from_coeffs(a, order);
  QSeries B = series_from_coeffs(b, order);
  QSeries C = series_from_coeffs(c, order);
  QSeries D = series_exp(series_log(A) + series_log(B) - series_log(C));
  return coeffs_from_series(D);
}

std::vector<int> StratumSignature::gaps() const {
  std::vector<int> g;
  for (std::size_t i = 0; i + 1 < I.size(); ++i) g.push_back(I[i + 1] - I[i]);
  return g;
}

std::vector<int> StratumSignature::parts() const {
  std::vector<int> p{y1_size()};
  for (int g : gaps()) p.push_back(g);
  p.push_back(y2_size());
  return p;
}

std::vector<StratumSignature> strata_signatures(int n) {
  if (n < 0) throw UsageError("strata_signatures: n must be >= 0");
  std::vector<StratumSignature> out;
  const unsigned ground = static_cast<unsigned>(n) + 1;
  for (unsigned mask = 1; mask < (1u << ground); ++mask) {
    StratumSignature sig;
    sig.n = n;
    for (int i = 1; i <= n + 1; ++i)
      if (mask & (1u << (i - 1))) sig.I.push_back(i);
    out.push_back(std::move(sig));
  }
  return out;
}

} // namespace tautchi
