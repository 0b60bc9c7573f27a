#pragma once

// The inclusion-exclusion calculus on coefficient sequences.
//
// A coefficient sequence holds c_1..c_N (index i stores c_{i+1}); the
// combiners apply the convention a_0 = b_0 = 1 themselves.  Three routes
// compute the same combination of sequences a, b, d and are kept separate
// on purpose: agreeing outputs are the cross-check.

#include "tautchi/qseries.hpp"
#include "tautchi/uvpoly.hpp"

#include <cstddef>
#include <vector>

namespace tautchi {

using CoeffSeq = std::vector<UVPoly>;

// 1 + c_1 Q + ... + c_N Q^N (missing entries are zero).
QSeries series_from_coeffs(const CoeffSeq& c, int order);
// Inverse of the above; requires coeff(0) == 1.
CoeffSeq coeffs_from_series(const QSeries& s);

namespace detail {

template <class Ring>
Ring seq_at(const std::vector<Ring>& seq, int i) {
  return i == 0 ? Ring(1) : seq.at(static_cast<std::size_t>(i - 1));
}

} // namespace detail

// Alternating sum over strictly decreasing chains n >= i_1 > ... > i_l >= 0:
//
//   c_n = sum_{l>=1} (-1)^{l-1} sum_{chains} a_{i_l} d_{i_1-i_2} ... d_{i_{l-1}-i_l} b_{n-i_1}.
//
// Templated over the coefficient ring so the symbolic tests can run the
// same code path over a many-variable polynomial ring.
template <class Ring>
Ring combine_direct_coeff(const std::vector<Ring>& a, const std::vector<Ring>& b,
                          const std::vector<Ring>& d, int n) {
  Ring acc{};
  const unsigned ground = static_cast<unsigned>(n) + 1;
  for (unsigned mask = 1; mask < (1u << ground); ++mask) {
    int top = -1, prev = -1, low = -1;
    Ring term(1);
    for (int i = n; i >= 0; --i) {
      if (!(mask & (1u << i))) continue;
      if (top < 0)
        top = i;
      else
        term = term * detail::seq_at(d, prev - i);
      prev = i;
      low = i;
    }
    term = term * detail::seq_at(a, low);
    term = term * detail::seq_at(b, n - top);
    int l = __builtin_popcount(mask);
    if (l % 2 == 1)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

// Alternating sum over nonempty subsets I = {a_1 < ... < a_r} of {1..n+1}:
//
//   c_n = sum_I (-1)^{|I|-1} a_{a_1 - 1} (prod_i d_{a_{i+1}-a_i}) b_{n+1-a_r}.
template <class Ring>
Ring combine_strata_coeff(const std::vector<Ring>& a, const std::vector<Ring>& b,
                          const std::vector<Ring>& d, int n) {
  Ring acc{};
  const unsigned ground = static_cast<unsigned>(n) + 1;
  for (unsigned mask = 1; mask < (1u << ground); ++mask) {
    int first = -1, prev = -1, last = -1;
    Ring term(1);
    for (int i = 1; i <= n + 1; ++i) {
      if (!(mask & (1u << (i - 1)))) continue;
      if (first < 0)
        first = i;
      else
        term = term * detail::seq_at(d, i - prev);
      prev = i;
      last = i;
    }
    term = detail::seq_at(a, first - 1) * term;
    term = term * detail::seq_at(b, n + 1 - last);
    int r = __builtin_popcount(mask);
    if (r % 2 == 1)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

// Route 1: through the series identity 1 + sum c_n Q^n = A * B / D.
CoeffSeq combine_log(const CoeffSeq& a, const CoeffSeq& b, const CoeffSeq& d, int order);
// Route 2: the closed combinatorial sum, for every n <= order.
CoeffSeq combine_direct(const CoeffSeq& a, const CoeffSeq& b, const CoeffSeq& d, int order);
// Route 3: the geometric stratification sum, one coefficient at a time.
UVPoly combine_strata(const CoeffSeq& a, const CoeffSeq& b, const CoeffSeq& d, int n);

// log cX + log cPD - log cY1 - log cY2, at the smallest common order.
// Identically zero exactly when the four series satisfy the degeneration
// identity.
QSeries residual(const QSeries& cX, const QSeries& cY1, const QSeries& cY2, const QSeries& cPD);

// The d with combine_log(a, b, d) = c, i.e. D = A * B / C.
CoeffSeq infer_fourth(const CoeffSeq& a, const CoeffSeq& b, const CoeffSeq& c, int order);

// A stratum of the inclusion-exclusion sum at level n: the subset I
// together with the sizes of the pieces the geometry splits into.
struct StratumSignature {
  int n = 0;
  std::vector<int> I; // nonempty, ascending, subset of {1..n+1}

  int y1_size() const { return I.front() - 1; }
  int y2_size() const { return n + 1 - I.back(); }
  std::vector<int> gaps() const;
  // (y1_size, gaps..., y2_size); always sums to n.
  std::vector<int> parts() const;
};

// All 2^{n+1} - 1 signatures, in subset-mask order.
std::vector<StratumSignature> strata_signatures(int n);

} // namespace tautchi
