#pragma once

// Smooth complete toric surfaces given by their fans, torus-equivariant line
// bundles given by ray coefficients, and exact Euler characteristics via
// torus localization.  Also the degeneration scenario builder and the
// product-of-projective-spaces side used by the cobordism generators.
//
// Conventions, guarded by tests:
//  * rays are primitive and cyclically ordered (consecutive determinants all
//    +1 or all -1);
//  * the chart of the cone (v_i, v_{i+1}) uses the dual basis characters
//    w_1, w_2 with <w_j, v_k> = delta_jk;
//  * a bundle with ray coefficients a_rho has chart fiber character m_sigma
//    determined by <m_sigma, v_i> = a_{v_i}, <m_sigma, v_{i+1}> = a_{v_{i+1}};
//  * localization denominators carry (1 - z^{-<s,w>}) per chart character w,
//    numerators carry z^{+<s,m_sigma>}.
// With these orientations the rank-one sum reproduces chi(S, Lb) on the nose
// (chi(P^2, O(1)) = 3, not its dual), and the Hilbert scheme series at n = 1
// reduces to chi(O) - u chi(K^dual) - v chi(L) + uv chi(K^dual otimes L).

#include "tautchi/ratfun.hpp"
#include "tautchi/uvpoly.hpp"

#include <array>
#include <string>
#include <vector>

namespace tautchi::toric {

using Vec2 = std::array<int, 2>;

inline Vec2 add(Vec2 a, Vec2 b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 sub(Vec2 a, Vec2 b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec2 scale(int k, Vec2 a) { return {k * a[0], k * a[1]}; }
inline long long det(Vec2 a, Vec2 b) {
  return static_cast<long long>(a[0]) * b[1] - static_cast<long long>(a[1]) * b[0];
}

// A one-parameter subgroup z -> (z^a, z^b) of the torus; pairs with
// characters.
struct Specialization {
  int a = 1;
  int b = 1;
  long long operator()(Vec2 w) const {
    return static_cast<long long>(a) * w[0] + static_cast<long long>(b) * w[1];
  }
  friend bool operator==(const Specialization&, const Specialization&) = default;
};

class ToricSurface {
public:
  enum class Kind { P2, P1xP1, Hirzebruch, Fan };

  // Validates: >= 3 primitive rays, consecutive determinants all +1 or all
  // -1, and winding number exactly 1 (smooth complete fan in cyclic order).
  explicit ToricSurface(std::vector<Vec2> rays, Kind kind = Kind::Fan, int e = 0);

  static ToricSurface p2();
  static ToricSurface p1xp1();
  static ToricSurface hirzebruch(int e); // rays (1,0), (0,1), (-1,e), (0,-1)

  const std::vector<Vec2>& rays() const { return rays_; }
  int num_rays() const { return static_cast<int>(rays_.size()); }
  Kind kind() const { return kind_; }
  int hirzebruch_e() const { return e_; }

  friend bool operator==(const ToricSurface& a, const ToricSurface& b) {
    return a.rays_ == b.rays_;
  }

private:
  std::vector<Vec2> rays_;
  Kind kind_;
  int e_;
  void validate() const;
};

// The affine chart of the cone spanned by rays i and i+1 (cyclically).
struct Chart {
  int index = 0;
  Vec2 v1{}, v2{}; // the two rays
  Vec2 w1{}, w2{}; // dual basis characters, <w_j, v_k> = delta_jk
};

std::vector<Chart> charts(const ToricSurface& S);

struct ToricLineBundle {
  std::vector<int> ray_coeffs; // one per ray
  friend bool operator==(const ToricLineBundle&, const ToricLineBundle&) = default;
};

ToricLineBundle trivial_bundle(const ToricSurface& S);
ToricLineBundle canonical_bundle(const ToricSurface& S); // all coefficients -1
ToricLineBundle tensor(const ToricLineBundle& a, const ToricLineBundle& b);
ToricLineBundle dual(const ToricLineBundle& a);

// The character of the bundle fiber at the chart's fixed point.
Vec2 fiber_character(const ToricSurface& S, const ToricLineBundle& Lb, const Chart& chart);

// A specialization with <s, w> != 0 for every chart character of S.
Specialization chart_admissible_spec(const ToricSurface& S);

// Exact chi(S, Lb) by localization over the chart fixed points.
long long chi_line_bundle(const ToricSurface& S, const ToricLineBundle& Lb);

// chi(O) - u chi(K^dual) - v chi(L) + uv chi(K^dual otimes L).
UVPoly chi_lambda_pair(const ToricSurface& S, const ToricLineBundle& K, const ToricLineBundle& L);

// Star subdivision at the fixed point of chart i: inserts v_i + v_{i+1}.
ToricSurface blowup_at_chart(const ToricSurface& S, int chart_index);

// On blowup_at_chart(S, i): pullback of Lb twisted by -c times the
// exceptional divisor; the new ray coefficient is a_i + a_{i+1} - c.
ToricLineBundle pullback_and_twist(const ToricSurface& S, int chart_index,
                                   const ToricLineBundle& Lb, int c);

// Equality of fans up to GL(2,Z) and cyclic relabeling.
bool fan_isomorphic(const ToricSurface& A, const ToricSurface& B);

// ---- products of projective spaces ---------------------------------------

struct ProjProduct {
  std::vector<int> lambda; // factors P^{lambda_i}, lambda_i >= 1
  friend bool operator==(const ProjProduct&, const ProjProduct&) = default;
};

struct ProjBundle {
  std::vector<int> m; // box tensor of O(m_i), one per factor
  friend bool operator==(const ProjBundle&, const ProjBundle&) = default;
};

ProjBundle trivial_bundle(const ProjProduct& X);
ProjBundle tensor(const ProjBundle& a, const ProjBundle& b);
ProjBundle dual(const ProjBundle& a);

// prod_i binom(lambda_i + m_i, lambda_i), exact for all integers m_i.
long long chi_line_bundle(const ProjProduct& X, const ProjBundle& Lb);
UVPoly chi_lambda_pair(const ProjProduct& X, const ProjBundle& K, const ProjBundle& L);

// ---- degeneration scenarios ----------------------------------------------

struct MarkedSurface {
  ToricSurface S;
  ToricLineBundle K, L;
};

// The four families cut out by degenerating to the normal cone of a
// torus-fixed point: the general fiber X, the two special-fiber components
// Y1 (blowup) and Y2 (a P^2), and the P^1-bundle P_D over the gluing curve.
struct DegenerationScenario {
  MarkedSurface X, Y1, Y2, PD;
  std::string provenance;
};

DegenerationScenario make_blowup_scenario(const ToricSurface& S, int chart_index,
                                          const ToricLineBundle& K0, const ToricLineBundle& L0,
                                          int cK, int cL);

// ---- cobordism generators -------------------------------------------------

struct GeneratorTriple {
  ProjProduct space;
  ProjBundle K, L;
  friend bool operator==(const GeneratorTriple&, const GeneratorTriple&) = default;
};

// For every partition lambda of n: the triples (P^lambda, K, L) with K, L
// in {O, p_i^* O(1)} and K, L not pulled back from the same factor when
// both are nontrivial.  Deduplicated, deterministic order.
std::vector<GeneratorTriple> cobordism_generators(int n);

} // namespace tautchi::toric
