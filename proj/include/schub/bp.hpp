#pragma once

#include <optional>

#include "schub/grassmann.hpp"
#include "schub/parabolic.hpp"
#include "schub/permutation.hpp"
#include "schub/toroidal.hpp"

// Parabolic (Billey-Postnikov) decompositions w = v u for J_P ⊆ K, with
// v in W^K and u in W_K ∩ W^{J_P}.

namespace schub {

struct ParabolicFactors {
  Permutation v;
  Permutation u;
};

/// Requires w in W^{J_P} and J_P ⊆ K.
ParabolicFactors parabolic_decompose(const Permutation& w, const ParabolicSet& jp, const ParabolicSet& k);

/// u is Bruhat-maximal in {x in W_K ∩ W^{J_P} : x <= w}.
bool is_bp_maximality(const Permutation& w, const ParabolicSet& jp, const ParabolicSet& k);

/// S(v) ∩ K ⊆ D_L(u'), where u' = u w_{0,J_P} is the top of u W_{J_P}.
bool is_bp_support(const Permutation& w, const ParabolicSet& jp, const ParabolicSet& k);

/// P(w, J_P) = P(v, K) · P(u, J_P).
bool poincare_factorizes(const Permutation& w, const ParabolicSet& jp, const ParabolicSet& k);

struct BPDecomposition {
  Permutation w;
  ParabolicSet jp;
  ParabolicSet k;
  Permutation v;
  Permutation u;
  bool maximality;
  bool support;
  bool poincare;

  bool is_bp() const noexcept { return poincare; }
  bool characterizations_agree() const noexcept { return maximality == support && support == poincare; }
};

BPDecomposition bp_decompose(const Permutation& w, const ParabolicSet& jp, const ParabolicSet& k);

enum class ProjectionKind {
  onto,     ///< the divisor maps onto X_{vQ}
  divisor,  ///< the image is a Schubert divisor of X_{vQ}
  neither,  ///< the image has codimension >= 2 (only possible off BP decompositions)
};

struct DivisorProjection {
  Permutation image;                ///< min_coset_rep(τ, K)
  ProjectionKind kind;
  std::optional<int> right_simple;  ///< i with τ = w s_i, when τ is such a product
  bool right_simple_outside_k;      ///< s_i exists and i is not in K, so τ W_K differs from w W_K
};

/// Classifies the image of the Schubert divisor X_{τP} under G/P -> G/Q_K.
/// Requires τ to be a lower cover of w in W^{J_P}.
DivisorProjection project_divisor(const Permutation& tau, const Permutation& w, const ParabolicSet& jp,
                                  const ParabolicSet& k);

enum class TransportVerdict {
  not_applicable,          ///< w not L_I-stable, decomposition not BP, or X_{wP} not smooth
  certified_non_toroidal,  ///< the base X_{vQ_d} fails the Grassmannian necessary conditions
  no_conclusion,
};

struct TransportReport {
  BPDecomposition decomposition;
  bool stable;
  bool smooth;
  std::optional<ToroidalReport> base;  ///< Grassmannian check of X_{vQ_d}, when applicable
  TransportVerdict verdict;
};

/// Pushes the Grassmannian necessary conditions through the projection
/// X_{wP} -> X_{vQ_d}: if w = v u is a BP decomposition of a smooth L_I-stable
/// X_{wP} and the base fails them, X_{wP} is not toroidal. Sphericality is
/// assumed, not checked.
TransportReport toroidal_transport(const Permutation& w, const ParabolicSet& jp, int d, const ParabolicSet& I);

/// Separate utility, not used by the checks above: searches for a chain of
/// BP decompositions over maximal parabolics whose Grassmannian bases are all
/// rationally smooth. Returns true iff one exists.
bool rationally_smooth_by_bp_chain(const Permutation& w, const ParabolicSet& jp);

}  // namespace schub
