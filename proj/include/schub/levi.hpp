#pragma once

#include <optional>
#include <vector>

#include "schub/grassmann.hpp"
#include "schub/parabolic.hpp"
#include "schub/permutation.hpp"

namespace schub {

/// The standard Levi subgroup L_I of GL_n together with its block partition
/// of {1..n}: one block per element of I^c plus a final block ending at n.
struct LeviDescriptor {
  ParabolicSet roots;
  std::vector<std::vector<int>> blocks;

  int rank() const noexcept { return roots.rank(); }
  int block_count() const noexcept { return static_cast<int>(blocks.size()); }
};

LeviDescriptor levi_blocks(const ParabolicSet& I);

/// Whether X_{θQ_J} is stable under L_I: for each i in I, the minimal coset
/// representative of s_i θ is no longer than θ. Requires θ in W^J.
bool is_stable(const Permutation& theta, const ParabolicSet& J, const ParabolicSet& I);

/// Block criterion for Grassmann θ: in every block, the part of θ's column
/// set lying there consists of the block's largest elements.
bool is_degree1_head(const GrassmannSchubert& theta, const ParabolicSet& I);
bool is_degree1_head(const Permutation& theta, int d, const ParabolicSet& I);

/// The I-stable elements of the lower interval below some τ.
struct HeadReport {
  std::vector<Permutation> heads;                  ///< sorted by length, then lexicographically
  std::optional<Permutation> minimal_head;         ///< the Bruhat-minimum, when heads is non-empty
  std::vector<Permutation> maximal_proper_heads;   ///< maximal elements of heads ∖ {τ}
};

HeadReport heads_below(const Permutation& tau, const ParabolicSet& J, const ParabolicSet& I);

/// X_{τQ} contains an L_I-orbit iff some head lies below τ.
bool contains_l_orbit(const Permutation& tau, const ParabolicSet& J, const ParabolicSet& I);

/// Minimal coset representative of w_{0,I}: indexes the closure of L_I · idQ.
Permutation minimal_head(const ParabolicSet& J, const ParabolicSet& I);

/// Simple roots of the Levi factor of Stab(X_{wQ_J}).
ParabolicSet l_max(const Permutation& w, const ParabolicSet& J);

/// Maximal I-stable proper Schubert subvarieties of an I-stable X_{wQ_J}.
std::vector<Permutation> boundary(const Permutation& w, const ParabolicSet& J, const ParabolicSet& I);

}  // namespace schub
