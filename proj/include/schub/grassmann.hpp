#pragma once

#include <optional>
#include <span>
#include <vector>

#include "schub/parabolic.hpp"
#include "schub/permutation.hpp"

namespace schub {

/// A Schubert variety X_{wQ_d} in Gr(d, n), indexed by a Grassmann
/// permutation w: w(1) < ... < w(d) and w(d+1) < ... < w(n).
class GrassmannSchubert {
 public:
  GrassmannSchubert(int d, Permutation w);

  /// Builds w from its first window; the tail is the increasing complement.
  static GrassmannSchubert from_columns(int n, std::vector<int> columns);

  int rank() const noexcept { return w_.size(); }
  int descent() const noexcept { return d_; }
  const Permutation& permutation() const noexcept { return w_; }
  /// {w(1), ..., w(d)} in increasing order.
  std::span<const int> columns() const noexcept { return columns_; }
  /// Δ∖{d}
  ParabolicSet parabolic() const { return ParabolicSet::maximal(rank(), d_); }
  bool is_identity() const noexcept { return w_.is_identity(); }

  friend bool operator==(const GrassmannSchubert& a, const GrassmannSchubert& b) {
    return a.d_ == b.d_ && a.w_ == b.w_;
  }

 private:
  int d_;
  Permutation w_;
  std::vector<int> columns_;
};

/// A maximal interval {start, ..., start + extra} of the column set.
struct Run {
  int start;
  int extra;
  friend bool operator==(const Run&, const Run&) = default;
};

std::vector<Run> runs(const GrassmannSchubert& x);

/// Sum of w(i) - i over the first window.
int dimension(const GrassmannSchubert& x);

/// The divisor obtained by lowering the first entry of run `run_index`
/// (1-based) by one, or nothing when that run starts at 1.
std::optional<GrassmannSchubert> run_divisor(const GrassmannSchubert& x, int run_index);

/// All Schubert divisors, in run order. Throws for the identity.
std::vector<GrassmannSchubert> schubert_divisors(const GrassmannSchubert& x);

/// Column set {1..p} ∪ {m, ..., m + (d-p) - 1} with m > p + 1.
/// The identity (p = d, nothing else) is reported with m = 0.
struct SmoothForm {
  int p;
  int m;
  friend bool operator==(const SmoothForm&, const SmoothForm&) = default;
};

std::optional<SmoothForm> smooth_form(const GrassmannSchubert& x);

/// Every element of S_n^d, in lexicographic order of the column set.
std::vector<GrassmannSchubert> grassmann_elements(int n, int d);

}  // namespace schub
