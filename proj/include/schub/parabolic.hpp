#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schub {

/// A subset of the simple-root indices {1..n-1} of S_n. Encodes a standard
/// parabolic subgroup (through W_J) or the standard Levi subgroup L_I.
class ParabolicSet {
 public:
  /// Indices are sorted and deduplicated; each must lie in {1..n-1}.
  ParabolicSet(int n, std::vector<int> indices);

  static ParabolicSet none(int n) { return ParabolicSet(n, {}); }
  /// All simple roots, Δ.
  static ParabolicSet all(int n);
  /// Δ∖{d}, the maximal parabolic whose quotient indexes Gr(d, n).
  static ParabolicSet maximal(int n, int d);

  /// Parses comma-separated indices, e.g. "1,3,4". The empty string is ∅.
  static ParabolicSet parse(int n, std::string_view text);

  /// Every subset of {1..n-1}, in increasing bitmask order.
  static std::vector<ParabolicSet> all_subsets(int n);

  int rank() const noexcept { return n_; }
  std::span<const int> indices() const noexcept { return indices_; }
  int size() const noexcept { return static_cast<int>(indices_.size()); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(int i) const;

  ParabolicSet complement() const;
  ParabolicSet intersect(const ParabolicSet& other) const;
  ParabolicSet unite(const ParabolicSet& other) const;
  bool is_subset_of(const ParabolicSet& other) const;

  std::string to_string() const;

  friend bool operator==(const ParabolicSet&, const ParabolicSet&) = default;
  friend std::strong_ordering operator<=>(const ParabolicSet&, const ParabolicSet&) = default;

 private:
  int n_;
  std::vector<int> indices_;
};

std::ostream& operator<<(std::ostream& os, const ParabolicSet& s);

}  // namespace schub
