#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schub {

/// An element of the symmetric group S_n in one-line notation.
///
/// Values and positions are 1-based: `w(i)` is the value at position i.
/// Products compose as functions, `(a * b)(j) = a(b(j))`, so left
/// multiplication by a simple transposition swaps the *values* i and i+1,
/// and right multiplication swaps the *positions* i and i+1.
class Permutation {
 public:
  /// Validates that `one_line` is a bijection of {1..n}, n >= 1.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  /// Parses comma-separated one-line notation, e.g. "3,4,1,2".
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(entries_.size()); }

  int operator()(int position) const { return entries_[static_cast<std::size_t>(position - 1)]; }

  std::span<const int> one_line() const noexcept { return entries_; }

  /// Position holding `value`, i.e. w^{-1}(value).
  int position_of(int value) const;

  bool is_identity() const noexcept;

  Permutation inverse() const;

  /// s_i * w: exchanges the values i and i+1.
  Permutation left_simple(int i) const;

  /// w * s_i: exchanges the entries at positions i and i+1.
  Permutation right_simple(int i) const;

  Permutation swap_positions(int i, int j) const;

  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> one_line, Unchecked) : entries_(std::move(one_line)) {}

  std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& w);

/// Canonical order for reporting: by length, then lexicographic one-line notation.
bool length_lex_less(const Permutation& a, const Permutation& b);

}  // namespace schub
