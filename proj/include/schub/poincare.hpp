#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace schub {

/// Integer polynomial in q stored densely by degree. Used for rank-generating
/// functions of Bruhat intervals.
class PoincarePolynomial {
 public:
  using Coefficient = std::int64_t;

  PoincarePolynomial() : coefficients_{1} {}
  explicit PoincarePolynomial(std::vector<Coefficient> coefficients);

  /// 1 + q + ... + q^{k-1}.
  static PoincarePolynomial q_integer(int k);

  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  Coefficient operator[](int k) const;
  const std::vector<Coefficient>& coefficients() const noexcept { return coefficients_; }

  bool is_palindromic() const;
  Coefficient evaluate_at_one() const;

  /// "1+2q+2q^2+q^3"
  std::string to_string() const;

  friend PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b);
  friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;

 private:
  std::vector<Coefficient> coefficients_;
};

std::ostream& operator<<(std::ostream& os, const PoincarePolynomial& p);

}  // namespace schub
