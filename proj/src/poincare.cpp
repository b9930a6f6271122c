#include "schub/poincare.hpp"

#include <algorithm>
#include <ostream>

#include "schub/errors.hpp"

namespace schub {

PoincarePolynomial::PoincarePolynomial(std::vector<Coefficient> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (coefficients_.size() > 1 && coefficients_.back() == 0) coefficients_.pop_back();
  if (coefficients_.empty()) coefficients_.push_back(0);
}

PoincarePolynomial PoincarePolynomial::q_integer(int k) {
  if (k < 1) throw PreconditionError("q-integer needs k >= 1");
  return PoincarePolynomial(std::vector<Coefficient>(static_cast<std::size_t>(k), 1));
}

PoincarePolynomial::Coefficient PoincarePolynomial::operator[](int k) const {
  if (k < 0 || k > degree()) return 0;
  return coefficients_[static_cast<std::size_t>(k)];
}

bool PoincarePolynomial::is_palindromic() const {
  return std::equal(coefficients_.begin(), coefficients_.end(), coefficients_.rbegin());
}

PoincarePolynomial::Coefficient PoincarePolynomial::evaluate_at_one() const {
  Coefficient s = 0;
  for (auto c : coefficients_) s += c;
  return s;
}

std::string PoincarePolynomial::to_string() const {
  std::string s;
  for (int k = 0; k <= degree(); ++k) {
    const Coefficient c = (*this)[k];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? "-" : "+";
    else if (c < 0) s += "-";
    const Coefficient mag = c < 0 ? -c : c;
    if (k == 0 || mag != 1) s += std::to_string(mag);
    if (k >= 1) s += "q";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b) {
  std::vector<PoincarePolynomial::Coefficient> c(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return PoincarePolynomial(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const PoincarePolynomial& p) { return os << p.to_string(); }

}  // namespace schub
