#include "schub/parabolic.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <ostream>

#include "schub/errors.hpp"

namespace schub {

ParabolicSet::ParabolicSet(int n, std::vector<int> indices) : n_(n), indices_(std::move(indices)) {
  if (n < 1) throw PreconditionError("parabolic set needs positive rank");
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  for (int i : indices_)
    if (i < 1 || i > n - 1)
      throw PreconditionError("simple root index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
}

ParabolicSet ParabolicSet::all(int n) {
  std::vector<int> idx;
  for (int i = 1; i < n; ++i) idx.push_back(i);
  return ParabolicSet(n, std::move(idx));
}

ParabolicSet ParabolicSet::maximal(int n, int d) {
  if (d < 1 || d >= n) throw PreconditionError("descent position must satisfy 1 <= d < n");
  std::vector<int> idx;
  for (int i = 1; i < n; ++i)
    if (i != d) idx.push_back(i);
  return ParabolicSet(n, std::move(idx));
}

ParabolicSet ParabolicSet::parse(int n, std::string_view text) {
  std::vector<int> idx;
  std::size_t begin = 0;
  while (begin <= text.size() && !text.empty()) {
    std::size_t end = text.find(',', begin);
    std::string_view token = text.substr(begin, end == std::string_view::npos ? end : end - begin);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw PreconditionError("invalid simple root index '" + std::string(token) + "'");
    idx.push_back(value);
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return ParabolicSet(n, std::move(idx));
}

std::vector<ParabolicSet> ParabolicSet::all_subsets(int n) {
  std::vector<ParabolicSet> out;
  const int roots = std::max(n - 1, 0);
  for (unsigned mask = 0; mask < (1u << roots); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < roots; ++i)
      if (mask & (1u << i)) idx.push_back(i + 1);
    out.emplace_back(n, std::move(idx));
  }
  return out;
}

bool ParabolicSet::contains(int i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

ParabolicSet ParabolicSet::complement() const {
  std::vector<int> idx;
  for (int i = 1; i < n_; ++i)
    if (!contains(i)) idx.push_back(i);
  return ParabolicSet(n_, std::move(idx));
}

ParabolicSet ParabolicSet::intersect(const ParabolicSet& other) const {
  if (other.n_ != n_) throw PreconditionError("rank mismatch between parabolic sets");
  std::vector<int> idx;
  std::set_intersection(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                        std::back_inserter(idx));
  return ParabolicSet(n_, std::move(idx));
}

ParabolicSet ParabolicSet::unite(const ParabolicSet& other) const {
  if (other.n_ != n_) throw PreconditionError("rank mismatch between parabolic sets");
  std::vector<int> idx;
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                 std::back_inserter(idx));
  return ParabolicSet(n_, std::move(idx));
}

bool ParabolicSet::is_subset_of(const ParabolicSet& other) const {
  if (other.n_ != n_) throw PreconditionError("rank mismatch between parabolic sets");
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
}

std::string ParabolicSet::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(indices_[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const ParabolicSet& s) { return os << '{' << s.to_string() << '}'; }

}  // namespace schub
