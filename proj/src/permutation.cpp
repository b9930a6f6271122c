#include "schub/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <utility>

#include "schub/errors.hpp"

namespace schub {

namespace {

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t begin = 0;
  while (true) {
    std::size_t end = text.find(',', begin);
    std::string_view token = text.substr(begin, end == std::string_view::npos ? end : end - begin);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw PreconditionError("invalid " + std::string(what) + " entry '" + std::string(token) + "'");
    out.push_back(value);
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
  const int n = size();
  if (n == 0) throw PreconditionError("permutation must have positive rank");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw PreconditionError("not a permutation of 1.." + std::to_string(n) + ": " + to_string());
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw PreconditionError("permutation must have positive rank");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e), Unchecked{});
}

Permutation Permutation::parse(std::string_view text) {
  return Permutation(parse_int_list(text, "permutation"));
}

int Permutation::position_of(int value) const {
  auto it = std::find(entries_.begin(), entries_.end(), value);
  if (it == entries_.end()) throw PreconditionError("value out of range: " + std::to_string(value));
  return static_cast<int>(it - entries_.begin()) + 1;
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < size(); ++i)
    if (entries_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(entries_[static_cast<std::size_t>(i)] - 1)] = i + 1;
  return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::left_simple(int i) const {
  if (i < 1 || i >= size()) throw PreconditionError("simple reflection index out of range");
  std::vector<int> e = entries_;
  for (int& v : e) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return Permutation(std::move(e), Unchecked{});
}

Permutation Permutation::right_simple(int i) const {
  if (i < 1 || i >= size()) throw PreconditionError("simple reflection index out of range");
  return swap_positions(i, i + 1);
}

Permutation Permutation::swap_positions(int i, int j) const {
  if (i < 1 || j < 1 || i > size() || j > size()) throw PreconditionError("position out of range");
  std::vector<int> e = entries_;
  std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(e), Unchecked{});
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw PreconditionError("rank mismatch in product");
  std::vector<int> e(static_cast<std::size_t>(a.size()));
  for (int j = 1; j <= a.size(); ++j) e[static_cast<std::size_t>(j - 1)] = a(b(j));
  return Permutation(std::move(e), Permutation::Unchecked{});
}

std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << '[' << w.to_string() << ']'; }

bool length_lex_less(const Permutation& a, const Permutation& b) {
  auto inversions = [](const Permutation& w) {
    int c = 0;
    for (int i = 1; i <= w.size(); ++i)
      for (int j = i + 1; j <= w.size(); ++j) c += w(i) > w(j);
    return c;
  };
  const int la = inversions(a), lb = inversions(b);
  if (la != lb) return la < lb;
  return a < b;
}

}  // namespace schub
