#include "schub/grassmann.hpp"

#include <algorithm>

#include "schub/errors.hpp"
#include "schub/weyl.hpp"

namespace schub {

GrassmannSchubert::GrassmannSchubert(int d, Permutation w) : d_(d), w_(std::move(w)) {
  const int n = w_.size();
  if (d < 1 || d >= n) throw PreconditionError("descent position must satisfy 1 <= d < n");
  if (!in_quotient(w_, ParabolicSet::maximal(n, d)))
    throw PreconditionError(w_.to_string() + " is not a Grassmann permutation with descent at " + std::to_string(d));
  columns_.assign(w_.one_line().begin(), w_.one_line().begin() + d);
}

GrassmannSchubert GrassmannSchubert::from_columns(int n, std::vector<int> columns) {
  std::sort(columns.begin(), columns.end());
  const int d = static_cast<int>(columns.size());
  std::vector<int> e = columns;
  for (int v = 1; v <= n; ++v)
    if (!std::binary_search(columns.begin(), columns.end(), v)) e.push_back(v);
  if (static_cast<int>(e.size()) != n) throw PreconditionError("column set is not a subset of 1..n");
  return GrassmannSchubert(d, Permutation(std::move(e)));
}

std::vector<Run> runs(const GrassmannSchubert& x) {
  std::vector<Run> out;
  for (int c : x.columns()) {
    if (!out.empty() && out.back().start + out.back().extra + 1 == c)
      ++out.back().extra;
    else
      out.push_back({c, 0});
  }
  return out;
}

int dimension(const GrassmannSchubert& x) {
  int dim = 0;
  for (int i = 1; i <= x.descent(); ++i) dim += x.permutation()(i) - i;
  return dim;
}

std::optional<GrassmannSchubert> run_divisor(const GrassmannSchubert& x, int run_index) {
  const auto rs = runs(x);
  if (run_index < 1 || run_index > static_cast<int>(rs.size())) throw PreconditionError("run index out of range");
  const int a = rs[static_cast<std::size_t>(run_index - 1)].start;
  if (a == 1) return std::nullopt;
  std::vector<int> cols(x.columns().begin(), x.columns().end());
  std::replace(cols.begin(), cols.end(), a, a - 1);
  return GrassmannSchubert::from_columns(x.rank(), std::move(cols));
}

std::vector<GrassmannSchubert> schubert_divisors(const GrassmannSchubert& x) {
  if (x.is_identity()) throw PreconditionError("the identity has no Schubert divisors");
  std::vector<GrassmannSchubert> out;
  const int count = static_cast<int>(runs(x).size());
  for (int l = 1; l <= count; ++l)
    if (auto div = run_divisor(x, l)) out.push_back(std::move(*div));
  return out;
}

std::optional<SmoothForm> smooth_form(const GrassmannSchubert& x) {
  const auto rs = runs(x);
  const int d = x.descent();
  if (x.is_identity()) return SmoothForm{d, 0};
  if (rs.size() == 1) return SmoothForm{0, rs[0].start};  // start > 1 since not identity
  if (rs.size() == 2 && rs[0].start == 1) return SmoothForm{rs[0].extra + 1, rs[1].start};
  return std::nullopt;
}

std::vector<GrassmannSchubert> grassmann_elements(int n, int d) {
  check_rank_limit(n);
  if (d < 1 || d >= n) throw PreconditionError("descent position must satisfy 1 <= d < n");
  std::vector<GrassmannSchubert> out;
  std::vector<bool> choose(static_cast<std::size_t>(n), false);
  std::fill(choose.begin(), choose.begin() + d, true);
  do {
    std::vector<int> cols;
    for (int i = 0; i < n; ++i)
      if (choose[static_cast<std::size_t>(i)]) cols.push_back(i + 1);
    out.push_back(GrassmannSchubert::from_columns(n, std::move(cols)));
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return out;
}

}  // namespace schub
