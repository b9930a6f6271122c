#include "schub/toroidal.hpp"

#include "schub/errors.hpp"
#include "schub/weyl.hpp"

namespace schub {

namespace {

void require_stable(const GrassmannSchubert& x, const ParabolicSet& I) {
  if (I.rank() != x.rank()) throw PreconditionError("rank mismatch between Levi roots and Schubert variety");
  if (!is_stable(x.permutation(), x.parabolic(), I))
    throw PreconditionError("X_" + x.permutation().to_string() + " is not stable under the Levi with roots {" +
                            I.to_string() + "}");
}

}  // namespace

std::vector<DivisorStability> divisor_stability(const GrassmannSchubert& x, const ParabolicSet& I) {
  require_stable(x, I);
  std::vector<DivisorStability> out;
  if (x.is_identity()) return out;
  const ParabolicSet complement = I.complement();
  const auto rs = runs(x);
  for (int l = 1; l <= static_cast<int>(rs.size()); ++l) {
    auto div = run_divisor(x, l);
    if (!div) continue;
    const int a = rs[static_cast<std::size_t>(l - 1)].start;
    out.push_back({std::move(*div), l, a, complement.contains(a - 1)});
  }
  return out;
}

ToroidalReport toroidal_necessary(const GrassmannSchubert& x, const ParabolicSet& I) {
  ToroidalReport report{x, levi_blocks(I), {}, Verdict::passes_necessary};
  const ParabolicSet J = x.parabolic();
  for (auto& entry : divisor_stability(x, I)) {
    DivisorRecord rec{entry.divisor, entry.run, entry.stable, Criterion::stable_root, std::nullopt};
    if (!entry.stable) {
      const HeadReport heads = heads_below(entry.divisor.permutation(), J, I);
      if (heads.heads.empty()) {
        rec.criterion = Criterion::no_head;
      } else {
        rec.criterion = Criterion::violated;
        rec.witness = heads.minimal_head;
        report.verdict = Verdict::fails;
      }
    }
    report.divisors.push_back(std::move(rec));
  }
  return report;
}

bool lmax_unique_head_check(const GrassmannSchubert& x) {
  if (!smooth_form(x)) throw PreconditionError("X_" + x.permutation().to_string() + " is not of smooth form");
  const ParabolicSet J = x.parabolic();
  const HeadReport heads = heads_below(x.permutation(), J, l_max(x.permutation(), J));
  return heads.heads.size() == 1 && heads.heads.front() == x.permutation();
}

bool no_stable_divisor_check(const GrassmannSchubert& x) {
  if (smooth_form(x)) throw PreconditionError("X_" + x.permutation().to_string() + " is of smooth form");
  const ParabolicSet J = x.parabolic();
  const ParabolicSet lmax = l_max(x.permutation(), J);
  for (const auto& div : schubert_divisors(x))
    if (is_stable(div.permutation(), J, lmax)) return false;
  const int dim = dimension(x);
  for (const auto& head : heads_below(x.permutation(), J, lmax).heads)
    if (!(head == x.permutation()) && length(head) > dim - 2) return false;
  return true;
}

}  // namespace schub
