#include "schub/bp.hpp"

#include <algorithm>

#include "schub/errors.hpp"
#include "schub/weyl.hpp"

namespace schub {

namespace {

void require_decomposable(const Permutation& w, const ParabolicSet& jp, const ParabolicSet& k) {
  if (w.size() != jp.rank() || w.size() != k.rank()) throw PreconditionError("rank mismatch in parabolic decomposition");
  if (!jp.is_subset_of(k)) throw PreconditionError("J_P = {" + jp.to_string() + "} is not contained in K = {" + k.to_string() + "}");
  if (!in_quotient(w, jp)) throw PreconditionError(w.to_string() + " is not in W^{J_P}");
}

bool rationally_smooth_chain(const Permutation& w, const ParabolicSet& jp, const ParabolicSet& ambient) {
  if (w.is_identity()) return true;
  const ParabolicSet j = jp.intersect(ambient);
  for (int d : ambient.indices()) {
    if (j.contains(d)) continue;
    std::vector<int> rest;
    for (int i : ambient.indices())
      if (i != d) rest.push_back(i);
    const ParabolicSet k(w.size(), std::move(rest));
    const auto [v, u] = parabolic_decompose(w, j, k);
    if (v.is_identity()) continue;  // w already lives in the smaller Levi; another d handles it
    if (!poincare_factorizes(w, j, k)) continue;
    if (!poincare_polynomial(v, k).is_palindromic()) continue;
    if (rationally_smooth_chain(u, j, k)) return true;
  }
  return false;
}

}  // namespace

ParabolicFactors parabolic_decompose(const Permutation& w, const ParabolicSet& jp, const ParabolicSet& k) {
  require_decomposable(w, jp, k);
  Permutation v = min_coset_rep(w, k);
  Permutation u = v.inverse() * w;
  return {std::move(v), std::move(u)};
}

bool is_bp_maximality(const Permutation& w, const ParabolicSet& jp, const ParabolicSet& k) {
  const auto [v, u] = parabolic_decompose(w, jp, k);
  for (const auto& x : lower_interval(w, jp)) {
    if (x == u || !support(x).is_subset_of(k)) continue;
    if (bruhat_leq(u, x)) return false;
  }
  return true;
}

bool is_bp_support(const Permutation& w, const ParabolicSet& jp, const ParabolicSet& k) {
  const auto [v, u] = parabolic_decompose(w, jp, k);
  const Permutation top = u * longest_element(jp);
  return support(v).intersect(k).is_subset_of(descents(top, Side::left));
}

bool poincare_factorizes(const Permutation& w, const ParabolicSet& jp, const ParabolicSet& k) {
  const auto [v, u] = parabolic_decompose(w, jp, k);
  return poincare_polynomial(w, jp) == poincare_polynomial(v, k) * poincare_polynomial(u, jp);
}

BPDecomposition bp_decompose(const Permutation& w, const ParabolicSet& jp, const ParabolicSet& k) {
  auto [v, u] = parabolic_decompose(w, jp, k);
  return BPDecomposition{w,
                         jp,
                         k,
                         std::move(v),
                         std::move(u),
                         is_bp_maximality(w, jp, k),
                         is_bp_support(w, jp, k),
                         poincare_factorizes(w, jp, k)};
}

DivisorProjection project_divisor(const Permutation& tau, const Permutation& w, const ParabolicSet& jp,
                                  const ParabolicSet& k) {
  const auto [v, u] = parabolic_decompose(w, jp, k);
  const auto covers = lower_covers(w, jp);
  if (!std::binary_search(covers.begin(), covers.end(), tau))
    throw PreconditionError(tau.to_string() + " does not index a Schubert divisor of X_" + w.to_string());

  DivisorProjection out{min_coset_rep(tau, k), ProjectionKind::neither, std::nullopt, false};
  if (out.image == v) {
    out.kind = ProjectionKind::onto;
  } else if (length(out.image) + 1 == length(v) && bruhat_leq(out.image, v)) {
    out.kind = ProjectionKind::divisor;
  }
  for (int i = 1; i < w.size(); ++i) {
    if (w.right_simple(i) == tau) {
      out.right_simple = i;
      out.right_simple_outside_k = !k.contains(i);
      break;
    }
  }
  return out;
}

TransportReport toroidal_transport(const Permutation& w, const ParabolicSet& jp, int d, const ParabolicSet& I) {
  const ParabolicSet k = ParabolicSet::maximal(w.size(), d);
  TransportReport report{bp_decompose(w, jp, k), false, false, std::nullopt, TransportVerdict::not_applicable};
  report.stable = is_stable(w, jp, I);
  // Type A: rational smoothness and smoothness coincide.
  report.smooth = poincare_polynomial(w, jp).is_palindromic();
  if (!report.stable || !report.smooth || !report.decomposition.is_bp()) return report;

  // X_{vQ} is the image of an L_I-stable variety under an equivariant map, hence L_I-stable.
  const GrassmannSchubert base(d, report.decomposition.v);
  report.base = toroidal_necessary(base, I);
  report.verdict = report.base->verdict == Verdict::fails ? TransportVerdict::certified_non_toroidal
                                                          : TransportVerdict::no_conclusion;
  return report;
}

bool rationally_smooth_by_bp_chain(const Permutation& w, const ParabolicSet& jp) {
  if (!in_quotient(w, jp)) throw PreconditionError(w.to_string() + " is not in W^{J_P}");
  return rationally_smooth_chain(w, jp, ParabolicSet::all(w.size()));
}

}  // namespace schub
